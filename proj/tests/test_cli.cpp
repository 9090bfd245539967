// SPDX-License-Identifier: MIT
//
// End-to-end checks of the ghzec command-line driver: exit codes, report
// shape, determinism, config-file precedence, and circuit export.  The
// binary path arrives through the GHZEC_CLI_PATH compile definition.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#ifndef _WIN32
#include <sys/wait.h>
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string out_path = "cli_stdout_" + std::to_string(counter) + ".txt";
  const std::string err_path = "cli_stderr_" + std::to_string(counter) + ".txt";
  ++counter;
  const std::string cmd = std::string(GHZEC_CLI_PATH) + " " + args + " > " +
                          out_path + " 2> " + err_path;
  const int status = std::system(cmd.c_str());
#ifdef _WIN32
  const int code = status;
#else
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#endif
  RunResult r{code, slurp(out_path), slurp(err_path)};
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

// Drops every line that mentions a wall-clock field, so byte comparisons
// only see the deterministic part of a report.
std::string without_elapsed(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string kept;
  while (std::getline(in, line)) {
    if (line.find("elapsed_ms") != std::string::npos) continue;
    kept += line;
    kept += '\n';
  }
  return kept;
}

}  // namespace

TEST_CASE("usage problems exit with code 2") {
  CHECK(run_cli("").exit_code == 2);                      // missing scenario
  CHECK(run_cli("frobnicate").exit_code == 2);            // unknown scenario
  CHECK(run_cli("single-run --k 2").exit_code == 2);      // too few qubits
  CHECK(run_cli("single-run --k 3 --erase 9:1").exit_code == 2);
  CHECK(run_cli("single-run --k 3 --erase bogus").exit_code == 2);
  CHECK(run_cli("single-run --k 3 --erase 0:1,0:2").exit_code == 2);
  CHECK(run_cli("sweep --k 3 --model nosuch").exit_code == 2);
  CHECK(run_cli("sweep --k 3 --format yaml").exit_code == 2);
  CHECK(run_cli("sweep --k 3 --trials 0").exit_code == 2);
  CHECK(run_cli("export-circuit --k 3 --which rec").exit_code == 2);
  CHECK(run_cli("export-circuit --k 3 --which nosuch").exit_code == 2);
}

TEST_CASE("oversized registers exit with code 3") {
  CHECK(run_cli("sweep --k 6").exit_code == 3);
  CHECK(run_cli("encode-table --k 7").exit_code == 3);
}

TEST_CASE("--help exits 0 and names the scenarios") {
  const RunResult r = run_cli("--help");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("encode-table") != std::string::npos);
  CHECK(r.out.find("sweep") != std::string::npos);
}

TEST_CASE("encode-table reports a perfect table") {
  const RunResult r = run_cli("encode-table --k 3");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["config"]["scenario"] == "encode-table");
  CHECK(doc["config"]["k"] == 3);
  REQUIRE(doc["cases"].size() == 8);
  CHECK(doc["cases"][5]["word"] == "101");
  for (const auto& row : doc["cases"]) {
    CHECK(row["max_abs_deviation"].get<double>() <= 1e-12);
  }
  CHECK(doc["summary"]["pass"] == true);
}

TEST_CASE("single-run repairs a mixed per-event pattern") {
  // k = 4 tolerates two erasures (t = 2).
  const RunResult r = run_cli(
      "single-run --k 4 --erase 0:2:bit_phase_flip,1:1:leak:9 --seed 5");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["config"]["scenario"] == "single-run");
  REQUIRE(doc["cases"].size() == 1);
  CHECK(doc["cases"][0]["pattern"] == "0:2,1:1");
  CHECK(doc["cases"][0]["model"] == "bit_phase_flip,leak:9");
  CHECK(doc["cases"][0]["trial_seed"] == 5);
  CHECK(doc["cases"][0]["fidelity"].get<double>() >= 1.0 - 1e-10);
  CHECK(doc["summary"]["pass"] == true);
}

TEST_CASE("single-run accepts a basis-word message") {
  const RunResult r =
      run_cli("single-run --k 3 --message 011 --erase 0:3 --model bit_flip");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["config"]["message"] == "011");
  CHECK(doc["cases"][0]["fidelity"].get<double>() >= 1.0 - 1e-10);

  CHECK(run_cli("single-run --k 3 --message 01").exit_code == 2);
  CHECK(run_cli("single-run --k 3 --message 012").exit_code == 2);
}

TEST_CASE("--scenario flag form works, with short model aliases") {
  const RunResult r =
      run_cli("--k 5 --scenario single-run --erase 0:1:phase,1:5:phase");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["cases"][0]["pattern"] == "0:1,1:5");
  CHECK(doc["cases"][0]["model"] == "phase_flip,phase_flip");
  CHECK(doc["cases"][0]["fidelity"].get<double>() >= 1.0 - 1e-10);
}

TEST_CASE("sweep reports are deterministic and thread-independent") {
  const std::string base =
      "sweep --k 3 --model identity,phase_flip --trials 2 --seed 11";
  const RunResult first = run_cli(base + " --threads 1 --output sweep_a.json");
  const RunResult again = run_cli(base + " --threads 1 --output sweep_b.json");
  const RunResult wide = run_cli(base + " --threads 3 --output sweep_c.json");
  REQUIRE(first.exit_code == 0);
  REQUIRE(again.exit_code == 0);
  REQUIRE(wide.exit_code == 0);

  const std::string a = slurp("sweep_a.json");
  const std::string b = slurp("sweep_b.json");
  const std::string c = slurp("sweep_c.json");
  std::remove("sweep_a.json");
  std::remove("sweep_b.json");
  std::remove("sweep_c.json");

  // Same command twice: byte-identical outside the wall-clock fields.
  CHECK(without_elapsed(a) == without_elapsed(b));

  // Different thread count: identical cases, fidelities, and summary.
  const auto doc_a = nlohmann::json::parse(a);
  const auto doc_c = nlohmann::json::parse(c);
  REQUIRE(doc_a["cases"].size() == 7 * 2 * 2);
  REQUIRE(doc_a["cases"].size() == doc_c["cases"].size());
  for (std::size_t i = 0; i < doc_a["cases"].size(); ++i) {
    CHECK(doc_a["cases"][i]["pattern"] == doc_c["cases"][i]["pattern"]);
    CHECK(doc_a["cases"][i]["model"] == doc_c["cases"][i]["model"]);
    CHECK(doc_a["cases"][i]["trial_seed"] == doc_c["cases"][i]["trial_seed"]);
    CHECK(doc_a["cases"][i]["fidelity"].get<double>() ==
          doc_c["cases"][i]["fidelity"].get<double>());
  }
  CHECK(doc_a["summary"]["min_fidelity"].get<double>() ==
        doc_c["summary"]["min_fidelity"].get<double>());
  CHECK(doc_a["summary"]["pass"] == true);
}

TEST_CASE("sweep honours the GHZ_ERASURE_THREADS environment variable") {
#ifndef _WIN32
  setenv("GHZ_ERASURE_THREADS", "2", 1);
  const RunResult r =
      run_cli("sweep --k 3 --model identity --trials 1 --seed 0");
  unsetenv("GHZ_ERASURE_THREADS");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["config"]["threads"] == 2);
  CHECK(doc["summary"]["pass"] == true);
#endif
}

TEST_CASE("sweep emits CSV when asked") {
  const RunResult r = run_cli(
      "sweep --k 3 --model identity --trials 1 --seed 0 --threads 1 "
      "--format csv");
  REQUIRE(r.exit_code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 1 + 7);  // header + one row per pattern
  CHECK(lines[0] == "pattern,model,trial_seed,fidelity,elapsed_ms");
  CHECK(lines[1].rfind("none,identity,", 0) == 0);
}

TEST_CASE("config file supplies defaults and flags override it") {
  {
    std::ofstream cfg("cli_config.txt");
    cfg << "k=3\n"
        << "model=phase_flip\n"
        << "trials=1\n"
        << "seed=9\n"
        << "threads=1\n";
  }
  const RunResult base = run_cli("sweep --config cli_config.txt");
  REQUIRE(base.exit_code == 0);
  const auto doc = nlohmann::json::parse(base.out);
  CHECK(doc["config"]["k"] == 3);
  CHECK(doc["config"]["model"] == "phase_flip");
  CHECK(doc["config"]["trials"] == 1);
  CHECK(doc["config"]["seed"] == 9);

  const RunResult flag = run_cli("sweep --config cli_config.txt --model identity");
  REQUIRE(flag.exit_code == 0);
  CHECK(nlohmann::json::parse(flag.out)["config"]["model"] == "identity");
  std::remove("cli_config.txt");
}

TEST_CASE("export-circuit prints the frozen encoder") {
  const RunResult r = run_cli("export-circuit --k 3 --which enc");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out ==
        "QUBITS 6\n"
        "CX 0 3\n"
        "CX 1 4\n"
        "CX 2 5\n"
        "H 2\n"
        "H 5\n"
        "CX 2 0\n"
        "CX 2 1\n"
        "CX 5 3\n"
        "CX 5 4\n");
}

TEST_CASE("export-circuit prints the frozen repair sequence") {
  const RunResult r = run_cli("export-circuit --k 3 --which rec --erase 0:2");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out ==
        "QUBITS 9\n"
        "CX 7 0\n"
        "CX 7 2\n"
        "CX 6 0\n"
        "CCX 7 8 0\n"
        "CZ 8 0\n"
        "CCX 7 8 0\n");
}

TEST_CASE("export-circuit writes the decoder to a file") {
  const RunResult r = run_cli(
      "export-circuit --k 3 --which dec --erase 0:1 --output circuit.txt");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.empty());
  const std::string text = slurp("circuit.txt");
  std::remove("circuit.txt");
  CHECK(text.rfind("QUBITS 9\n", 0) == 0);
  CHECK(text.find("CX") != std::string::npos);
}

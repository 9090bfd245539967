// SPDX-License-Identifier: MIT
//
// ghzec — command-line driver for the redundant-GHZ erasure codec.
//
// Scenarios:
//   encode-table    compare the gate encoder against the closed form on
//                   every k-qubit basis word
//   single-run      one encode -> erasure -> restore pipeline
//   sweep           every legal erasure pattern x model x trial
//   export-circuit  print a gate sequence as plain text
//
// Exit codes: 0 pass, 1 ran but failed the fidelity bar, 2 usage or
// configuration error, 3 requested size exceeds the simulable range.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ghzec/channel.hpp"
#include "ghzec/circuit_io.hpp"
#include "ghzec/codec.hpp"
#include "ghzec/errors.hpp"
#include "ghzec/oracle.hpp"
#include "ghzec/report.hpp"
#include "ghzec/statevector.hpp"

namespace {

struct CliOptions {
  std::string scenario;
  int k = 3;
  std::string erase;
  std::string model = "identity";
  std::string message = "random";
  int trials = 5;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string which = "enc";
  std::string output;
  std::string format = "json";
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t from = 0;
  while (true) {
    const std::size_t at = text.find(sep, from);
    if (at == std::string::npos) {
      parts.push_back(text.substr(from));
      return parts;
    }
    parts.push_back(text.substr(from, at - from));
    from = at + 1;
  }
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const std::uint64_t value = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw ghzec::Error("cannot parse " + what + " '" + text + "'");
  }
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw ghzec::Error("cannot parse " + what + " '" + text + "'");
  }
}

ghzec::CorruptionModel parse_model_token(const std::string& token) {
  using ghzec::CorruptionModel;
  if (token == "identity" || token == "id") return CorruptionModel::identity();
  if (token == "bit_flip" || token == "bit") return CorruptionModel::bit_flip();
  if (token == "phase_flip" || token == "phase") {
    return CorruptionModel::phase_flip();
  }
  if (token == "bit_phase_flip" || token == "bit_phase" ||
      token == "bitphase") {
    return CorruptionModel::bit_phase_flip();
  }
  if (token == "leak") return CorruptionModel::entangling_leak(1);
  if (token.rfind("leak:", 0) == 0) {
    return CorruptionModel::entangling_leak(
        parse_u64(token.substr(5), "leak seed"));
  }
  throw ghzec::Error("unknown corruption model '" + token + "'");
}

std::vector<ghzec::CorruptionModel> parse_model_list(const std::string& text) {
  std::vector<ghzec::CorruptionModel> models;
  for (const std::string& token : split(text, ',')) {
    models.push_back(parse_model_token(token));
  }
  return models;
}

struct RawErasure {
  int block;
  int position;
  std::optional<ghzec::CorruptionModel> model;
};

// "block:position[:model]" tokens joined by commas; the model part may
// itself contain a colon ("leak:7").
std::vector<RawErasure> parse_erasures(const std::string& text) {
  std::vector<RawErasure> raw;
  if (text.empty() || text == "none") return raw;
  for (const std::string& token : split(text, ',')) {
    const std::vector<std::string> parts = split(token, ':');
    if (parts.size() < 2) {
      throw ghzec::Error("bad erasure token '" + token +
                         "' (want block:position[:model])");
    }
    RawErasure e{parse_int(parts[0], "erasure block"),
                 parse_int(parts[1], "erasure position"), std::nullopt};
    if (parts.size() > 2) {
      std::string model_token = parts[2];
      for (std::size_t i = 3; i < parts.size(); ++i) {
        model_token += ':';
        model_token += parts[i];
      }
      e.model = parse_model_token(model_token);
    }
    raw.push_back(e);
  }
  return raw;
}

int resolve_threads(int cli_threads) {
  if (cli_threads > 0) return cli_threads;
  if (const char* env = std::getenv("GHZ_ERASURE_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != nullptr && *end == '\0' && value > 0) {
      return static_cast<int>(value);
    }
  }
  return 0;  // let the sweep pick hardware concurrency
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ghzec::Error("cannot open output file '" + path + "'");
  out << text;
}

std::string word_bits(std::uint64_t word, int k) {
  std::string bits(k, '0');
  for (int q = 0; q < k; ++q) {
    if ((word >> (k - 1 - q)) & 1ull) bits[q] = '1';
  }
  return bits;
}

ghzec::State make_message(const CliOptions& opt) {
  if (opt.message == "random") return ghzec::random_state(opt.k, opt.seed);
  if (static_cast<int>(opt.message.size()) == opt.k &&
      opt.message.find_first_not_of("01") == std::string::npos) {
    std::uint64_t index = 0;
    for (char c : opt.message) index = (index << 1) | (c == '1');
    return ghzec::State::basis(opt.k, index);
  }
  throw ghzec::Error("bad --message '" + opt.message +
                     "' (want 'random' or a length-k bitstring)");
}

int run_encode_table(const CliOptions& opt) {
  const ghzec::EncodingTableResult result = ghzec::verify_encoding_table(opt.k);
  if (opt.format == "csv") {
    std::string csv = "word,max_abs_deviation\n";
    char line[64];
    for (std::size_t i = 0; i < result.per_word_deviation.size(); ++i) {
      std::snprintf(line, sizeof line, "%.17g", result.per_word_deviation[i]);
      csv += word_bits(i, opt.k) + "," + line + "\n";
    }
    write_text(opt.output, csv);
  } else {
    nlohmann::ordered_json doc;
    doc["config"] = {{"scenario", "encode-table"}, {"k", opt.k}};
    doc["cases"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < result.per_word_deviation.size(); ++i) {
      doc["cases"].push_back({{"word", word_bits(i, opt.k)},
                              {"max_abs_deviation",
                               result.per_word_deviation[i]}});
    }
    doc["summary"] = {{"max_abs_deviation", result.max_abs_deviation},
                      {"pass", result.pass}};
    write_text(opt.output, doc.dump(2) + "\n");
  }
  return result.pass ? 0 : 1;
}

int run_single(const CliOptions& opt) {
  const ghzec::CodeLayout layout(opt.k);
  const std::vector<ghzec::CorruptionModel> defaults =
      parse_model_list(opt.model);
  if (defaults.size() != 1) {
    throw ghzec::Error("single-run takes exactly one --model");
  }
  std::vector<ghzec::ErasureEvent> events;
  for (const RawErasure& raw : parse_erasures(opt.erase)) {
    events.push_back(
        {raw.block, raw.position, raw.model.value_or(defaults[0])});
  }
  events = ghzec::make_erasure_events(layout, std::move(events));
  const ghzec::State message = make_message(opt);

  const auto start = std::chrono::steady_clock::now();
  const double fidelity = ghzec::pipeline_fidelity(message, layout, events);
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();

  std::string model_names;
  for (const ghzec::ErasureEvent& e : events) {
    if (!model_names.empty()) model_names += ',';
    model_names += e.model.name();
  }
  if (model_names.empty()) model_names = defaults[0].name();

  const ghzec::ErasureFlags flags = ghzec::flags_from_events(layout, events);
  ghzec::Report report;
  report.config["scenario"] = "single-run";
  report.config["k"] = opt.k;
  report.config["erase"] = opt.erase.empty() ? "none" : opt.erase;
  report.config["model"] = opt.model;
  report.config["message"] = opt.message;
  report.config["seed"] = opt.seed;
  report.cases.push_back({ghzec::pattern_label(flags.entries()), model_names,
                          opt.seed, fidelity, ms});
  report.finalize();
  write_text(opt.output, opt.format == "csv" ? report.to_csv()
                                             : report.to_json_text());
  return report.summary.pass ? 0 : 1;
}

int run_sweep(const CliOptions& opt) {
  ghzec::SweepOptions sweep;
  sweep.k = opt.k;
  sweep.models = parse_model_list(opt.model);
  sweep.trials = opt.trials;
  sweep.seed = opt.seed;
  sweep.threads = resolve_threads(opt.threads);
  const ghzec::Report report = ghzec::sweep_all_patterns(sweep);
  write_text(opt.output, opt.format == "csv" ? report.to_csv()
                                             : report.to_json_text());
  return report.summary.pass ? 0 : 1;
}

int run_export(const CliOptions& opt) {
  const ghzec::CodeLayout layout(opt.k);
  ghzec::GateSequence seq;
  int width = layout.code_qubits();
  if (opt.which == "red") {
    seq = ghzec::build_u_red(layout);
  } else if (opt.which == "hadamard") {
    seq = ghzec::build_hadamard_layer(layout);
  } else if (opt.which == "ghz") {
    seq = ghzec::build_u_ghz(layout);
  } else if (opt.which == "enc") {
    seq = ghzec::build_u_enc(layout);
  } else if (opt.which == "dec") {
    std::vector<ghzec::ErasureFlag> flags;
    for (const RawErasure& raw : parse_erasures(opt.erase)) {
      flags.push_back({raw.block, raw.position});
    }
    seq = ghzec::build_u_dec(layout,
                             ghzec::ErasureFlags(std::move(flags), layout));
    width = layout.total_qubits();
  } else if (opt.which == "rec") {
    const std::vector<RawErasure> raw = parse_erasures(opt.erase);
    if (raw.size() != 1) {
      throw ghzec::Error(
          "--which rec needs --erase with exactly one block:position entry");
    }
    seq = ghzec::build_u_rec(layout, raw[0].position, raw[0].block);
    width = layout.total_qubits();
  } else {
    throw ghzec::Error("unknown --which '" + opt.which + "'");
  }
  write_text(opt.output, ghzec::to_circuit_text(seq, width));
  return 0;
}

int run_scenario(const CliOptions& opt) {
  if (opt.scenario.empty()) {
    throw ghzec::Error(
        "missing scenario (encode-table | single-run | sweep | "
        "export-circuit)");
  }
  if (opt.k < 3) {
    throw ghzec::Error("--k must be at least 3 (two erasure flags need "
                       "three message qubits)");
  }
  if (opt.trials < 1) throw ghzec::Error("--trials must be positive");
  if (opt.scenario == "encode-table") return run_encode_table(opt);
  if (opt.scenario == "single-run") return run_single(opt);
  if (opt.scenario == "sweep") return run_sweep(opt);
  if (opt.scenario == "export-circuit") return run_export(opt);
  throw ghzec::Error("unknown scenario '" + opt.scenario + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CliOptions opt;
  CLI::App app{
      "ghzec — redundant-GHZ erasure codec: encode k message qubits into "
      "t+1 blocks (t = k/2 rounded down), corrupt flagged positions, and "
      "verify exact recovery."};
  app.set_config("--config", "",
                 "Read option defaults from a key=value file "
                 "(command-line flags win)");
  app.add_option("scenario,--scenario", opt.scenario,
                 "encode-table | single-run | sweep | export-circuit");
  app.add_option("--k", opt.k, "Message qubits (>= 3)")
      ->capture_default_str();
  app.add_option("--erase", opt.erase,
                 "Erasures as block:position[:model], comma separated");
  app.add_option("--model", opt.model,
                 "Corruption model(s): identity, bit_flip, phase_flip, "
                 "bit_phase_flip, leak[:seed]; comma separated for sweeps")
      ->capture_default_str();
  app.add_option("--message", opt.message,
                 "'random' (seeded) or a length-k bitstring")
      ->capture_default_str();
  app.add_option("--trials", opt.trials,
                 "Random messages per sweep case")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Root seed for message streams")
      ->capture_default_str();
  app.add_option("--threads", opt.threads,
                 "Sweep worker threads (0 = GHZ_ERASURE_THREADS or all "
                 "cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--which", opt.which,
                 "Circuit to export: red, hadamard, ghz, enc, dec, rec")
      ->capture_default_str();
  app.add_option("--output", opt.output, "Write to this file (default stdout)");
  app.add_option("--format", opt.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run_scenario(opt);
  } catch (const ghzec::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "ghzec/circuit_io.hpp"
#include "ghzec/codec.hpp"
#include "ghzec/errors.hpp"

using namespace ghzec;

TEST_CASE("golden text for the k=3 encoder") {
  const CodeLayout l(3);
  const std::string want =
      "QUBITS 6\n"
      "CX 0 3\n"
      "CX 1 4\n"
      "CX 2 5\n"
      "H 2\n"
      "H 5\n"
      "CX 2 0\n"
      "CX 2 1\n"
      "CX 5 3\n"
      "CX 5 4\n";
  CHECK(to_circuit_text(build_u_enc(l), l.code_qubits()) == want);
}

TEST_CASE("golden text for a k=3 repair sequence") {
  const CodeLayout l(3);
  const std::string want =
      "QUBITS 9\n"
      "CX 7 0\n"
      "CX 7 2\n"
      "CX 6 0\n"
      "CCX 7 8 0\n"
      "CZ 8 0\n"
      "CCX 7 8 0\n";
  CHECK(to_circuit_text(build_u_rec(l, 2, 0), l.total_qubits()) == want);
}

TEST_CASE("export is deterministic") {
  const CodeLayout l(5);
  const GateSequence seq = build_u_enc(l);
  CHECK(to_circuit_text(seq, l.code_qubits()) ==
        to_circuit_text(seq, l.code_qubits()));
}

TEST_CASE("custom-matrix gates are rejected") {
  GateSequence seq;
  seq.append(Gate::unitary1(0, std::array<cdouble, 4>{0, 1, 1, 0}));
  CHECK_THROWS_AS(to_circuit_text(seq, 2), InvalidGateError);
}

TEST_CASE("gates outside the declared register are rejected") {
  GateSequence seq;
  seq.append(Gate::h(3));
  CHECK_THROWS_AS(to_circuit_text(seq, 3), InvalidGateError);
}

TEST_CASE("empty sequence is just the header") {
  CHECK(to_circuit_text(GateSequence(), 4) == "QUBITS 4\n");
}

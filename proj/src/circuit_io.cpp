// SPDX-License-Identifier: MIT
#include "ghzec/circuit_io.hpp"

#include <ostream>
#include <sstream>

#include "ghzec/errors.hpp"

namespace ghzec {

void write_circuit_text(std::ostream& os, const GateSequence& seq,
                        int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw InvalidGateError("circuit header requires 1.." +
                           std::to_string(kMaxQubits) + " qubits");
  }
  for (const Gate& g : seq.gates) {
    for (int q : g.qubits()) {
      if (q < 0 || q >= n_qubits) {
        throw InvalidGateError("gate qubit " + std::to_string(q) +
                               " outside the declared " +
                               std::to_string(n_qubits) + "-qubit register");
      }
    }
  }
  os << "QUBITS " << n_qubits << "\n";
  for (const Gate& g : seq.gates) {
    switch (g.kind) {
      case GateKind::kH:
        os << "H " << g.q0 << "\n";
        break;
      case GateKind::kCnot:
        os << "CX " << g.q0 << " " << g.q1 << "\n";
        break;
      case GateKind::kCz:
        os << "CZ " << g.q0 << " " << g.q1 << "\n";
        break;
      case GateKind::kToffoli:
        os << "CCX " << g.q0 << " " << g.q1 << " " << g.q2 << "\n";
        break;
      case GateKind::kUnitary1:
      case GateKind::kUnitary2:
        throw InvalidGateError(
            "custom-matrix gates have no text representation");
    }
  }
}

std::string to_circuit_text(const GateSequence& seq, int n_qubits) {
  std::ostringstream os;
  write_circuit_text(os, seq, n_qubits);
  return os.str();
}

}  // namespace ghzec

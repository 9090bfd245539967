// SPDX-License-Identifier: MIT
#pragma once

#include <iosfwd>
#include <string>

#include "ghzec/statevector.hpp"

namespace ghzec {

/// Renders a sequence as plain text: a "QUBITS n" header, then one line per
/// gate ("H q", "CX c t", "CCX c0 c1 t", "CZ a b").  Output is fully
/// deterministic.  Custom-matrix gates have no text form and are rejected
/// with InvalidGateError, as are gates outside the declared register.
void write_circuit_text(std::ostream& os, const GateSequence& seq,
                        int n_qubits);

std::string to_circuit_text(const GateSequence& seq, int n_qubits);

}  // namespace ghzec

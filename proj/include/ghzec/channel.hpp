// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ghzec/codec.hpp"
#include "ghzec/statevector.hpp"

namespace ghzec {

/// How an erased qubit interacts with its fresh environment qubit.  Every
/// model is a two-qubit unitary on (erased qubit, environment); since the
/// code never reads the erased site again, any unitary here is repairable.
enum class CorruptionKind {
  kIdentity,
  kBitFlip,        // X on the erased qubit
  kPhaseFlip,      // Z on the erased qubit
  kBitPhaseFlip,   // XZ on the erased qubit
  kEntanglingLeak, // seeded Haar-like 4x4 on (erased qubit, environment)
};

struct CorruptionModel {
  CorruptionKind kind = CorruptionKind::kIdentity;
  std::uint64_t seed = 0;  ///< stream id for kEntanglingLeak, ignored otherwise

  static CorruptionModel identity();
  static CorruptionModel bit_flip();
  static CorruptionModel phase_flip();
  static CorruptionModel bit_phase_flip();
  static CorruptionModel entangling_leak(std::uint64_t seed);

  /// Stable token: "identity", "bit_flip", "phase_flip", "bit_phase_flip",
  /// or "leak:<seed>".
  std::string name() const;
};

/// Seeded 4x4 unitary: Gram-Schmidt orthonormalization of an i.i.d. complex
/// Gaussian matrix.  Deterministic per seed; unitary within 1e-12.
std::array<cdouble, 16> random_leak_unitary(std::uint64_t seed);

/// One flagged erasure event on the channel.
struct ErasureEvent {
  int block;              ///< damaged code block, 0..t
  int position;           ///< 1-based erased position inside the block
  CorruptionModel model;
  int env_qubit = -1;     ///< global index of the appended environment qubit,
                          ///< assigned by make_erasure_events
};

/// Validates and canonicalizes events: distinct blocks, ranges checked,
/// at most t events; sorted by block, env_qubit set to
/// layout.code_qubits() + ordinal.  Environment qubits always sit after the
/// code (and, later, after the scratch block), so codec indices never move.
std::vector<ErasureEvent> make_erasure_events(const CodeLayout& layout,
                                              std::vector<ErasureEvent> events);

/// Applies the erasure channel to an encoded state: appends one |0>
/// environment qubit per event (in canonical block order), then applies each
/// event's corruption unitary to (erased qubit, its environment qubit).
/// The input must be exactly the encoded code_qubits() register.
State apply_erasure(const State& s, const CodeLayout& layout,
                    std::span<const ErasureEvent> events);

/// The erasure flags announced to the decoder for a set of events.
ErasureFlags flags_from_events(const CodeLayout& layout,
                               std::span<const ErasureEvent> events);

}  // namespace ghzec

// SPDX-License-Identifier: MIT
#include "ghzec/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "ghzec/rng.hpp"

namespace ghzec {

CorruptionModel CorruptionModel::identity() {
  return {CorruptionKind::kIdentity};
}
CorruptionModel CorruptionModel::bit_flip() {
  return {CorruptionKind::kBitFlip};
}
CorruptionModel CorruptionModel::phase_flip() {
  return {CorruptionKind::kPhaseFlip};
}
CorruptionModel CorruptionModel::bit_phase_flip() {
  return {CorruptionKind::kBitPhaseFlip};
}
CorruptionModel CorruptionModel::entangling_leak(std::uint64_t seed) {
  return {CorruptionKind::kEntanglingLeak, seed};
}

std::string CorruptionModel::name() const {
  switch (kind) {
    case CorruptionKind::kIdentity:
      return "identity";
    case CorruptionKind::kBitFlip:
      return "bit_flip";
    case CorruptionKind::kPhaseFlip:
      return "phase_flip";
    case CorruptionKind::kBitPhaseFlip:
      return "bit_phase_flip";
    case CorruptionKind::kEntanglingLeak:
      return "leak:" + std::to_string(seed);
  }
  return "unknown";
}

std::array<cdouble, 16> random_leak_unitary(std::uint64_t seed) {
  SplitMix64 g(seed);
  std::array<cdouble, 16> m;
  for (cdouble& c : m) c = g.complex_gaussian();
  // Two rounds of modified Gram-Schmidt over the columns; plenty for 4x4.
  for (int c = 0; c < 4; ++c) {
    for (int round = 0; round < 2; ++round) {
      for (int p = 0; p < c; ++p) {
        cdouble overlap = 0.0;
        for (int r = 0; r < 4; ++r) {
          overlap += std::conj(m[4 * r + p]) * m[4 * r + c];
        }
        for (int r = 0; r < 4; ++r) m[4 * r + c] -= overlap * m[4 * r + p];
      }
    }
    double sq = 0.0;
    for (int r = 0; r < 4; ++r) sq += std::norm(m[4 * r + c]);
    const double nr = std::sqrt(sq);
    for (int r = 0; r < 4; ++r) m[4 * r + c] /= nr;
  }
  return m;
}

std::vector<ErasureEvent> make_erasure_events(const CodeLayout& layout,
                                              std::vector<ErasureEvent> events) {
  if (static_cast<int>(events.size()) > layout.t()) {
    throw BudgetError("the k=" + std::to_string(layout.k()) +
                      " code tolerates " + std::to_string(layout.t()) +
                      " erasures, got " + std::to_string(events.size()));
  }
  for (const ErasureEvent& e : events) {
    if (e.block < 0 || e.block > layout.t()) {
      throw InvalidPatternError("event block " + std::to_string(e.block) +
                                " outside 0.." + std::to_string(layout.t()));
    }
    if (e.position < 1 || e.position > layout.k()) {
      throw InvalidPatternError("event position " +
                                std::to_string(e.position) + " outside 1.." +
                                std::to_string(layout.k()));
    }
  }
  std::sort(events.begin(), events.end(),
            [](const ErasureEvent& a, const ErasureEvent& b) {
              return a.block < b.block;
            });
  for (std::size_t i = 1; i < events.size(); ++i) {
    if (events[i].block == events[i - 1].block) {
      throw InvalidPatternError("block " + std::to_string(events[i].block) +
                                " erased twice in one pattern");
    }
  }
  for (std::size_t i = 0; i < events.size(); ++i) {
    events[i].env_qubit = layout.code_qubits() + static_cast<int>(i);
  }
  return events;
}

State apply_erasure(const State& s, const CodeLayout& layout,
                    std::span<const ErasureEvent> events) {
  if (s.n_qubits() != layout.code_qubits()) {
    throw DimensionError("erasure channel expects the encoded " +
                         std::to_string(layout.code_qubits()) +
                         "-qubit register, got " +
                         std::to_string(s.n_qubits()) + " qubits");
  }
  const std::vector<ErasureEvent> canon = make_erasure_events(
      layout, std::vector<ErasureEvent>(events.begin(), events.end()));
  if (canon.empty()) return s;
  State out = insert_zero_qubits(s, layout.code_qubits(),
                                 static_cast<int>(canon.size()));
  for (const ErasureEvent& e : canon) {
    const int q = layout.global_index(e.block, e.position);
    switch (e.model.kind) {
      case CorruptionKind::kIdentity:
        break;
      case CorruptionKind::kBitFlip:
        out = apply_gate(std::move(out),
                         Gate::unitary1(q, {0, 1, 1, 0}));
        break;
      case CorruptionKind::kPhaseFlip:
        out = apply_gate(std::move(out),
                         Gate::unitary1(q, {1, 0, 0, -1}));
        break;
      case CorruptionKind::kBitPhaseFlip:
        out = apply_gate(std::move(out),
                         Gate::unitary1(q, {0, -1, 1, 0}));
        break;
      case CorruptionKind::kEntanglingLeak:
        out = apply_gate(std::move(out),
                         Gate::unitary2(q, e.env_qubit,
                                        random_leak_unitary(e.model.seed)));
        break;
    }
  }
  return out;
}

ErasureFlags flags_from_events(const CodeLayout& layout,
                               std::span<const ErasureEvent> events) {
  std::vector<ErasureFlag> flags;
  flags.reserve(events.size());
  for (const ErasureEvent& e : events) {
    flags.push_back({e.block, e.position});
  }
  return ErasureFlags(std::move(flags), layout);
}

}  // namespace ghzec

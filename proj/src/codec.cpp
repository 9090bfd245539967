// SPDX-License-Identifier: MIT
#include "ghzec/codec.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace ghzec {

namespace {

void check_flags_against(const CodeLayout& layout, const ErasureFlags& flags) {
  if (static_cast<int>(flags.size()) > layout.t()) {
    throw InvalidFlagsError("at most t=" + std::to_string(layout.t()) +
                            " erasures are repairable, got " +
                            std::to_string(flags.size()));
  }
  for (const ErasureFlag& f : flags.entries()) {
    if (f.block < 0 || f.block > layout.t()) {
      throw InvalidFlagsError("flag names block " + std::to_string(f.block) +
                              ", which is not a code block");
    }
    if (f.position < 1 || f.position > layout.k()) {
      throw InvalidFlagsError("flag position " + std::to_string(f.position) +
                              " outside 1.." + std::to_string(layout.k()));
    }
  }
}

}  // namespace

CodeLayout::CodeLayout(int message_qubits) : k_(message_qubits) {
  if (k_ < 3) {
    throw CapacityError("message register must hold at least 3 qubits, got " +
                        std::to_string(k_));
  }
  if (total_qubits() > kMaxQubits) {
    throw CapacityError("layout for k=" + std::to_string(k_) + " needs " +
                        std::to_string(total_qubits()) +
                        " qubits, beyond the simulable " +
                        std::to_string(kMaxQubits));
  }
}

int CodeLayout::global_index(int block, int position) const {
  if (block < 0 || block > restore_block()) {
    throw InvalidFlagsError("block " + std::to_string(block) +
                            " outside 0.." + std::to_string(restore_block()));
  }
  if (position < 1 || position > k_) {
    throw InvalidFlagsError("position " + std::to_string(position) +
                            " outside 1.." + std::to_string(k_));
  }
  return block * k_ + position - 1;
}

ErasureFlags::ErasureFlags(std::vector<ErasureFlag> flags,
                           const CodeLayout& layout)
    : flags_(std::move(flags)) {
  std::sort(flags_.begin(), flags_.end(),
            [](const ErasureFlag& a, const ErasureFlag& b) {
              return a.block < b.block;
            });
  for (std::size_t i = 1; i < flags_.size(); ++i) {
    if (flags_[i].block == flags_[i - 1].block) {
      throw InvalidFlagsError("block " + std::to_string(flags_[i].block) +
                              " flagged twice; one erasure per block");
    }
  }
  check_flags_against(layout, *this);
}

bool ErasureFlags::contains_block(int block) const noexcept {
  for (const ErasureFlag& f : flags_) {
    if (f.block == block) return true;
  }
  return false;
}

GateSequence build_u_red(const CodeLayout& layout) {
  GateSequence seq;
  for (int d = 1; d <= layout.t(); ++d) {
    for (int i = 1; i <= layout.k(); ++i) {
      seq.append(Gate::cnot(layout.global_index(0, i),
                            layout.global_index(d, i)));
    }
  }
  return seq;
}

GateSequence build_hadamard_layer(const CodeLayout& layout) {
  GateSequence seq;
  for (int d = 0; d <= layout.t(); ++d) {
    seq.append(Gate::h(layout.global_index(d, layout.k())));
  }
  return seq;
}

GateSequence build_u_ghz(const CodeLayout& layout) {
  GateSequence seq;
  for (int d = 0; d <= layout.t(); ++d) {
    const int pivot = layout.global_index(d, layout.k());
    for (int i = 1; i <= layout.k() - 1; ++i) {
      seq.append(Gate::cnot(pivot, layout.global_index(d, i)));
    }
  }
  return seq;
}

GateSequence build_u_enc(const CodeLayout& layout) {
  GateSequence seq = build_u_red(layout);
  seq.append(build_hadamard_layer(layout));
  seq.append(build_u_ghz(layout));
  return seq;
}

GateSequence build_u_dec(const CodeLayout& layout, const ErasureFlags& flags) {
  check_flags_against(layout, flags);
  GateSequence seq;
  std::vector<int> undamaged;
  for (int d = 0; d <= layout.t(); ++d) {
    if (!flags.contains_block(d)) undamaged.push_back(d);
  }
  const int rb = layout.restore_block();
  const int k = layout.k();
  bool first = true;
  for (int d : undamaged) {
    const int pivot = layout.global_index(d, k);
    for (int i = 1; i <= k - 1; ++i) {
      seq.append(Gate::cnot(pivot, layout.global_index(d, i)));
    }
    seq.append(Gate::h(pivot));
    if (first) {
      // One collapsed block is enough to seed the scratch copy; copying from
      // every undamaged block would cancel pairwise whenever their count is
      // even, wiping the scratch block instead of filling it.
      for (int i = 1; i <= k; ++i) {
        seq.append(Gate::cnot(layout.global_index(d, i),
                              layout.global_index(rb, i)));
      }
      first = false;
    }
  }
  for (int d : undamaged) {
    for (int i = 1; i <= k; ++i) {
      seq.append(Gate::cnot(layout.global_index(rb, i),
                            layout.global_index(d, i)));
    }
  }
  return seq;
}

GateSequence build_u_rec(const CodeLayout& layout, int position_a,
                         int block_b) {
  const int k = layout.k();
  if (position_a < 1 || position_a > k) {
    throw InvalidFlagsError("erased position " + std::to_string(position_a) +
                            " outside 1.." + std::to_string(k));
  }
  if (block_b < 0 || block_b > layout.t()) {
    throw InvalidFlagsError("damaged block " + std::to_string(block_b) +
                            " outside 0.." + std::to_string(layout.t()));
  }
  const int rb = layout.restore_block();
  GateSequence seq;
  if (position_a == k) {
    for (int i = 1; i <= k - 1; ++i) {
      seq.append(Gate::cnot(layout.global_index(rb, i),
                            layout.global_index(block_b, i)));
    }
    seq.append(Gate::cz(layout.global_index(rb, k),
                        layout.global_index(block_b, k - 1)));
    return seq;
  }
  // The two fans close the damaged block onto uniform words only when they
  // pivot on the scratch copy of the erased position itself: controlled on
  // scratch position a, every surviving position collapses to the same bit.
  // The sandwich then needs an anchor position r != a; the highest
  // surviving position other than k is a convenient deterministic choice.
  const int r = (position_a == k - 1) ? k - 2 : k - 1;
  const int pivot = layout.global_index(rb, position_a);
  for (int i = 1; i <= k; ++i) {
    if (i == position_a) continue;
    seq.append(Gate::cnot(pivot, layout.global_index(block_b, i)));
  }
  for (int i = 1; i <= k - 1; ++i) {
    if (i == position_a) continue;
    seq.append(Gate::cnot(layout.global_index(rb, i),
                          layout.global_index(block_b, i)));
  }
  const int anchor = layout.global_index(block_b, r);
  seq.append(Gate::toffoli(pivot, layout.global_index(rb, k), anchor));
  seq.append(Gate::cz(layout.global_index(rb, k), anchor));
  seq.append(Gate::toffoli(pivot, layout.global_index(rb, k), anchor));
  return seq;
}

State encode(const State& message, const CodeLayout& layout) {
  if (message.n_qubits() != layout.k()) {
    throw DimensionError("message of " + std::to_string(message.n_qubits()) +
                         " qubits does not fit a k=" +
                         std::to_string(layout.k()) + " layout");
  }
  State s = tensor(message, State::zero(layout.k() * layout.t()));
  return apply_sequence(std::move(s), build_u_enc(layout));
}

State restore(const State& corrupted, const CodeLayout& layout,
              const ErasureFlags& flags) {
  if (corrupted.n_qubits() < layout.code_qubits()) {
    throw DimensionError("corrupted state holds " +
                         std::to_string(corrupted.n_qubits()) +
                         " qubits, need at least " +
                         std::to_string(layout.code_qubits()));
  }
  check_flags_against(layout, flags);
  State s = insert_zero_qubits(corrupted, layout.code_qubits(), layout.k());
  s = apply_sequence(std::move(s), build_u_dec(layout, flags));
  for (const ErasureFlag& f : flags.entries()) {
    s = apply_sequence(std::move(s), build_u_rec(layout, f.position, f.block));
  }
  return s;
}

DensityMatrix extract_message(const State& restored,
                              const CodeLayout& layout) {
  if (restored.n_qubits() < layout.total_qubits()) {
    throw DimensionError("restored state holds " +
                         std::to_string(restored.n_qubits()) +
                         " qubits, need at least " +
                         std::to_string(layout.total_qubits()));
  }
  std::vector<int> keep(layout.k());
  std::iota(keep.begin(), keep.end(), layout.code_qubits());
  return reduced_density_matrix(restored, keep);
}

}  // namespace ghzec

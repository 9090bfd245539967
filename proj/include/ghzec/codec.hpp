// SPDX-License-Identifier: MIT
#pragma once

#include <span>
#include <vector>

#include "ghzec/statevector.hpp"

namespace ghzec {

/// Register geometry of the redundant-GHZ erasure code.
///
/// A k-qubit message (k >= 3) is spread over t+1 code blocks of k qubits,
/// t = floor(k/2); block t+1 is a scratch block used by the restoring
/// operation.  Block d occupies global qubits d*k .. d*k+k-1; positions
/// inside a block are 1-based, so position m of block d is global qubit
/// d*k + m - 1.  Environment qubits, when present, sit after every block.
class CodeLayout {
 public:
  explicit CodeLayout(int message_qubits);

  int k() const noexcept { return k_; }
  /// Number of tolerated erasures (one per damaged block).
  int t() const noexcept { return k_ / 2; }
  /// Number of code blocks (t + 1).
  int code_blocks() const noexcept { return t() + 1; }
  /// Qubits in the encoded state (k per code block).
  int code_qubits() const noexcept { return k_ * code_blocks(); }
  /// Index of the scratch block appended by the restoring operation.
  int restore_block() const noexcept { return t() + 1; }
  /// Qubits once the scratch block exists.
  int total_qubits() const noexcept { return k_ * (t() + 2); }

  /// Global qubit index of 1-based position `position` in block `block`
  /// (block may be the restore block).
  int global_index(int block, int position) const;

 private:
  int k_;
};

/// One flagged erasure: `position` (1-based) inside code block `block`.
struct ErasureFlag {
  int block;
  int position;
};

/// A validated set of erasure flags: at most t of them, one per block,
/// blocks in 0..t, positions in 1..k.  Entries are kept sorted by block.
class ErasureFlags {
 public:
  ErasureFlags() = default;
  ErasureFlags(std::vector<ErasureFlag> flags, const CodeLayout& layout);

  std::span<const ErasureFlag> entries() const noexcept { return flags_; }
  bool empty() const noexcept { return flags_.empty(); }
  std::size_t size() const noexcept { return flags_.size(); }
  bool contains_block(int block) const noexcept;

 private:
  std::vector<ErasureFlag> flags_;
};

/// Spreads block 0 over the redundancy blocks: CNOT from position i of
/// block 0 onto position i of every other code block.
GateSequence build_u_red(const CodeLayout& layout);

/// Hadamard on the last position (k) of every code block.
GateSequence build_hadamard_layer(const CodeLayout& layout);

/// Fans each block's position k onto positions 1..k-1 of the same block,
/// turning each block into a GHZ-type superposition.
GateSequence build_u_ghz(const CodeLayout& layout);

/// Full encoder: build_u_red, then build_hadamard_layer, then build_u_ghz.
GateSequence build_u_enc(const CodeLayout& layout);

/// Decoding stage of the restoring operation.  For each undamaged block,
/// ascending: undo the GHZ fan and the Hadamard; the first undamaged block
/// is then copied onto the scratch block, and finally every undamaged block
/// is zeroed against the scratch copy.  Flags must not name the scratch
/// block.  Acts on the total_qubits() register (scratch block present).
GateSequence build_u_dec(const CodeLayout& layout, const ErasureFlags& flags);

/// Per-erasure repair: rebuilds damaged block `block_b` from the scratch
/// copy without ever touching the erased qubit (position_a of block_b).
GateSequence build_u_rec(const CodeLayout& layout, int position_a,
                         int block_b);

/// Encodes a k-qubit message into the code_qubits()-qubit code state.
State encode(const State& message, const CodeLayout& layout);

/// Applies the full restoring operation to a corrupted state: appends the
/// scratch block (|0...0>, inserted before any environment qubits), runs
/// build_u_dec once, then build_u_rec for every flag in ascending block
/// order.  The input must hold at least code_qubits() qubits; anything
/// beyond them is treated as environment and left untouched.
State restore(const State& corrupted, const CodeLayout& layout,
              const ErasureFlags& flags);

/// Reduced density matrix of the scratch block, where the recovered message
/// lives after restore().
DensityMatrix extract_message(const State& restored, const CodeLayout& layout);

}  // namespace ghzec

// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ghzec/channel.hpp"
#include "ghzec/codec.hpp"
#include "ghzec/report.hpp"
#include "ghzec/statevector.hpp"

namespace ghzec {

/// Closed-form code state, built by direct amplitude placement and sharing
/// no machinery with the gate pipeline: each message word |i> contributes
/// one (|u> + s_i |u~>)/sqrt(2) factor per block, where u is i with its last
/// bit cleared, u~ is the bitwise complement of u, and s_i = -1 exactly when
/// the last bit of i is set.
State analytic_encoded_state(const State& message, const CodeLayout& layout);

struct EncodingTableResult {
  int k = 0;
  double max_abs_deviation = 0.0;
  std::vector<double> per_word_deviation;
  bool pass = false;  ///< every word within 1e-12 of the closed form
};

/// Compares the gate-built encoder against the closed form on every basis
/// word of a k-qubit message.
EncodingTableResult verify_encoding_table(int k);

/// One erasure pattern: flagged (block, position) pairs, at most one per
/// block, never the scratch block.
struct ErasurePattern {
  std::vector<ErasureFlag> flags;
};

/// Stable label: "none", or "block:position" pairs joined by commas in
/// ascending block order, e.g. "0:1,1:5".
std::string pattern_label(std::span<const ErasureFlag> flags);

/// Every legal pattern for the layout, deterministically ordered: by number
/// of erasures, then lexicographically by damaged blocks, then by positions.
std::vector<ErasurePattern> enumerate_patterns(const CodeLayout& layout);

/// Runs encode -> erasure channel -> restore, then returns the fidelity of
/// the scratch block against the original message.
double pipeline_fidelity(const State& message, const CodeLayout& layout,
                         std::span<const ErasureEvent> events);

struct SweepOptions {
  int k = 3;
  std::vector<CorruptionModel> models = {CorruptionModel::identity()};
  int trials = 5;            ///< random messages per (pattern, model)
  std::uint64_t seed = 0;    ///< root seed for the per-case message streams
  int threads = 0;           ///< worker threads; 0 = hardware concurrency
};

/// Exhaustive sweep: every legal pattern x model x trial.  Case order (and
/// every value except elapsed_ms) is independent of the thread count.
Report sweep_all_patterns(const SweepOptions& options);

}  // namespace ghzec

// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ghzec/statevector.hpp"

namespace ghzec {

/// One executed pipeline case.
struct CaseRecord {
  std::string pattern;      ///< "none" or "block:position,..." sorted by block
  std::string model;        ///< corruption model token(s)
  std::uint64_t trial_seed; ///< seed that generated the message state
  double fidelity;
  double elapsed_ms;        ///< wall time; excluded from determinism checks
};

struct Summary {
  double min_fidelity = 1.0;
  double mean_fidelity = 1.0;
  bool pass = true;
};

/// Run report: echoed configuration, per-case records, and a summary whose
/// `pass` means min_fidelity >= 1 - 1e-10.
struct Report {
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::vector<CaseRecord> cases;
  Summary summary;

  /// Recomputes the summary from the recorded cases.
  void finalize();

  /// JSON document with stable key order: config, cases, summary.
  nlohmann::ordered_json to_json() const;
  std::string to_json_text() const;

  /// Flat projection of the per-case records.
  std::string to_csv() const;
};

}  // namespace ghzec

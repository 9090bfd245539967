// SPDX-License-Identifier: MIT
#include "ghzec/report.hpp"

#include <cstdio>

namespace ghzec {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void Report::finalize() {
  summary = Summary{};
  if (cases.empty()) return;
  double min_f = cases.front().fidelity;
  double sum = 0.0;
  for (const CaseRecord& c : cases) {
    min_f = std::min(min_f, c.fidelity);
    sum += c.fidelity;
  }
  summary.min_fidelity = min_f;
  summary.mean_fidelity = sum / static_cast<double>(cases.size());
  summary.pass = min_f >= kFidelityThreshold;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json doc;
  doc["config"] = config;
  nlohmann::ordered_json case_list = nlohmann::ordered_json::array();
  for (const CaseRecord& c : cases) {
    nlohmann::ordered_json entry;
    entry["pattern"] = c.pattern;
    entry["model"] = c.model;
    entry["trial_seed"] = c.trial_seed;
    entry["fidelity"] = c.fidelity;
    entry["elapsed_ms"] = c.elapsed_ms;
    case_list.push_back(std::move(entry));
  }
  doc["cases"] = std::move(case_list);
  doc["summary"] = {{"min_fidelity", summary.min_fidelity},
                    {"mean_fidelity", summary.mean_fidelity},
                    {"pass", summary.pass}};
  return doc;
}

std::string Report::to_json_text() const { return to_json().dump(2) + "\n"; }

std::string Report::to_csv() const {
  std::string out = "pattern,model,trial_seed,fidelity,elapsed_ms\n";
  for (const CaseRecord& c : cases) {
    out += csv_field(c.pattern);
    out += ',';
    out += csv_field(c.model);
    out += ',';
    out += std::to_string(c.trial_seed);
    out += ',';
    out += format_double(c.fidelity);
    out += ',';
    out += format_double(c.elapsed_ms);
    out += '\n';
  }
  return out;
}

}  // namespace ghzec

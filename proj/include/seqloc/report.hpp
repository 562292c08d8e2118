/// Result record for a hypothesis test, serializable to JSON and to a short
/// human-readable block.
#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace seqloc {

struct TestReport {
  std::string statistic;    // e.g. "H1", "HG", "H1_in"
  std::string null_model;   // e.g. "er_normal", "er_exact_multigraph"
  std::string sidedness;    // "two_sided" | "lower" | "upper"
  double observed = 0.0;    // normalized statistic value
  double z = 0.0;           // z-score when a normal reference is used
  double p_value = 1.0;
  double alpha = 0.05;
  bool reject = false;      // p_value < alpha
  nlohmann::json details;   // model parameters, extra diagnostics

  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace seqloc

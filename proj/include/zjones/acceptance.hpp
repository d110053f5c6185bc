#pragma once

#include <functional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "zjones/json_io.hpp"

namespace zj {

struct CriterionResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;  // deterministic, no timings
  json data;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::set<std::string> only;     // empty runs A1..A15
  bool negative_control = false;  // flips the kappa sign; A6 and A8 must fail
  // called after each criterion, e.g. to report wall-clock time on stderr
  std::function<void(const CriterionResult&)> on_result;
};

std::vector<std::string> criterion_ids();
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

// One line per criterion plus a summary line. Byte-identical across runs.
std::string acceptance_text(const std::vector<CriterionResult>& results);
json acceptance_json(const std::vector<CriterionResult>& results);
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace zj

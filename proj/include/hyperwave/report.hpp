#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace hyperwave {

// Outcome of one certified estimate: the evaluation grid, the measured
// ratio/supremum series, and the verdict against the declared bound shape.
// Raw series are always kept so the verdict is recomputable from the report.
struct VerificationReport {
  std::string estimate;
  std::vector<double> grid;
  std::vector<double> ratios;
  double sup = 0.0;
  double refinement_delta = std::numeric_limits<double>::quiet_NaN();
  bool verdict = false;
  std::map<std::string, double> aux;
  std::vector<std::string> failures;
};

inline double relative_change(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

}  // namespace hyperwave

#include "voi/design.hpp"

#include <stdexcept>

namespace voi {

double design_utility(const DecisionProblem& problem, const MeasurementModel& m) {
  return analyze(problem, m).evsi;
}

DesignComparison compare_designs(const DecisionProblem& problem,
                                 std::span<const MeasurementModel> designs,
                                 std::span<const double> deltas) {
  if (designs.empty()) {
    throw std::invalid_argument("compare_designs: at least one measurement design is required");
  }
  DesignComparison cmp;
  cmp.designs.reserve(designs.size());
  for (const MeasurementModel& d : designs) {
    VoiReport report = analyze(problem, d, deltas);
    DesignMetrics metrics;
    metrics.name = d.name;
    metrics.expected_utility = report.evsi;
    metrics.sigma_vsi = report.sigma_vsi;
    metrics.rvsi = report.rvsi;
    if (cmp.deltas.empty()) cmp.deltas = report.deltas;
    metrics.report = std::move(report);
    cmp.designs.push_back(std::move(metrics));
  }
  std::vector<double> utilities;
  utilities.reserve(cmp.designs.size());
  for (const DesignMetrics& d : cmp.designs) utilities.push_back(d.expected_utility);
  cmp.best_index = argmax(utilities).index;
  cmp.best_design = cmp.designs[cmp.best_index].name;
  return cmp;
}

}  // namespace voi

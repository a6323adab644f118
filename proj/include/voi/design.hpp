#pragma once

#include "voi/metrics.hpp"

namespace voi {

// Metrics for one candidate design. expected_utility equals the design's
// EVSI (the design utility u(d) under u(d,x) = VSI_x); the full report is
// kept so callers can drill into per-outcome rows.
struct DesignMetrics {
  std::string name;
  double expected_utility = 0.0;
  double sigma_vsi = 0.0;
  std::vector<double> rvsi;  // aligned with deltas
  VoiReport report;
};

// Side-by-side evaluation of competing designs, in input order. best_index
// marks the expected-utility argmax (ties to the earliest design); sigma_vsi
// and rvsi columns are surfaced so a risk-averse caller can rank by those
// instead.
struct DesignComparison {
  std::vector<double> deltas;
  std::vector<DesignMetrics> designs;
  std::string best_design;
  std::size_t best_index = 0;
};

// u(d) = sum_x p(x) VSI_x = EVSI of the design.
double design_utility(const DecisionProblem& problem, const MeasurementModel& m);

// Evaluates every design against the same problem. Designs may have
// different outcome spaces. Throws std::invalid_argument on an empty list.
DesignComparison compare_designs(const DecisionProblem& problem,
                                 std::span<const MeasurementModel> designs,
                                 std::span<const double> deltas = {});

}  // namespace voi

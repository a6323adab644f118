#pragma once

#include <optional>

#include "voi/problem.hpp"

namespace voi {

// Predictive distribution p(x) over measurement outcomes and the posterior
// p(s|x) for each outcome, index-aligned with `outcomes`. Outcomes with
// p(x) = 0 carry no posterior; their labels are collected in zero_outcomes
// and they contribute nothing to downstream expectations.
struct PosteriorTable {
  std::vector<std::string> outcomes;
  std::vector<double> predictive;
  std::vector<std::optional<ProbVector>> posteriors;
  std::vector<std::string> zero_outcomes;
};

// Bayes update for one measurement:
//   predictive[j] = sum_k p(x_j|s_k) p(s_k)
//   posterior(i, j) = p(x_j|s_i) p(s_i) / predictive[j]   when predictive[j] > 0
// Throws std::invalid_argument if problem and measurement shapes disagree
// (the caller skipped validation).
PosteriorTable posterior_table(const DecisionProblem& problem, const MeasurementModel& m);

}  // namespace voi

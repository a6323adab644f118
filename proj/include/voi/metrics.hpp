#pragma once

#include <stdexcept>

#include "voi/bayes.hpp"

namespace voi {

// Thrown when a computed quantity breaks an analytic bound by more than
// floating-point noise can explain; indicates a bug, not bad input.
struct ArithmeticFault : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Argmax {
  double value = 0.0;
  std::size_t index = 0;
};

// Largest element; ties go to the lowest index. Every argmax in this library
// (optimal action, posterior action, best design) uses this rule so results
// are deterministic.
Argmax argmax(std::span<const double> xs);

// Per-outcome record of what one measurement outcome would do to the
// decision. delta_ev is the shift in the best achievable expected value and
// may be negative; vsi is the value of the outcome for decision-making and
// is non-negative. action_changed is false exactly when the posterior-optimal
// action is the prior-optimal one under the fixed tie-break, in which case
// vsi is zero.
struct OutcomeRow {
  std::string outcome;
  double probability = 0.0;
  double delta_ev = 0.0;
  double vsi = 0.0;
  std::string posterior_action;
  bool action_changed = false;
};

// Full set of value-of-information metrics for one problem and one
// measurement: the prior-only quantities (EV per action, EV under
// uncertainty/certainty, EVPI) plus the per-measurement block (EVSI,
// sigma VSI, rVSI at each requested threshold, one row per outcome with
// positive predictive probability).
struct VoiReport {
  std::vector<double> ev_per_action;
  std::string optimal_action;
  std::size_t optimal_action_index = 0;
  double ev_uncertainty = 0.0;
  double ev_certainty = 0.0;
  double evpi = 0.0;

  std::string measurement;
  double ev_less_uncertainty = 0.0;
  double evsi = 0.0;
  double sigma_vsi = 0.0;
  std::vector<double> deltas;
  std::vector<double> rvsi;  // aligned with deltas
  std::vector<OutcomeRow> rows;
  std::vector<std::string> zero_outcomes;
};

// EV(a) = sum_s V(a,s) p(s), in action order.
std::vector<double> expected_values(const DecisionProblem& problem);

// Best expected value acting on the prior alone, and which action attains it.
Argmax ev_uncertainty(const DecisionProblem& problem);

// Expected value when the state is revealed before acting:
// sum_s p(s) max_a V(a,s).
double ev_certainty(const DecisionProblem& problem);

// Expected value of perfect information; always >= 0.
double evpi(const DecisionProblem& problem);

// Computes every metric for one measurement. `deltas` are the rVSI
// thresholds; when empty, the single default threshold 0 is used. Throws
// std::invalid_argument on a negative threshold or incompatible shapes, and
// ArithmeticFault if a VSI value falls below the -1e-6 noise floor.
VoiReport analyze(const DecisionProblem& problem, const MeasurementModel& m,
                  std::span<const double> deltas = {});

// The same report for a measurement that reveals the state exactly; its
// evsi equals evpi.
VoiReport perfect_info_report(const DecisionProblem& problem,
                              std::span<const double> deltas = {});

}  // namespace voi

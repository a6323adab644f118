#include "voi/metrics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace voi {

namespace {

// Below this, a negative VSI is a genuine arithmetic fault rather than
// floating-point noise.
constexpr double kVsiFaultFloor = -1e-6;

// Makes "VSI_x <= delta" robust when both sides should be exactly equal.
constexpr double kRvsiSlack = 1e-9;

void require_valid_shape(const DecisionProblem& problem) {
  const std::size_t na = problem.actions.size();
  const std::size_t ns = problem.states.labels.size();
  if (na == 0 || ns == 0 || problem.states.probs.size() != ns ||
      problem.values.rows() != na || problem.values.cols() != ns) {
    throw std::invalid_argument("decision problem is malformed; run validate_problem first");
  }
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

Argmax argmax(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("argmax of an empty range");
  Argmax best{xs[0], 0};
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] > best.value) best = {xs[i], i};
  }
  return best;
}

std::vector<double> expected_values(const DecisionProblem& problem) {
  require_valid_shape(problem);
  const std::size_t na = problem.actions.size();
  const std::size_t ns = problem.states.size();
  std::vector<double> ev(na, 0.0);
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t s = 0; s < ns; ++s) {
      ev[a] += problem.values(a, s) * problem.states.probs[s];
    }
  }
  return ev;
}

Argmax ev_uncertainty(const DecisionProblem& problem) {
  const std::vector<double> ev = expected_values(problem);
  return argmax(ev);
}

double ev_certainty(const DecisionProblem& problem) {
  require_valid_shape(problem);
  const std::size_t na = problem.actions.size();
  const std::size_t ns = problem.states.size();
  double total = 0.0;
  for (std::size_t s = 0; s < ns; ++s) {
    double best = problem.values(0, s);
    for (std::size_t a = 1; a < na; ++a) best = std::max(best, problem.values(a, s));
    total += problem.states.probs[s] * best;
  }
  return total;
}

double evpi(const DecisionProblem& problem) {
  return ev_certainty(problem) - ev_uncertainty(problem).value;
}

VoiReport analyze(const DecisionProblem& problem, const MeasurementModel& m,
                  std::span<const double> deltas) {
  VoiReport r;
  r.deltas.assign(deltas.begin(), deltas.end());
  if (r.deltas.empty()) r.deltas.push_back(0.0);
  for (double d : r.deltas) {
    if (!(d >= 0.0)) {
      throw std::invalid_argument("rVSI threshold must be >= 0, got " + fmt(d));
    }
  }

  r.ev_per_action = expected_values(problem);
  const Argmax prior_best = argmax(r.ev_per_action);
  r.ev_uncertainty = prior_best.value;
  r.optimal_action_index = prior_best.index;
  r.optimal_action = problem.actions[prior_best.index];
  r.ev_certainty = ev_certainty(problem);
  r.evpi = r.ev_certainty - r.ev_uncertainty;

  const PosteriorTable post = posterior_table(problem, m);
  r.measurement = m.name;
  r.zero_outcomes = post.zero_outcomes;

  const std::size_t na = problem.actions.size();
  const std::size_t ns = problem.states.size();
  std::vector<double> pev(na);
  double ev_less = 0.0;
  r.rows.reserve(post.outcomes.size());
  for (std::size_t x = 0; x < post.outcomes.size(); ++x) {
    if (!post.posteriors[x]) continue;
    const std::vector<double>& weights = post.posteriors[x]->probs;
    for (std::size_t a = 0; a < na; ++a) {
      double v = 0.0;
      for (std::size_t s = 0; s < ns; ++s) v += problem.values(a, s) * weights[s];
      pev[a] = v;
    }
    const Argmax best = argmax(pev);
    double vsi = best.value - pev[prior_best.index];
    if (vsi < kVsiFaultFloor) {
      throw ArithmeticFault("VSI for outcome '" + post.outcomes[x] + "' of measurement '" +
                            m.name + "' is " + fmt(vsi) +
                            ", below the -1e-6 floating-point noise floor");
    }
    if (vsi < 0.0) vsi = 0.0;
    r.rows.push_back({post.outcomes[x], post.predictive[x], best.value - r.ev_uncertainty, vsi,
                      problem.actions[best.index], best.index != prior_best.index});
    ev_less += post.predictive[x] * best.value;
  }
  r.ev_less_uncertainty = ev_less;
  r.evsi = ev_less - r.ev_uncertainty;

  double variance = 0.0;
  for (const OutcomeRow& row : r.rows) {
    const double dev = row.vsi - r.evsi;
    variance += row.probability * dev * dev;
  }
  r.sigma_vsi = std::sqrt(variance);

  r.rvsi.reserve(r.deltas.size());
  for (double d : r.deltas) {
    double mass = 0.0;
    for (const OutcomeRow& row : r.rows) {
      if (row.vsi <= d + kRvsiSlack) mass += row.probability;
    }
    r.rvsi.push_back(mass);
  }
  return r;
}

VoiReport perfect_info_report(const DecisionProblem& problem, std::span<const double> deltas) {
  return analyze(problem, perfect_measurement(problem), deltas);
}

}  // namespace voi

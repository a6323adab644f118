#include "voi/problem.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace voi {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Reports empty and duplicate labels into `out`, prefixed with `what`.
void check_labels(const std::vector<std::string>& labels, std::string_view what,
                  std::vector<std::string>& out) {
  std::set<std::string_view> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) {
      out.push_back(std::string(what) + ": entry " + std::to_string(i) + " has an empty label");
    } else if (!seen.insert(labels[i]).second) {
      out.push_back(std::string(what) + ": duplicate label '" + labels[i] + "'");
    }
  }
}

}  // namespace

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw std::invalid_argument("row " + std::to_string(r) + " has " +
                                  std::to_string(rows[r].size()) + " entries, expected " +
                                  std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Validation validate_prob_vector(const ProbVector& pv, std::string_view what) {
  Validation v;
  if (pv.labels.size() != pv.probs.size()) {
    v.errors.push_back(std::string(what) + ": " + std::to_string(pv.labels.size()) +
                       " labels but " + std::to_string(pv.probs.size()) + " probabilities");
    return v;
  }
  if (pv.size() == 0) {
    v.errors.push_back(std::string(what) + ": must contain at least one entry");
    return v;
  }
  check_labels(pv.labels, what, v.errors);
  double sum = 0.0;
  bool summable = true;
  for (std::size_t i = 0; i < pv.probs.size(); ++i) {
    const double p = pv.probs[i];
    if (!std::isfinite(p)) {
      v.errors.push_back(std::string(what) + ": probability of '" + pv.labels[i] +
                         "' is not finite");
      summable = false;
    } else if (p < 0.0) {
      v.errors.push_back(std::string(what) + ": probability of '" + pv.labels[i] +
                         "' is negative (" + fmt(p) + ")");
      summable = false;
    }
    sum += p;
  }
  if (summable && std::abs(sum - 1.0) > kUserProbTolerance) {
    v.errors.push_back(std::string(what) + ": probabilities sum to " + fmt(sum) +
                       ", expected 1 within 1e-9");
  }
  return v;
}

Validation validate_problem(const DecisionProblem& problem) {
  Validation v = validate_prob_vector(problem.states, "states");
  if (problem.actions.empty()) {
    v.errors.push_back("actions: must contain at least one action");
  }
  check_labels(problem.actions, "actions", v.errors);
  const std::size_t na = problem.actions.size();
  const std::size_t ns = problem.states.labels.size();
  if (problem.values.rows() != na || problem.values.cols() != ns) {
    v.errors.push_back("values: expected a " + std::to_string(na) + "x" + std::to_string(ns) +
                       " matrix (actions x states), got " + std::to_string(problem.values.rows()) +
                       "x" + std::to_string(problem.values.cols()));
  }
  for (std::size_t r = 0; r < problem.values.rows(); ++r) {
    for (std::size_t c = 0; c < problem.values.cols(); ++c) {
      if (!std::isfinite(problem.values(r, c))) {
        v.errors.push_back("values: entry at row " + std::to_string(r) + ", column " +
                           std::to_string(c) + " is not finite");
      }
    }
  }
  return v;
}

Validation validate_measurement(const DecisionProblem& problem, const MeasurementModel& m) {
  Validation v;
  if (m.name.empty()) {
    v.errors.push_back("name: must be non-empty");
  }
  if (m.outcomes.empty()) {
    v.errors.push_back("outcomes: must contain at least one outcome");
  }
  check_labels(m.outcomes, "outcomes", v.errors);
  const std::size_t ns = problem.states.labels.size();
  const std::size_t no = m.outcomes.size();
  if (m.likelihood.rows() != ns || m.likelihood.cols() != no) {
    v.errors.push_back("likelihood: expected a " + std::to_string(ns) + "x" + std::to_string(no) +
                       " matrix (states x outcomes), got " + std::to_string(m.likelihood.rows()) +
                       "x" + std::to_string(m.likelihood.cols()));
    return v;
  }
  for (std::size_t s = 0; s < ns; ++s) {
    double sum = 0.0;
    bool summable = true;
    for (std::size_t x = 0; x < no; ++x) {
      const double p = m.likelihood(s, x);
      if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
        v.errors.push_back("likelihood: entry (state '" + problem.states.labels[s] +
                           "', outcome '" + m.outcomes[x] + "') must be within [0,1], got " +
                           fmt(p));
        summable = false;
      }
      sum += p;
    }
    if (summable && std::abs(sum - 1.0) > kUserProbTolerance) {
      v.errors.push_back("likelihood: row for state '" + problem.states.labels[s] + "' sums to " +
                         fmt(sum) + ", expected 1 within 1e-9");
    }
  }
  return v;
}

MeasurementModel perfect_measurement(const DecisionProblem& problem) {
  const std::size_t ns = problem.states.labels.size();
  MeasurementModel m;
  m.name = "perfect";
  m.outcomes = problem.states.labels;
  m.likelihood = Matrix(ns, ns, 0.0);
  for (std::size_t s = 0; s < ns; ++s) m.likelihood(s, s) = 1.0;
  return m;
}

std::vector<double> binomial_pmf(int trials, double p) {
  if (trials < 0) throw std::invalid_argument("binomial_pmf: trials must be >= 0");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("binomial_pmf: success probability must be within [0,1], got " +
                                fmt(p));
  }
  const std::size_t n = static_cast<std::size_t>(trials);
  std::vector<double> pmf(n + 1, 0.0);
  if (p == 0.0) {
    pmf[0] = 1.0;
    return pmf;
  }
  if (p == 1.0) {
    pmf[n] = 1.0;
    return pmf;
  }
  if (trials <= 60) {
    // C(n,x) fits a double with at most 1 ulp of error up to n = 60.
    double choose = 1.0;
    for (std::size_t x = 0; x <= n; ++x) {
      if (x > 0) choose = choose * static_cast<double>(n - x + 1) / static_cast<double>(x);
      pmf[x] = choose * std::pow(p, static_cast<double>(x)) *
               std::pow(1.0 - p, static_cast<double>(n - x));
    }
  } else {
    // Multiplicative recurrence on log C(n,x); keeps large-n tails from
    // underflowing before the exp.
    const double lp = std::log(p);
    const double lq = std::log1p(-p);
    double log_choose = 0.0;
    pmf[0] = std::exp(static_cast<double>(n) * lq);
    for (std::size_t x = 1; x <= n; ++x) {
      log_choose += std::log(static_cast<double>(n - x + 1)) - std::log(static_cast<double>(x));
      pmf[x] = std::exp(log_choose + static_cast<double>(x) * lp +
                        static_cast<double>(n - x) * lq);
    }
  }
  return pmf;
}

MeasurementModel binomial_trial(const std::string& name, int trials,
                                std::span<const double> survival) {
  if (trials < 1) {
    throw std::invalid_argument("binomial_trial: trials must be >= 1, got " +
                                std::to_string(trials));
  }
  for (double p : survival) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument(
          "binomial_trial: survival probability must be within [0,1], got " + fmt(p));
    }
  }
  MeasurementModel m;
  m.name = name;
  m.outcomes.reserve(static_cast<std::size_t>(trials) + 1);
  for (int x = 0; x <= trials; ++x) m.outcomes.push_back(std::to_string(x));
  m.likelihood = Matrix(survival.size(), m.outcomes.size());
  for (std::size_t s = 0; s < survival.size(); ++s) {
    const std::vector<double> row = binomial_pmf(trials, survival[s]);
    for (std::size_t x = 0; x < row.size(); ++x) m.likelihood(s, x) = row[x];
  }
  return m;
}

}  // namespace voi

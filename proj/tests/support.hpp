#pragma once

// Shared builders, generators, and independent oracles for the test suites.
// Everything here computes with plain loops so it cannot inherit a bug from
// the library paths it is used to check.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "voi/problem.hpp"

namespace voitest {

inline bool near(double got, double want, double tol) { return std::abs(got - want) <= tol; }

inline std::string data_path(const std::string& file) {
  return std::string(VOI_DATA_DIR) + "/" + file;
}

// ---- Case-study builders (same content as the bundled documents) ----

inline voi::DecisionProblem frog_problem() {
  voi::DecisionProblem p;
  p.states.labels = {"disease present", "disease absent"};
  p.states.probs = {0.5, 0.5};
  p.actions = {"translocate", "do nothing"};
  p.values = voi::Matrix::from_rows({{55, 135}, {100, 100}});
  return p;
}

inline voi::MeasurementModel frog_disease_test() {
  voi::MeasurementModel m;
  m.name = "disease-test";
  m.outcomes = {"positive", "negative"};
  m.likelihood = voi::Matrix::from_rows({{0.73, 0.27}, {0.06, 0.94}});
  return m;
}

inline voi::DecisionProblem turtle_problem() {
  voi::DecisionProblem p;
  p.states.labels = {"no post-release effect", "effect decreases with age",
                     "effect increases with age"};
  p.states.probs = {0.4, 0.2, 0.4};
  p.actions = {"release 3-year olds", "release 4-year olds", "release 5-year olds"};
  p.values = voi::Matrix::from_rows(
      {{0.689, 0.582, 0.547}, {0.729, 0.674, 0.484}, {0.745, 0.710, 0.332}});
  return p;
}

inline std::vector<voi::MeasurementModel> turtle_designs() {
  const std::vector<double> d1{0.85, 0.72, 0.68};
  const std::vector<double> d2{0.90, 0.83, 0.60};
  const std::vector<double> d3{0.90, 0.86, 0.40};
  return {voi::binomial_trial("d1", 10, d1), voi::binomial_trial("d2", 10, d2),
          voi::binomial_trial("d3", 10, d3)};
}

// ---- Random instances ----

inline std::vector<double> random_simplex(std::mt19937_64& rng, std::size_t n) {
  std::exponential_distribution<double> draw(1.0);
  std::vector<double> w(n);
  double total = 0.0;
  for (double& x : w) {
    x = draw(rng);
    total += x;
  }
  for (double& x : w) x /= total;
  return w;
}

inline voi::DecisionProblem random_problem(std::mt19937_64& rng, int max_states = 6,
                                           int max_actions = 6) {
  std::uniform_int_distribution<int> state_count(1, max_states);
  std::uniform_int_distribution<int> action_count(1, max_actions);
  std::uniform_real_distribution<double> value(0.0, 10.0);
  const auto ns = static_cast<std::size_t>(state_count(rng));
  const auto na = static_cast<std::size_t>(action_count(rng));
  voi::DecisionProblem p;
  for (std::size_t s = 0; s < ns; ++s) p.states.labels.push_back("s" + std::to_string(s + 1));
  p.states.probs = random_simplex(rng, ns);
  for (std::size_t a = 0; a < na; ++a) p.actions.push_back("a" + std::to_string(a + 1));
  p.values = voi::Matrix(na, ns);
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t s = 0; s < ns; ++s) p.values(a, s) = value(rng);
  }
  return p;
}

inline voi::MeasurementModel random_measurement(std::mt19937_64& rng,
                                                const voi::DecisionProblem& problem,
                                                int max_outcomes = 10) {
  std::uniform_int_distribution<int> outcome_count(1, max_outcomes);
  const auto no = static_cast<std::size_t>(outcome_count(rng));
  voi::MeasurementModel m;
  m.name = "random";
  for (std::size_t x = 0; x < no; ++x) m.outcomes.push_back("x" + std::to_string(x + 1));
  m.likelihood = voi::Matrix(problem.states.size(), no);
  for (std::size_t s = 0; s < problem.states.size(); ++s) {
    const std::vector<double> row = random_simplex(rng, no);
    for (std::size_t x = 0; x < no; ++x) m.likelihood(s, x) = row[x];
  }
  return m;
}

// ---- Monte Carlo oracle for EVSI ----

struct MonteCarlo {
  double estimate = 0.0;
  double std_error = 0.0;
};

inline std::size_t pick(const std::vector<double>& cdf, double u) {
  const double scaled = u * cdf.back();
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), scaled);
  return std::min(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
}

// Samples s ~ prior and x ~ p(x|s), then averages the posterior decision
// improvement max_a E[V(a,.)|x] - EV(a*). The expectation of the per-draw
// statistic is EVSI.
inline MonteCarlo mc_evsi(const voi::DecisionProblem& problem, const voi::MeasurementModel& m,
                          std::size_t draws, std::mt19937_64& rng) {
  const std::size_t ns = problem.states.size();
  const std::size_t na = problem.actions.size();
  const std::size_t no = m.outcomes.size();

  double ev_unc = -std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < na; ++a) {
    double ev = 0.0;
    for (std::size_t s = 0; s < ns; ++s) ev += problem.values(a, s) * problem.states.probs[s];
    ev_unc = std::max(ev_unc, ev);
  }

  std::vector<double> prior_cdf(ns);
  std::partial_sum(problem.states.probs.begin(), problem.states.probs.end(), prior_cdf.begin());
  std::vector<std::vector<double>> like_cdf(ns, std::vector<double>(no));
  for (std::size_t s = 0; s < ns; ++s) {
    double run = 0.0;
    for (std::size_t x = 0; x < no; ++x) {
      run += m.likelihood(s, x);
      like_cdf[s][x] = run;
    }
  }

  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> weight(ns);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t k = 0; k < draws; ++k) {
    const std::size_t s = pick(prior_cdf, unif(rng));
    const std::size_t x = pick(like_cdf[s], unif(rng));
    double total = 0.0;
    for (std::size_t i = 0; i < ns; ++i) {
      weight[i] = m.likelihood(i, x) * problem.states.probs[i];
      total += weight[i];
    }
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < na; ++a) {
      double pev = 0.0;
      for (std::size_t i = 0; i < ns; ++i) pev += problem.values(a, i) * weight[i];
      best = std::max(best, pev);
    }
    const double stat = best / total - ev_unc;
    sum += stat;
    sum_sq += stat * stat;
  }
  MonteCarlo out;
  const auto n = static_cast<double>(draws);
  out.estimate = sum / n;
  const double variance = std::max(0.0, (sum_sq - n * out.estimate * out.estimate) / (n - 1.0));
  out.std_error = std::sqrt(variance / n);
  return out;
}

// ---- Running the built CLI ----

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

inline RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string capture =
      (std::filesystem::temp_directory_path() /
       ("voi_cli_capture_" + std::to_string(::getpid()) + "_" + std::to_string(counter++)))
          .string();
  const std::string cmd = std::string(VOI_CLI_PATH) + " " + args + " > " + capture + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  std::ifstream in(capture, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  std::remove(capture.c_str());
  return r;
}

}  // namespace voitest

#include "voi/bayes.hpp"

#include <stdexcept>

namespace voi {

PosteriorTable posterior_table(const DecisionProblem& problem, const MeasurementModel& m) {
  const std::size_t ns = problem.states.labels.size();
  const std::size_t no = m.outcomes.size();
  if (problem.states.probs.size() != ns) {
    throw std::invalid_argument("posterior_table: malformed prior (label/probability mismatch)");
  }
  if (m.likelihood.rows() != ns || m.likelihood.cols() != no) {
    throw std::invalid_argument("posterior_table: measurement '" + m.name +
                                "' is dimensionally incompatible with the problem");
  }

  PosteriorTable t;
  t.outcomes = m.outcomes;
  t.predictive.assign(no, 0.0);
  for (std::size_t x = 0; x < no; ++x) {
    for (std::size_t s = 0; s < ns; ++s) {
      t.predictive[x] += m.likelihood(s, x) * problem.states.probs[s];
    }
  }

  t.posteriors.reserve(no);
  for (std::size_t x = 0; x < no; ++x) {
    // Products of non-negative terms cannot cancel, so an exact-zero test
    // identifies outcomes with no probability mass.
    if (t.predictive[x] == 0.0) {
      t.posteriors.emplace_back(std::nullopt);
      t.zero_outcomes.push_back(m.outcomes[x]);
      continue;
    }
    ProbVector post;
    post.labels = problem.states.labels;
    post.probs.resize(ns);
    for (std::size_t s = 0; s < ns; ++s) {
      post.probs[s] = m.likelihood(s, x) * problem.states.probs[s] / t.predictive[x];
    }
    t.posteriors.emplace_back(std::move(post));
  }
  return t;
}

}  // namespace voi

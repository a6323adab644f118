#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace voi {

// Dense row-major matrix. Decision tables here are tiny (actions x states,
// states x outcomes), so this stays deliberately minimal: storage, shape,
// and element access.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  // Builds from nested rows. Throws std::invalid_argument on ragged input.
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Discrete distribution over labelled categories. Labels are the identity
// of the categories; positions follow input order.
struct ProbVector {
  std::vector<std::string> labels;
  std::vector<double> probs;

  std::size_t size() const { return labels.size(); }
  bool operator==(const ProbVector&) const = default;
};

// A decision problem: prior belief over states, candidate actions, and the
// payoff values(a, s) of taking action a when the true state is s, in units
// of the management objective.
struct DecisionProblem {
  ProbVector states;
  std::vector<std::string> actions;
  Matrix values;  // actions x states

  bool operator==(const DecisionProblem&) const = default;
};

// One proposed measurement or experimental design: a labelled outcome space
// and the likelihood p(x|s) of each outcome under each state.
struct MeasurementModel {
  std::string name;
  std::vector<std::string> outcomes;
  Matrix likelihood;  // states x outcomes

  bool operator==(const MeasurementModel&) const = default;
};

// Outcome of a validation pass. Carries every violation found, not just
// the first.
struct Validation {
  std::vector<std::string> errors;

  bool ok() const { return errors.empty(); }
};

// Hand-entered distributions may be rounded (0.73/0.27 style), so user input
// is accepted within 1e-9. Distributions this library constructs itself are
// held to 1e-12.
inline constexpr double kUserProbTolerance = 1e-9;
inline constexpr double kConstructedProbTolerance = 1e-12;

Validation validate_prob_vector(const ProbVector& pv, std::string_view what);
Validation validate_problem(const DecisionProblem& problem);
Validation validate_measurement(const DecisionProblem& problem, const MeasurementModel& m);

// The measurement that reveals the state exactly: outcomes mirror the states
// and the likelihood is the identity. Feeding it through the imperfect-
// information pipeline reproduces perfect-information quantities.
MeasurementModel perfect_measurement(const DecisionProblem& problem);

// Trial of `trials` independent individuals with per-state success
// probability; outcomes are the counts "0".."trials". Throws
// std::invalid_argument if trials < 1 or a probability is outside [0,1].
MeasurementModel binomial_trial(const std::string& name, int trials,
                                std::span<const double> survival);

// Binomial pmf over counts 0..trials. Rows constructed from this sum to 1
// within 1e-12 for trials up to 1000.
std::vector<double> binomial_pmf(int trials, double p);

}  // namespace voi

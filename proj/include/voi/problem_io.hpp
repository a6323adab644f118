#pragma once

#include <filesystem>
#include <stdexcept>

#include "voi/problem.hpp"

namespace voi {

// Structural failure of a problem document: unreadable file, bad JSON
// syntax, missing or unknown keys, wrong primitive types. The message names
// the offending field path (and line, for syntax errors).
struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The document was well-formed but the problem it describes breaks a model
// invariant. Carries every violation, not just the first.
struct ValidationError : std::runtime_error {
  explicit ValidationError(std::vector<std::string> violations);

  std::vector<std::string> violations;
};

// In-memory form of a problem document: the decision problem, every
// measurement design it proposes (generative "binomial" entries already
// expanded), and the optional default rVSI thresholds.
struct ProblemFile {
  std::string name;
  DecisionProblem problem;
  std::vector<MeasurementModel> measurements;
  std::vector<double> deltas;

  bool operator==(const ProblemFile&) const = default;
};

// Parses a problem document. Unknown keys are rejected. Throws FileError on
// structural problems and ValidationError when the parsed problem or any
// measurement fails validation.
ProblemFile parse_problem_file(const std::string& text);

ProblemFile load_problem_file(const std::filesystem::path& path);

// Canonical document for a problem: fixed key order, explicit likelihoods,
// full-precision numbers. parse(render(f)) reproduces f's structures
// exactly (generative measurements render in expanded form).
std::string render_problem_file(const ProblemFile& file);

}  // namespace voi

#include "voi/problem_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace voi {

namespace {

using ojson = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw FileError(path + ": " + message);
}

void require_object(const ojson& v, const std::string& path) {
  if (!v.is_object()) fail(path, "expected an object");
}

void require_array(const ojson& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array");
}

// Strict schema: every key must be known, every required key present.
void check_keys(const ojson& obj, const std::string& path, std::set<std::string> required,
                const std::set<std::string>& optional = {}) {
  for (const auto& [key, value] : obj.items()) {
    if (required.erase(key) > 0) continue;
    if (optional.contains(key)) continue;
    fail(path, "unknown key '" + key + "'");
  }
  for (const std::string& key : required) {
    fail(path, "missing required key '" + key + "'");
  }
}

std::string get_string(const ojson& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

double get_number(const ojson& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

std::string elem(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

std::vector<std::vector<double>> get_number_rows(const ojson& v, const std::string& path) {
  require_array(v, path);
  std::vector<std::vector<double>> rows;
  rows.reserve(v.size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    const std::string row_path = elem(path, r);
    require_array(v[r], row_path);
    std::vector<double> row;
    row.reserve(v[r].size());
    for (std::size_t c = 0; c < v[r].size(); ++c) {
      row.push_back(get_number(v[r][c], elem(row_path, c)));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      fail(row_path, "has " + std::to_string(row.size()) + " entries, expected " +
                         std::to_string(rows.front().size()) + " (rows must be rectangular)");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

MeasurementModel parse_measurement(const ojson& v, const std::string& path,
                                   std::size_t state_count) {
  require_object(v, path);
  MeasurementModel m;
  if (v.contains("binomial")) {
    check_keys(v, path, {"name", "binomial"});
    m.name = get_string(v.at("name"), path + ".name");
    const ojson& b = v.at("binomial");
    const std::string bpath = path + ".binomial";
    require_object(b, bpath);
    check_keys(b, bpath, {"n", "survival"});
    if (!b.at("n").is_number_integer()) fail(bpath + ".n", "expected an integer");
    const long long n = b.at("n").get<long long>();
    if (n < 1 || n > 1000000) fail(bpath + ".n", "must be within [1, 1000000], got " +
                                                     std::to_string(n));
    const ojson& survival = b.at("survival");
    const std::string spath = bpath + ".survival";
    require_array(survival, spath);
    if (survival.size() != state_count) {
      fail(spath, "has " + std::to_string(survival.size()) + " entries, expected one per state (" +
                      std::to_string(state_count) + ")");
    }
    std::vector<double> probs;
    probs.reserve(survival.size());
    for (std::size_t i = 0; i < survival.size(); ++i) {
      const double p = get_number(survival[i], elem(spath, i));
      if (!(p >= 0.0 && p <= 1.0)) {
        fail(elem(spath, i), "survival probability must be within [0,1]");
      }
      probs.push_back(p);
    }
    return binomial_trial(m.name, static_cast<int>(n), probs);
  }

  check_keys(v, path, {"name", "outcomes", "likelihood"});
  m.name = get_string(v.at("name"), path + ".name");
  const ojson& outcomes = v.at("outcomes");
  require_array(outcomes, path + ".outcomes");
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    m.outcomes.push_back(get_string(outcomes[i], elem(path + ".outcomes", i)));
  }
  const auto rows = get_number_rows(v.at("likelihood"), path + ".likelihood");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.outcomes.size()) {
      fail(elem(path + ".likelihood", r),
           "has " + std::to_string(rows[r].size()) + " entries, expected one per outcome (" +
               std::to_string(m.outcomes.size()) + ")");
    }
  }
  m.likelihood = Matrix::from_rows(rows);
  return m;
}

std::size_t line_of_byte(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

ojson matrix_to_json(const Matrix& m) {
  ojson rows = ojson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations_in)
    : std::runtime_error([&violations_in] {
        std::ostringstream os;
        for (std::size_t i = 0; i < violations_in.size(); ++i) {
          if (i > 0) os << '\n';
          os << violations_in[i];
        }
        return os.str();
      }()),
      violations(std::move(violations_in)) {}

ProblemFile parse_problem_file(const std::string& text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FileError("syntax error at line " + std::to_string(line_of_byte(text, e.byte)) + ": " +
                    e.what());
  }
  require_object(doc, "$");
  check_keys(doc, "$", {"name", "states", "actions", "values"}, {"measurements", "deltas"});

  ProblemFile pf;
  pf.name = get_string(doc.at("name"), "$.name");

  const ojson& states = doc.at("states");
  require_array(states, "$.states");
  for (std::size_t i = 0; i < states.size(); ++i) {
    const std::string path = elem("$.states", i);
    require_object(states[i], path);
    check_keys(states[i], path, {"label", "prior"});
    pf.problem.states.labels.push_back(get_string(states[i].at("label"), path + ".label"));
    pf.problem.states.probs.push_back(get_number(states[i].at("prior"), path + ".prior"));
  }

  const ojson& actions = doc.at("actions");
  require_array(actions, "$.actions");
  if (actions.empty()) fail("$.actions", "must contain at least one action");
  for (std::size_t i = 0; i < actions.size(); ++i) {
    pf.problem.actions.push_back(get_string(actions[i], elem("$.actions", i)));
  }

  pf.problem.values = Matrix::from_rows(get_number_rows(doc.at("values"), "$.values"));

  if (doc.contains("measurements")) {
    const ojson& measurements = doc.at("measurements");
    require_array(measurements, "$.measurements");
    std::set<std::string> names;
    for (std::size_t i = 0; i < measurements.size(); ++i) {
      const std::string path = elem("$.measurements", i);
      MeasurementModel m = parse_measurement(measurements[i], path, pf.problem.states.size());
      if (!names.insert(m.name).second) {
        fail(path + ".name", "duplicate measurement name '" + m.name + "'");
      }
      pf.measurements.push_back(std::move(m));
    }
  }

  if (doc.contains("deltas")) {
    const ojson& deltas = doc.at("deltas");
    require_array(deltas, "$.deltas");
    for (std::size_t i = 0; i < deltas.size(); ++i) {
      const double d = get_number(deltas[i], elem("$.deltas", i));
      if (!(d >= 0.0)) fail(elem("$.deltas", i), "rVSI threshold must be >= 0");
      pf.deltas.push_back(d);
    }
  }

  std::vector<std::string> violations = validate_problem(pf.problem).errors;
  for (std::size_t i = 0; i < pf.measurements.size(); ++i) {
    for (const std::string& e : validate_measurement(pf.problem, pf.measurements[i]).errors) {
      violations.push_back(elem("$.measurements", i) + " ('" + pf.measurements[i].name +
                           "') " + e);
    }
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return pf;
}

ProblemFile load_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem_file(buffer.str());
}

std::string render_problem_file(const ProblemFile& file) {
  ojson doc;
  doc["name"] = file.name;
  ojson states = ojson::array();
  for (std::size_t i = 0; i < file.problem.states.size(); ++i) {
    ojson s;
    s["label"] = file.problem.states.labels[i];
    s["prior"] = file.problem.states.probs[i];
    states.push_back(std::move(s));
  }
  doc["states"] = std::move(states);
  doc["actions"] = file.problem.actions;
  doc["values"] = matrix_to_json(file.problem.values);
  ojson measurements = ojson::array();
  for (const MeasurementModel& m : file.measurements) {
    ojson j;
    j["name"] = m.name;
    j["outcomes"] = m.outcomes;
    j["likelihood"] = matrix_to_json(m.likelihood);
    measurements.push_back(std::move(j));
  }
  doc["measurements"] = std::move(measurements);
  if (!file.deltas.empty()) doc["deltas"] = file.deltas;
  return doc.dump(2) + "\n";
}

}  // namespace voi

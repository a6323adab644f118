#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "voi/render.hpp"

namespace {

// Exit codes, kept distinct so scripts can tell failure modes apart.
constexpr int kExitCommandError = 1;  // bad usage at the data level (unknown name, unwritable output)
constexpr int kExitParseError = 2;    // document is structurally broken
constexpr int kExitValidation = 3;    // document parsed but violates model invariants
constexpr int kExitFault = 4;         // internal arithmetic fault

struct Options {
  std::string file;
  std::string measurement;
  std::vector<double> deltas;
  bool deltas_set = false;
  bool perfect = false;
  std::string format = "table";
  std::string grid;
  std::string output;
};

int write_output(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return kExitCommandError;
  }
  out << content;
  out.flush();
  if (!out) {
    std::cerr << "error: write to '" << path << "' failed\n";
    return kExitCommandError;
  }
  return 0;
}

std::span<const double> effective_deltas(const Options& opt, const voi::ProblemFile& file) {
  return opt.deltas_set ? std::span<const double>(opt.deltas)
                        : std::span<const double>(file.deltas);
}

const voi::MeasurementModel* find_measurement(const voi::ProblemFile& file,
                                              const std::string& name) {
  for (const voi::MeasurementModel& m : file.measurements) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

// Resolves which measurement `analyze`/`sweep` should use. A file with a
// single measurement needs no --measurement flag.
const voi::MeasurementModel* pick_measurement(const voi::ProblemFile& file,
                                              const std::string& name) {
  if (name.empty()) {
    if (file.measurements.size() == 1) return &file.measurements.front();
    std::cerr << "error: " << (file.measurements.empty()
                                   ? "the file defines no measurements"
                                   : "--measurement is required when the file defines several")
              << '\n';
    return nullptr;
  }
  const voi::MeasurementModel* m = find_measurement(file, name);
  if (m == nullptr) {
    std::cerr << "error: unknown measurement '" << name << "'; available:";
    for (const voi::MeasurementModel& each : file.measurements) std::cerr << ' ' << each.name;
    std::cerr << '\n';
  }
  return m;
}

int run_analyze(const Options& opt) {
  const voi::ProblemFile file = voi::load_problem_file(opt.file);
  voi::VoiReport report;
  if (opt.perfect) {
    report = voi::perfect_info_report(file.problem, effective_deltas(opt, file));
  } else {
    const voi::MeasurementModel* m = pick_measurement(file, opt.measurement);
    if (m == nullptr) return kExitCommandError;
    report = voi::analyze(file.problem, *m, effective_deltas(opt, file));
  }
  const std::string out = opt.format == "csv" ? voi::render_report_csv(report)
                                              : voi::render_report_table(file, report);
  return write_output(out, opt.output);
}

int run_compare(const Options& opt) {
  const voi::ProblemFile file = voi::load_problem_file(opt.file);
  if (file.measurements.empty()) {
    std::cerr << "error: '" << opt.file << "' defines no measurements to compare\n";
    return kExitCommandError;
  }
  const voi::DesignComparison cmp =
      voi::compare_designs(file.problem, file.measurements, effective_deltas(opt, file));
  const std::string out = opt.format == "csv" ? voi::render_comparison_csv(cmp)
                                              : voi::render_comparison_table(file, cmp);
  return write_output(out, opt.output);
}

bool parse_grid(const std::string& spec, std::vector<double>& grid) {
  double start = 0.0, stop = 0.0, step = 0.0;
  char trailing = 0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &start, &stop, &step, &trailing) != 3) {
    std::cerr << "error: grid must be start:stop:step, got '" << spec << "'\n";
    return false;
  }
  if (!(start >= 0.0) || stop < start || !(step > 0.0)) {
    std::cerr << "error: grid requires 0 <= start <= stop and step > 0\n";
    return false;
  }
  const auto count = static_cast<std::size_t>((stop - start) / step + 1e-9);
  grid.clear();
  for (std::size_t i = 0; i <= count; ++i) grid.push_back(start + static_cast<double>(i) * step);
  return true;
}

int run_sweep(const Options& opt) {
  std::vector<double> grid;
  if (!parse_grid(opt.grid, grid)) return kExitCommandError;
  const voi::ProblemFile file = voi::load_problem_file(opt.file);
  voi::VoiReport report;
  if (opt.perfect) {
    report = voi::perfect_info_report(file.problem, grid);
  } else {
    const voi::MeasurementModel* m = pick_measurement(file, opt.measurement);
    if (m == nullptr) return kExitCommandError;
    report = voi::analyze(file.problem, *m, grid);
  }
  return write_output(voi::render_sweep_csv(report.deltas, report.rvsi), opt.output);
}

int run_validate(const Options& opt) {
  const voi::ProblemFile file = voi::load_problem_file(opt.file);
  std::ostringstream os;
  os << "OK: " << file.name << " (" << file.problem.states.size() << " states, "
     << file.problem.actions.size() << " actions, " << file.measurements.size()
     << " measurement(s))\n";
  return write_output(os.str(), opt.output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Bayesian value-of-information analysis"};
  app.require_subcommand(1);
  Options opt;

  const auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("file", opt.file, "problem document (JSON)")->required();
    cmd->add_option("-o,--output", opt.output, "write to a file instead of standard output");
  };
  const auto add_deltas = [&opt](CLI::App* cmd) {
    cmd->add_option("--deltas", opt.deltas, "rVSI thresholds (overrides the file's list)")
        ->delimiter(',')
        ->trigger_on_parse()
        ->each([&opt](const std::string&) { opt.deltas_set = true; });
  };
  const auto add_format = [&opt](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "csv"}))
        ->capture_default_str();
  };

  CLI::App* analyze = app.add_subcommand("analyze", "metrics for one measurement design");
  add_common(analyze);
  analyze->add_option("-m,--measurement", opt.measurement, "measurement name from the file");
  analyze->add_flag("--perfect", opt.perfect, "analyze the perfect-information measurement");
  add_deltas(analyze);
  add_format(analyze);

  CLI::App* compare = app.add_subcommand("compare", "rank every design in the file");
  add_common(compare);
  add_deltas(compare);
  add_format(compare);

  CLI::App* sweep = app.add_subcommand("sweep", "rVSI_delta over a threshold grid, as CSV");
  add_common(sweep);
  sweep->add_option("-m,--measurement", opt.measurement, "measurement name from the file");
  sweep->add_flag("--perfect", opt.perfect, "sweep the perfect-information measurement");
  sweep->add_option("--grid", opt.grid, "threshold grid start:stop:step")->required();

  CLI::App* validate = app.add_subcommand("validate", "check a problem document");
  add_common(validate);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(opt);
    if (compare->parsed()) return run_compare(opt);
    if (sweep->parsed()) return run_sweep(opt);
    return run_validate(opt);
  } catch (const voi::FileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const voi::ValidationError& e) {
    std::cerr << "invalid problem document:\n" << e.what() << '\n';
    return kExitValidation;
  } catch (const voi::ArithmeticFault& e) {
    std::cerr << "internal arithmetic fault: " << e.what() << '\n';
    return kExitFault;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCommandError;
  }
}

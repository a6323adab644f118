#include "voi/render.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

namespace voi {

namespace {

// Minimal RFC-4180 quoting; labels may contain commas or quotes.
std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Two-column aligned block: left-padded numeric columns, left-aligned text.
struct TableWriter {
  std::vector<std::vector<std::string>> rows;
  std::vector<bool> right_align;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }

  std::string str() const {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
      if (widths.size() < row.size()) widths.resize(row.size(), 0);
      for (std::size_t c = 0; c < row.size(); ++c) {
        widths[c] = std::max(widths[c], row[c].size());
      }
    }
    std::ostringstream os;
    for (const auto& row : rows) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        const bool right = c < right_align.size() && right_align[c];
        const std::size_t pad = widths[c] - row[c].size();
        if (c > 0) line += "  ";
        if (right) line.append(pad, ' ');
        line += row[c];
        if (!right && c + 1 < row.size()) line.append(pad, ' ');
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      os << line << '\n';
    }
    return os.str();
  }
};

std::string percent(double fraction) { return format_fixed(fraction * 100.0, 1) + "%"; }

}  // namespace

std::string format_full(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_fixed(double v, int places) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, v);
  std::string out(buf);
  // "-0.0000" reads as a sign error; show it as zero.
  if (out.find_first_not_of("-0.") == std::string::npos && out.front() == '-') {
    out.erase(0, 1);
  }
  return out;
}

std::string action_change_note(const OutcomeRow& row, std::string_view prior_action) {
  if (row.action_changed) return "Yes, " + row.posterior_action + " instead";
  return "No, still " + std::string(prior_action);
}

std::string render_report_table(const ProblemFile& file, const VoiReport& report) {
  std::ostringstream os;
  os << "Problem: " << file.name << " (" << file.problem.states.size() << " states, "
     << file.problem.actions.size() << " actions)\n";
  os << "Measurement: " << report.measurement << " (" << report.rows.size()
     << " outcomes with p(x) > 0)\n\n";

  TableWriter ev;
  ev.right_align = {false, true, false};
  for (std::size_t a = 0; a < report.ev_per_action.size(); ++a) {
    ev.add({"  EV(" + file.problem.actions[a] + ")", format_fixed(report.ev_per_action[a], 4),
            a == report.optimal_action_index ? "<- optimal under uncertainty (a*)" : ""});
  }
  os << "Expected value per action:\n" << ev.str();

  os << "EV(uncertainty)      = " << format_fixed(report.ev_uncertainty, 4) << '\n'
     << "EV(certainty)        = " << format_fixed(report.ev_certainty, 4) << '\n'
     << "EVPI                 = " << format_fixed(report.evpi, 4) << '\n'
     << "EV(less uncertainty) = " << format_fixed(report.ev_less_uncertainty, 4) << '\n'
     << "EVSI = " << format_fixed(report.evsi, 4) << " +/- " << format_fixed(report.sigma_vsi, 4)
     << " (sigma VSI)\n";
  for (std::size_t i = 0; i < report.deltas.size(); ++i) {
    os << "rVSI_" << format_full(report.deltas[i]) << " = " << format_fixed(report.rvsi[i], 4)
       << '\n';
  }
  os << '\n';

  TableWriter rows;
  rows.right_align = {false, true, true, true, false};
  rows.add({"outcome", "dEV_x", "VSI_x", "p(x)", "action change"});
  for (const OutcomeRow& row : report.rows) {
    rows.add({row.outcome, format_fixed(row.delta_ev, 4), format_fixed(row.vsi, 4),
              format_fixed(row.probability, 4), action_change_note(row, report.optimal_action)});
  }
  os << rows.str();

  if (!report.zero_outcomes.empty()) {
    os << "\noutcomes with p(x) = 0 (excluded):";
    for (const std::string& z : report.zero_outcomes) os << ' ' << z;
    os << '\n';
  }
  return os.str();
}

std::string render_report_csv(const VoiReport& report) {
  std::ostringstream os;
  os << "outcome,p_x,delta_ev,vsi,posterior_action,action_changed\n";
  for (const OutcomeRow& row : report.rows) {
    os << csv_field(row.outcome) << ',' << format_full(row.probability) << ','
       << format_full(row.delta_ev) << ',' << format_full(row.vsi) << ','
       << csv_field(row.posterior_action) << ',' << (row.action_changed ? "true" : "false")
       << '\n';
  }
  return os.str();
}

std::string render_comparison_table(const ProblemFile& file, const DesignComparison& cmp) {
  std::ostringstream os;
  os << "Problem: " << file.name << " (" << file.problem.states.size() << " states, "
     << file.problem.actions.size() << " actions)\n";
  os << cmp.designs.size() << " design(s) compared by expected utility u(d) = EVSI; best: "
     << cmp.best_design << "\n\n";

  TableWriter table;
  table.right_align = {false, true};
  std::vector<std::string> header{"design", "EVSI +/- sigmaVSI"};
  for (double d : cmp.deltas) header.push_back("rVSI_" + format_full(d));
  header.push_back("");
  table.right_align.resize(header.size() - 1, true);
  table.add(std::move(header));
  for (std::size_t i = 0; i < cmp.designs.size(); ++i) {
    const DesignMetrics& d = cmp.designs[i];
    std::vector<std::string> row{d.name, format_fixed(d.expected_utility, 4) + " +/- " +
                                             format_fixed(d.sigma_vsi, 4)};
    for (double r : d.rvsi) row.push_back(percent(r));
    row.push_back(i == cmp.best_index ? "<- best" : "");
    table.add(std::move(row));
  }
  os << table.str();
  return os.str();
}

std::string render_comparison_csv(const DesignComparison& cmp) {
  std::ostringstream os;
  os << "design,evsi,sigma_vsi";
  for (double d : cmp.deltas) os << ",rvsi_" << format_full(d);
  os << '\n';
  for (const DesignMetrics& d : cmp.designs) {
    os << csv_field(d.name) << ',' << format_full(d.expected_utility) << ','
       << format_full(d.sigma_vsi);
    for (double r : d.rvsi) os << ',' << format_full(r);
    os << '\n';
  }
  return os.str();
}

std::string render_sweep_csv(std::span<const double> deltas, std::span<const double> rvsi) {
  std::ostringstream os;
  os << "delta,rvsi\n";
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    os << format_full(deltas[i]) << ',' << format_full(rvsi[i]) << '\n';
  }
  return os.str();
}

}  // namespace voi

#pragma once

#include "voi/design.hpp"
#include "voi/problem_io.hpp"

namespace voi {

// Shortest decimal form that parses back to the same 64-bit float. Used for
// CSV and canonical documents.
std::string format_full(double v);

// Fixed-point with `places` decimals, round-half-to-even, negative zero
// normalized away. Used for human-readable tables.
std::string format_fixed(double v, int places);

// "Yes, <action> instead" / "No, still <prior action>" narration for an
// outcome row.
std::string action_change_note(const OutcomeRow& row, std::string_view prior_action);

std::string render_report_table(const ProblemFile& file, const VoiReport& report);
std::string render_report_csv(const VoiReport& report);

std::string render_comparison_table(const ProblemFile& file, const DesignComparison& cmp);
std::string render_comparison_csv(const DesignComparison& cmp);

std::string render_sweep_csv(std::span<const double> deltas, std::span<const double> rvsi);

}  // namespace voi

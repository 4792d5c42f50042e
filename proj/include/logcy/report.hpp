#pragma once

#include "logcy/pair_io.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace logcy {

/// A command's JSON report and process exit code
/// (0 ok/Isomorphic, 1 diagnostic/Distinct, 2 error/Inconclusive).
struct CommandResult {
  Json report;
  int exit_code = 0;
};

CommandResult cmd_validate(const std::string& pair_path);
CommandResult cmd_invariants(const std::string& pair_path, std::uint64_t seed, int trials = 100);
CommandResult cmd_periods(const std::string& pair_path, const std::optional<std::string>& marking_path);
CommandResult cmd_compare(const std::string& pair_a, const std::string& pair_b,
                          const std::optional<std::string>& corr_path, std::optional<std::size_t> search_bound);
CommandResult cmd_oracle_check(const std::string& pair_path, bool flip_orientation);
/// Re-evaluates the witness in a compare report through the cocycle path.
CommandResult cmd_recheck(const std::string& pair_a, const std::string& pair_b,
                          const std::optional<std::string>& corr_path, const std::string& report_path);

/// Envelope {"format", "version", "command", "inputs_digest", "exact", "results"}.
Json make_report(const std::string& command, const std::vector<std::string>& input_texts, Json results);

/// Short human-readable rendering of a report.
std::string render_text(const Json& report);

Json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

}  // namespace logcy

// logcy3: command-line front end for the logcy library.
#include "logcy/report.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants and Torelli comparison for log Calabi-Yau threefold pairs"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Print the full JSON report");

  std::string file, file_b, corr, marking, report;
  std::uint64_t seed = 1;
  int trials = 100;
  std::size_t bound = 0;
  bool flip = false;

  auto* validate = app.add_subcommand("validate", "Parse and validate a pair document");
  validate->add_option("pair", file)->required();

  auto* invariants = app.add_subcommand("invariants", "Lattices, contractions and a randomized property suite");
  invariants->add_option("pair", file)->required();
  invariants->add_option("--seed", seed, "Seed for the property suite");
  invariants->add_option("--trials", trials, "Random markings per property")->check(CLI::PositiveNumber);

  auto* periods = app.add_subcommand("periods", "Marked and unmarked period tables");
  periods->add_option("pair", file)->required();
  periods->add_option("--marking", marking, "Marking document");

  auto* compare = app.add_subcommand("compare", "Decide isomorphism under a correspondence");
  compare->add_option("pair_a", file)->required();
  compare->add_option("pair_b", file_b)->required();
  compare->add_option("--corr", corr, "Correspondence document (identity when omitted)");
  auto* bound_opt = compare->add_option("--search-bound", bound, "Also try reorderings of exceptional curves, up to this many");

  auto* oracle = app.add_subcommand("oracle-check", "Cross-check periods and cubic forms by independent paths");
  oracle->add_option("pair", file)->required();
  oracle->add_flag("--flip-orientation", flip, "Read the dual complex with the opposite orientation");

  auto* recheck = app.add_subcommand("recheck", "Re-verify the witness of a compare report");
  recheck->add_option("pair_a", file)->required();
  recheck->add_option("pair_b", file_b)->required();
  recheck->add_option("--report", report, "Report written by compare --json")->required();
  recheck->add_option("--corr", corr, "Correspondence document (identity when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto opt = [](const std::string& s) { return s.empty() ? std::nullopt : std::optional<std::string>(s); };
  logcy::CommandResult r;
  if (*validate) r = logcy::cmd_validate(file);
  else if (*invariants) r = logcy::cmd_invariants(file, seed, trials);
  else if (*periods) r = logcy::cmd_periods(file, opt(marking));
  else if (*compare)
    r = logcy::cmd_compare(file, file_b, opt(corr), bound_opt->count() ? std::optional<std::size_t>(bound) : std::nullopt);
  else if (*oracle) r = logcy::cmd_oracle_check(file, flip);
  else r = logcy::cmd_recheck(file, file_b, opt(corr), report);

  if (json) std::cout << r.report.dump(2) << "\n";
  else std::cout << logcy::render_text(r.report);
  return r.exit_code;
}

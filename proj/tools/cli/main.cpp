#include <omp.h>

#include "common.hpp"

int main(int argc, char** argv) {
  using namespace iyb::cli;
  CLI::App app{"Exact checks for left braces, Lazard products and faithful nilpotent representations", "iyb"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--seed", g.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--budget", g.budget, "Resource budget (S-polynomial reductions for gb solve)")->capture_default_str();
  app.add_option("--threads", g.threads, "OpenMP threads (0 = runtime default)");

  Runner run;
  register_lie(app, g, run);
  register_brace(app, g, run);
  register_lazard(app, g, run);
  register_repr(app, g, run);
  register_prop(app, g, run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (g.threads > 0) omp_set_num_threads(g.threads);
  Report r;
  try {
    if (!run) throw iyb::InputError("incomplete command; see --help");
    r = run();
  } catch (const iyb::BudgetExceeded& e) {
    r = {kBudget, std::string("budget exceeded: ") + e.what(), json{{"error", "budget exceeded"}, {"detail", e.what()}}};
  } catch (const iyb::InputError& e) {
    r = {kInputError, std::string("input error: ") + e.what(), json{{"error", "input"}, {"detail", e.what()}}};
  } catch (const std::invalid_argument& e) {
    r = {kInputError, std::string("input error: ") + e.what(), json{{"error", "input"}, {"detail", e.what()}}};
  }
  if (g.json) {
    r.data["exit_code"] = r.code;
    std::cout << r.data.dump(2) << "\n";
  } else {
    (r.code == kInputError || r.code == kBudget ? std::cerr : std::cout) << r.text << (r.text.empty() || r.text.back() == '\n' ? "" : "\n");
  }
  return r.code;
}

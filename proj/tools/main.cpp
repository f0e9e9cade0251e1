#include "heisym/algebra_io.hpp"
#include "heisym/report.hpp"
#include "heisym/scenarios.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <iostream>
#include <thread>

namespace {

using namespace heisym;

Report timed_run(const Scenario& scenario, const ScenarioContext& ctx, bool timing) {
  auto start = std::chrono::steady_clock::now();
  Report report = scenario.run(ctx);
  auto end = std::chrono::steady_clock::now();
  // Timing is opt-in so that default output is byte-identical across runs.
  report.elapsed_ms =
      timing ? std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count() : 0;
  return report;
}

void print_report(const Report& report, bool json) {
  if (json)
    std::cout << report_to_json(report) << "\n";
  else
    std::cout << report_to_text(report);
}

int run_check(const std::string& path, bool json) {
  AlgebraFileResult loaded = load_algebra_file(path);
  if (!loaded.format_errors.empty()) {
    for (const auto& e : loaded.format_errors) std::cerr << "error: " << e << "\n";
    return 2;
  }
  Report report;
  report.scenario = "check:" + path;
  for (const auto& e : loaded.validation_errors)
    report.checks.push_back({"algebra axioms", "satisfied", e, false});
  if (loaded.algebra) {
    const LieAlgebra& L = *loaded.algebra;
    report.expect_true("antisymmetry and Jacobi identity", true);
    report.note("dimension", std::to_string(L.dim()));
    report.note("center dimension", std::to_string(L.center().dim()));
    report.note("derived subalgebra dimension", std::to_string(L.derived_subalgebra().dim()));
  }
  print_report(report, json);
  return report.status() == ReportStatus::Pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification scenarios for graded Heisenberg structures"};
  app.require_subcommand(1);

  auto* list_cmd = app.add_subcommand("list", "List the registered scenarios");

  std::string run_name;
  std::uint64_t seed = kDefaultSeed;
  bool json = false, timing = false;
  unsigned jobs = 1;
  auto* run_cmd = app.add_subcommand("run", "Run one scenario");
  run_cmd->add_option("scenario", run_name, "Scenario name")->required();
  run_cmd->add_option("--seed", seed, "Sampling seed");
  run_cmd->add_flag("--json", json, "Emit the JSON report schema");
  run_cmd->add_flag("--timing", timing, "Include wall-clock elapsed_ms");

  auto* run_all_cmd = app.add_subcommand("run-all", "Run every scenario");
  run_all_cmd->add_option("--seed", seed, "Sampling seed");
  run_all_cmd->add_flag("--json", json, "Emit the JSON report schema");
  run_all_cmd->add_flag("--timing", timing, "Include wall-clock elapsed_ms");
  run_all_cmd->add_option("--jobs", jobs, "Scenarios to run in parallel")
      ->check(CLI::Range(1u, 64u));

  std::string check_path;
  auto* check_cmd = app.add_subcommand("check", "Validate an algebra file");
  check_cmd->add_option("file", check_path, "Algebra JSON file")->required();
  check_cmd->add_flag("--json", json, "Emit the JSON report schema");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (list_cmd->parsed()) {
    for (const auto& s : heisym::scenario_registry())
      std::cout << s.name << "  -  " << s.description << "\n";
    return 0;
  }

  ScenarioContext ctx{seed};

  if (run_cmd->parsed()) {
    const Scenario* scenario = heisym::find_scenario(run_name);
    if (!scenario) {
      std::cerr << "error: unknown scenario '" << run_name << "'\n";
      return 2;
    }
    Report report = timed_run(*scenario, ctx, timing);
    print_report(report, json);
    return report.status() == ReportStatus::Pass ? 0 : 1;
  }

  if (run_all_cmd->parsed()) {
    const auto& registry = heisym::scenario_registry();
    std::vector<Report> reports(registry.size());
    if (jobs <= 1) {
      for (std::size_t i = 0; i < registry.size(); ++i)
        reports[i] = timed_run(registry[i], ctx, timing);
    } else {
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= registry.size()) break;
          reports[i] = timed_run(registry[i], ctx, timing);
        }
      };
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    bool all_pass = true;
    for (const auto& r : reports) {
      print_report(r, json);
      all_pass = all_pass && r.status() == ReportStatus::Pass;
    }
    return all_pass ? 0 : 1;
  }

  if (check_cmd->parsed()) return run_check(check_path, json);
  return 2;
}

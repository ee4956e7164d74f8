#include <iostream>

#include <CLI11.hpp>

#include "kdg/report.hpp"

namespace {

void print(const kdg::Json& canonical, const kdg::Json& timings, bool canonical_only) {
  if (canonical_only) {
    std::cout << canonical.dump(2) << "\n";
    return;
  }
  kdg::Json out = canonical;
  out["timings_ms"] = timings;
  std::cout << out.dump(2) << "\n";
}

// One line per task on stderr, so stdout stays pure JSON.
void summarize(const kdg::Json& report, const std::string& prefix) {
  for (const auto& t : report.value("tasks", kdg::Json::array())) {
    std::string line = prefix + t["task"].get<std::string>() + ": " + t["status"].get<std::string>();
    if (t.contains("result") && t["result"].is_object() && t["result"].contains("verdict"))
      line += " " + t["result"]["verdict"].get<std::string>();
    if (t.contains("expected")) line += " (expected " + t["expected"].get<std::string>() + ")";
    std::cerr << line << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Koszul DG-ring computations and check suites"};
  app.require_subcommand(1);
  app.fallthrough();

  kdg::RunOptions opt;
  std::string field;
  int degree_cap = 0, budget = 0;
  bool canonical = false, quiet = false;
  auto* f_field = app.add_option("--field", field, "coefficient field: F<p> or QQ");
  auto* f_cap = app.add_option("--degree-cap", degree_cap, "S-pair degree cap")->check(CLI::PositiveNumber);
  auto* f_budget = app.add_option("--budget", budget, "regularity tests per greedy search")->check(CLI::PositiveNumber);
  app.add_option("--oracle-depth", opt.oracle_depth, "truncation oracle through this internal degree; 0 disables")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--canonical", canonical, "omit timings");
  app.add_flag("-q,--quiet", quiet, "no summary on stderr");

  std::string job_path, check_name, dir;
  auto* compute = app.add_subcommand("compute", "run the tasks of a job");
  compute->add_option("job", job_path)->required();
  auto* check = app.add_subcommand("check", "run one named check on a job");
  check->add_option("name", check_name)->required();
  check->add_option("job", job_path)->required();
  auto* suite = app.add_subcommand("suite", "run every job in a directory");
  suite->add_option("dir", dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (*f_field) opt.field = field;
  if (*f_cap) opt.degree_cap = degree_cap;
  if (*f_budget) opt.budget = budget;

  try {
    if (*suite) {
      auto r = kdg::run_suite(dir, opt);
      print(r.canonical, r.timings, canonical);
      if (!quiet)
        for (const auto& j : r.canonical["jobs"]) {
          const std::string name = j["file"].get<std::string>();
          if (j.contains("error")) std::cerr << name << ": " << j["error"].get<std::string>() << "\n";
          else summarize(j["report"], name + " ");
        }
      return r.exit_code;
    }
    kdg::JobSpec spec = kdg::load_job(job_path);
    if (*check) {
      const auto& names = kdg::check_names();
      if (std::find(names.begin(), names.end(), check_name) == names.end())
        throw kdg::InputError("unknown check '" + check_name + "'");
      spec.tasks = {"check:" + check_name};
    }
    auto r = kdg::run_job(spec, opt);
    print(r.canonical, r.timings, canonical);
    if (!quiet) summarize(r.canonical, "");
    return r.exit_code;
  } catch (const kdg::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const kdg::ResourceCapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  }
}

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kdg/job.hpp"

namespace kdg {

inline constexpr const char* kReportSchema = "kdg-report/1";

enum class Verdict { pass, fail, hypothesis_not_met, unknown };
std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// The twelve named checks, in report order.
const std::vector<std::string>& check_names();

/// Hilbert series as {low, numerator, pole_order} with every (1 - t) factor cancelled.
Json series_json(const HilbertSeries& h);
Json homology_json(const Complex& c);
/// Truncation-oracle comparison through internal degree `depth` (0 disables); sets *agree.
Json oracle_json(const Complex& c, int depth, bool* agree);
Json polys_json(const std::vector<Polynomial>& ps);

/// Result of one check on one job: aggregate verdict plus per-instance records.
Json run_check(const std::string& name, const JobContext& ctx, const RunOptions& options);

enum class TaskStatus { ok, input_error, resource_cap, internal_error };

struct TaskOutcome {
  std::string task;
  TaskStatus status = TaskStatus::ok;
  Json result;
  std::string error;
  double millis = 0;
};

struct JobReport {
  Json canonical;  // deterministic part
  Json timings;    // per-task wall time, kept apart
  int exit_code = 0;
};

/// Runs every task of the job; a task's failure is recorded without touching the others.
/// `fault` (tests only) is called before each task and may throw to simulate a failure.
JobReport run_job(const JobSpec& spec, const RunOptions& options,
                  const std::function<void(const std::string&)>& fault = {});

/// Exit code for a finished report: 2 input error, 3 resource cap, 1 failed check, else 0.
int exit_code_of(const Json& canonical);

struct SuiteReport {
  Json canonical;
  Json timings;
  int exit_code = 0;
};

/// Runs every *.json job under dir (sorted by name). Each job's "expect" map names the verdict
/// each check task must produce; without an entry a check must not FAIL.
SuiteReport run_suite(const std::string& dir, const RunOptions& options);

}  // namespace kdg

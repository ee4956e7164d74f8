#include "kdg/report.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>

#include "kdg/duality.hpp"
#include "kdg/invariants.hpp"
#include "kdg/oracle.hpp"
#include "kdg/parser.hpp"

namespace kdg {

namespace {

Json int_json(int v) {
  if (is_infinite(v)) return int_or_infinity(v);
  return v;
}

std::string status_name(TaskStatus s) {
  switch (s) {
    case TaskStatus::ok: return "ok";
    case TaskStatus::input_error: return "input-error";
    case TaskStatus::resource_cap: return "resource-cap";
    case TaskStatus::internal_error: return "internal-error";
  }
  return "internal-error";
}

SearchBudget budget_of(const RunOptions& o) {
  SearchBudget b;
  if (o.budget) b.max_tests = *o.budget;
  return b;
}

Json amp_json(const AmpProfile& p) {
  return {{"inf", int_json(p.inf)}, {"sup", int_json(p.sup)}, {"amp", int_json(p.amp)}};
}

Json invariants_task(const JobContext& ctx, const RunOptions& opt) {
  auto rep = compute_invariants(ctx.a, ctx.sequences, budget_of(opt));
  Json j;
  j["amplitude"] = amp_json(rep.amp);
  j["dim_h0"] = int_json(rep.dim_h0);
  j["lcdim"] = int_json(rep.lcdim);
  j["h0_hilbert"] = series_json(ctx.a->h0()->hilbert_series());
  j["depth_at_irrelevant"] = int_json(rep.depth_at_irrelevant);
  j["seq_depth_at_irrelevant"] = int_json(rep.seq_depth_at_irrelevant);
  j["local_cm"] = to_string(rep.local_cm);
  j["constant_amplitude"] = to_string(rep.constant_amplitude);
  j["cm_certified"] = to_string(rep.cm_certified);
  Json ideals = Json::array();
  for (const auto& e : rep.ideals) {
    ideals.push_back({{"generators", polys_json(e.generators)},
                      {"depth", int_json(e.depth)},
                      {"seq_depth", int_json(e.seq_depth)},
                      {"witness",
                       {{"elements", polys_json(e.witness.elements)},
                        {"tests", e.witness.tests},
                        {"exhausted", e.witness.exhausted}}}});
  }
  j["ideals"] = ideals;
  j["homology"] = homology_json(ctx.a->underlying());
  bool agree = true;
  j["oracle"] = oracle_json(ctx.a->underlying(), opt.oracle_depth, &agree);
  if (!agree) throw std::logic_error("truncation oracle disagrees with the symbolic homology");
  return j;
}

Json koszul_task(const JobContext& ctx, const RunOptions& opt) {
  Json out = Json::array();
  for (const auto& seq : ctx.sequences) {
    auto k = koszul(ctx.a, seq);
    Json j;
    j["sequence"] = polys_json(seq);
    j["amplitude"] = amp_json(amp_profile(k->underlying()));
    j["h0_hilbert"] = series_json(k->h0()->hilbert_series());
    j["homology"] = homology_json(k->underlying());
    bool agree = true;
    j["oracle"] = oracle_json(k->underlying(), opt.oracle_depth, &agree);
    if (!agree) throw std::logic_error("truncation oracle disagrees with the symbolic homology");
    out.push_back(j);
  }
  return out;
}

Json betti_json(const BettiTable& b) {
  Json j = Json::object();
  for (const auto& [i, row] : b.graded) {
    Json r = Json::object();
    for (const auto& [d, n] : row) r[std::to_string(d)] = n;
    j[std::to_string(i)] = r;
  }
  return j;
}

Json duality_task(const JobContext& ctx, const RunOptions&) {
  auto root = ctx.a->kind() == DGRing::Kind::ring ? ctx.a : ctx.a->koszul_root();
  if (!root) throw InputError("duality needs a ring or a Koszul DG-ring over a ring");
  Json j;
  auto g = is_gorenstein_ring(root->base());
  j["betti"] = betti_json(g.betti);
  j["betti_totals"] = g.betti.totals();
  j["codim"] = g.codim;
  j["ring_gorenstein"] = g.gorenstein;
  j["dualizing_amplitude"] = int_json(dualizing_complex(root->base()).complex.amp());
  Json seqs = Json::array();
  for (const auto& seq : ctx.sequences) {
    auto k = koszul(ctx.a, seq);
    Json s;
    s["sequence"] = polys_json(seq);
    s["koszul_amplitude"] = int_json(k->amp());
    s["dualizing_amplitude"] = int_json(dualizing_of_koszul(k).complex.amp());
    if (k->kind() == DGRing::Kind::koszul) {
      auto sd = self_duality_check(k);
      s["self_duality"] = {{"isomorphic", sd.isomorphic}, {"n", sd.n}, {"twist", sd.twist}};
      auto gd = gorenstein_dg_check(k);
      s["gorenstein"] = {{"verdict", to_string(gd.verdict)}, {"level", gd.level}};
    }
    seqs.push_back(s);
  }
  j["sequences"] = seqs;
  return j;
}

// Every check; checks whose inputs are missing from the job are recorded as skipped.
Json suite_task(const JobContext& ctx, const RunOptions& opt) {
  Json j = Json::object();
  for (const auto& name : check_names()) {
    try {
      j[name] = run_check(name, ctx, opt);
    } catch (const InputError& e) {
      j[name] = {{"check", name}, {"verdict", "SKIPPED"}, {"reason", e.what()}};
    }
  }
  return j;
}

Json run_task(const std::string& task, const JobSpec& spec, const RunOptions& opt) {
  JobContext ctx = instantiate(spec, opt);
  if (task == "invariants") return invariants_task(ctx, opt);
  if (task == "koszul") return koszul_task(ctx, opt);
  if (task == "duality") return duality_task(ctx, opt);
  if (task == "suite") return suite_task(ctx, opt);
  if (task.rfind("check:", 0) == 0) return run_check(task.substr(6), ctx, opt);
  throw InputError("/tasks: unknown task '" + task + "'");
}

std::optional<std::string> expected_for(const JobSpec& spec, const std::string& task) {
  auto it = spec.expect.find(task);
  if (it != spec.expect.end()) return it->second;
  if (task.rfind("check:", 0) == 0) {
    it = spec.expect.find(task.substr(6));
    if (it != spec.expect.end()) return it->second;
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::hypothesis_not_met: return "HYPOTHESIS-NOT-MET";
    case Verdict::unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

Verdict verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::pass, Verdict::fail, Verdict::hypothesis_not_met, Verdict::unknown})
    if (to_string(v) == s) return v;
  throw InputError("unknown verdict '" + s + "'");
}

Json series_json(const HilbertSeries& h) {
  auto r = h.reduced();
  return {{"low", r.numerator.is_zero() ? 0 : r.numerator.low()},
          {"numerator", r.numerator.coefficients()},
          {"pole_order", r.numerator.is_zero() ? 0 : r.pole_order}};
}

Json homology_json(const Complex& c) {
  Json j;
  Json table = Json::object();
  for (const auto& [i, h] : c.homology_table())
    if (!h.is_zero()) table[std::to_string(i)] = series_json(h);
  j["degrees"] = table;
  j["inf"] = int_json(c.inf());
  j["sup"] = int_json(c.sup());
  j["amp"] = int_json(c.amp());
  return j;
}

Json oracle_json(const Complex& c, int depth, bool* agree) {
  *agree = true;
  Json j;
  if (depth <= 0 || c.empty()) {
    j["enabled"] = false;
    return j;
  }
  int low = lowest_twist(c);
  int start = std::min(is_infinite(low) ? 0 : low, 0);
  if (depth < start) {
    j["enabled"] = false;
    return j;
  }
  auto table = truncation_oracle(c, depth, start);
  auto mismatch = oracle_mismatch(c, table);
  j["enabled"] = true;
  j["start"] = start;
  j["through_degree"] = depth;
  j["agree"] = !mismatch.has_value();
  if (mismatch) {
    j["mismatch"] = *mismatch;
    *agree = false;
  }
  Json dims = Json::object();
  for (const auto& [i, v] : table.dims)
    if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; })) dims[std::to_string(i)] = v;
  j["dims"] = dims;
  return j;
}

Json polys_json(const std::vector<Polynomial>& ps) {
  Json j = Json::array();
  for (const auto& p : ps) j.push_back(p.to_string());
  return j;
}

JobReport run_job(const JobSpec& spec, const RunOptions& options,
                  const std::function<void(const std::string&)>& fault) {
  JobReport report;
  Json tasks = Json::array();
  report.timings = Json::object();
  for (const auto& task : spec.tasks) {
    TaskOutcome o;
    o.task = task;
    auto t0 = std::chrono::steady_clock::now();
    try {
      if (fault) fault(task);
      o.result = run_task(task, spec, options);
    } catch (const InputError& e) {
      o.status = TaskStatus::input_error, o.error = e.what();
    } catch (const InhomogeneousInput& e) {
      o.status = TaskStatus::input_error, o.error = e.what();
    } catch (const ParseError& e) {
      o.status = TaskStatus::input_error, o.error = e.what();
    } catch (const ResourceCapExceeded& e) {
      o.status = TaskStatus::resource_cap, o.error = e.what();
    } catch (const std::exception& e) {
      o.status = TaskStatus::internal_error, o.error = e.what();
    }
    o.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    Json t;
    t["task"] = task;
    t["status"] = status_name(o.status);
    if (o.status != TaskStatus::ok) t["error"] = o.error;
    else t["result"] = o.result;
    if (auto exp = expected_for(spec, task)) {
      t["expected"] = *exp;
      t["meets_expectation"] = o.status == TaskStatus::ok && o.result.is_object() &&
                               o.result.value("verdict", std::string()) == *exp;
    }
    report.timings[task] = o.millis;
    tasks.push_back(t);
  }
  Json& c = report.canonical;
  c["schema"] = kReportSchema;
  c["job"] = spec.echo;
  c["options"] = {{"field", options.field ? Json(*options.field) : Json(nullptr)},
                  {"degree_cap", options.degree_cap ? Json(*options.degree_cap) : Json(nullptr)},
                  {"budget", options.budget ? Json(*options.budget) : Json(nullptr)},
                  {"oracle_depth", options.oracle_depth}};
  c["tasks"] = tasks;
  Json notes = Json::array();
  for (const auto& t : tasks)
    if (t.contains("result") && t["result"].is_object() && t["result"].contains("notes"))
      for (const auto& n : t["result"]["notes"]) notes.push_back({{"task", t["task"]}, {"note", n}});
  c["notes"] = notes;
  report.exit_code = exit_code_of(c);
  c["exit_code"] = report.exit_code;
  return report;
}

int exit_code_of(const Json& canonical) {
  bool input = false, cap = false, failed = false;
  for (const auto& t : canonical.value("tasks", Json::array())) {
    const std::string st = t.value("status", std::string());
    if (st == "input-error") input = true;
    else if (st == "resource-cap") cap = true;
    else if (st != "ok") failed = true;
    if (t.contains("meets_expectation")) {
      if (!t["meets_expectation"].get<bool>()) failed = true;
    } else if (t.contains("result")) {
      const Json& r = t["result"];
      if (r.is_object() && r.value("verdict", std::string()) == "FAIL") failed = true;
      if (t["task"] == "suite" && r.is_object())
        for (const auto& [name, rec] : r.items())
          if (rec.value("verdict", std::string()) == "FAIL") failed = true;
    }
  }
  if (input) return 2;
  if (cap) return 3;
  return failed ? 1 : 0;
}

SuiteReport run_suite(const std::string& dir, const RunOptions& options) {
  namespace fs = std::filesystem;
  SuiteReport out;
  if (!fs::is_directory(dir)) throw InputError(dir + ": not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  Json jobs = Json::array();
  out.timings = Json::object();
  int code = 0;
  auto worse = [](int a, int b) {
    auto rank = [](int x) { return x == 2 ? 3 : x == 3 ? 2 : x; };
    return rank(b) > rank(a) ? b : a;
  };
  for (const auto& f : files) {
    const std::string name = f.filename().string();
    Json entry;
    entry["file"] = name;
    try {
      JobSpec spec = load_job(f.string());
      auto t0 = std::chrono::steady_clock::now();
      JobReport r = run_job(spec, options);
      out.timings[name] = {{"total_ms", std::chrono::duration<double, std::milli>(
                                            std::chrono::steady_clock::now() - t0).count()},
                           {"tasks", r.timings}};
      entry["report"] = r.canonical;
      entry["exit_code"] = r.exit_code;
      code = worse(code, r.exit_code);
    } catch (const InputError& e) {
      entry["error"] = e.what();
      entry["exit_code"] = 2;
      code = worse(code, 2);
    }
    jobs.push_back(entry);
  }
  out.canonical["schema"] = kReportSchema;
  out.canonical["jobs"] = jobs;
  out.canonical["exit_code"] = code;
  out.exit_code = code;
  return out;
}

}  // namespace kdg

// One PASS/FAIL line per acceptance criterion. A criterion passes only when its condition holds
// exactly and it finishes inside its wall-time bound.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "kdg/duality.hpp"
#include "kdg/invariants.hpp"
#include "kdg/oracle.hpp"
#include "kdg/parser.hpp"
#include "kdg/report.hpp"

using namespace kdg;

namespace {

QRingPtr ring(std::vector<std::string> vars, std::vector<std::string> ideal = {}) {
  auto r = PolyRing::make(Field::prime(), std::move(vars));
  std::vector<Polynomial> gens;
  for (const auto& t : ideal) gens.push_back(parse_poly(t, r));
  return QuotientRing::make(r, gens);
}

std::vector<Polynomial> polys(const QRingPtr& q, std::vector<std::string> texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_poly(t, q->ring()));
  return out;
}

// Collects failed conditions so the line can say which one broke.
struct Outcome {
  std::vector<std::string> failures;
  int instances = 0;
  void expect(bool ok, const std::string& what) {
    ++instances;
    if (!ok) failures.push_back(what);
  }
};

struct Criterion {
  int id;
  std::string title;
  double bound_seconds;
  std::function<void(Outcome&)> body;
};

std::string join(const std::vector<Polynomial>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : ",") + p.to_string();
  return "(" + s + ")";
}

bool oracle_agrees(const Complex& c, int depth) {
  int low = lowest_twist(c);
  int start = std::min(is_infinite(low) ? 0 : low, 0);
  return !oracle_mismatch(c, truncation_oracle(c, depth, start)).has_value();
}

// The three CM base rings used for the amplitude and depth criteria, with their sequences.
struct Fixture {
  QRingPtr q;
  std::vector<std::vector<Polynomial>> seqs;
};

std::vector<Fixture> cm_fixtures() {
  auto a = ring({"x", "y", "z"});
  auto b = ring({"x", "y"}, {"x*y"});
  auto c = ring({"x", "y", "z", "w"}, {"x*y-z*w"});
  return {
      {a, {polys(a, {"x", "y", "x"}), polys(a, {"x", "y"}), polys(a, {"x^2", "y"}), polys(a, {"x", "x"}),
           polys(a, {"x*y", "x*z"})}},
      {b, {polys(b, {"x"}), polys(b, {"x+y"}), polys(b, {"x", "y"}), polys(b, {"x", "x+y"})}},
      {c, {polys(c, {"x", "z"}), polys(c, {"x", "y"}), polys(c, {"x", "y", "z", "w"}), polys(c, {"x+y", "z+w"})}},
  };
}

void regular_collapse(Outcome& o) {
  auto a = ring({"x", "y", "z"});
  auto k3 = koszul(dg_from_ring(a), polys(a, {"x", "y", "z"}));
  o.expect(k3->amp() == 0, "amp K(x,y,z) = 0");
  o.expect(k3->h0()->same_as(*QuotientRing::make(a->ring(), polys(a, {"x", "y", "z"}))), "H0 K(x,y,z) = k");
  auto k2 = koszul(dg_from_ring(a), polys(a, {"x", "y"}));
  o.expect(k2->amp() == 0, "amp K(x,y) = 0");
  o.expect(k2->h0()->same_as(*QuotientRing::make(a->ring(), polys(a, {"x", "y"}))), "H0 K(x,y) = k[z]");
  o.expect(k2->h0()->dimension() == 1 && k3->h0()->dimension() == 0, "dimensions 1 and 0");
}

// Each instance has its own one-second bound.
void self_duality(Outcome& o, const QRingPtr& q, std::vector<std::string> seq) {
  auto t0 = std::chrono::steady_clock::now();
  auto k = koszul(dg_from_ring(q), polys(q, seq));
  auto rep = self_duality_check(k);
  o.expect(rep.isomorphic, "self-duality over " + q->describe() + ": " + rep.failure);
  bool signs = true;
  for (const auto& [i, m] : rep.components)
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const Polynomial& e = m(r, c);
        if (!e.is_zero() && !e.is_unit_constant()) signs = false;
      }
  o.expect(signs, "components have constant entries");
  o.expect(std::chrono::steady_clock::now() - t0 < std::chrono::seconds(1), "instance under 1s");
}

void composition_and_lifts(Outcome& o) {
  struct Split {
    QRingPtr q;
    std::vector<std::string> a, b;
  };
  auto p3 = ring({"x", "y", "z"});
  auto node = ring({"x", "y"}, {"x*y"});
  auto quad = ring({"x", "y", "z", "w"}, {"x*y-z*w"});
  auto cone = ring({"x", "y", "z"}, {"x^2-y*z"});
  std::vector<Split> splits{{p3, {"x"}, {"y", "x"}}, {node, {"x"}, {"y"}}, {quad, {"x", "z"}, {"y"}},
                            {cone, {"y"}, {"z", "x"}}, {node, {"x+y"}, {"x"}}};
  for (const auto& s : splits) {
    auto a = dg_from_ring(s.q);
    auto left = koszul(a, polys(s.q, s.a));
    auto right = koszul(a, polys(s.q, s.b));
    auto both = s.a;
    both.insert(both.end(), s.b.begin(), s.b.end());
    auto comb = koszul(a, polys(s.q, both));
    auto tens = tensor(left, right);
    o.expect(same_homology(tens->underlying().homology_table(), comb->underlying().homology_table()),
             "tensor vs combined over " + s.q->describe());
    o.expect(same_homology(koszul(left, polys(s.q, s.b))->underlying().homology_table(),
                           comb->underlying().homology_table()),
             "iterated vs combined over " + s.q->describe());
  }
  struct Lift {
    DGRingPtr a;
    std::vector<Polynomial> seq, alt;
  };
  auto p3y = koszul(dg_from_ring(p3), polys(p3, {"y"}));
  auto nodex = koszul(dg_from_ring(node), polys(node, {"x"}));
  auto quadxz = koszul(dg_from_ring(quad), polys(quad, {"x", "z"}));
  auto p3xy = koszul(dg_from_ring(p3), polys(p3, {"x", "y"}));
  std::vector<Lift> lifts{{p3y, polys(p3, {"x"}), polys(p3, {"x+y"})},
                          {p3y, polys(p3, {"x", "z"}), polys(p3, {"x+y", "z-y"})},
                          {nodex, polys(node, {"y"}), polys(node, {"y+x"})},
                          {quadxz, polys(quad, {"y", "w"}), polys(quad, {"y-z", "w+x"})},
                          {p3xy, polys(p3, {"z^2"}), polys(p3, {"z^2+x*y"})}};
  for (const auto& l : lifts) {
    auto rep = lift_independence_check(l.a, l.seq, l.alt);
    o.expect(rep.agree, "lift independence " + join(l.seq) + " vs " + join(l.alt));
  }
}

void amp_formula(Outcome& o) {
  int count = 0;
  for (const auto& f : cm_fixtures()) {
    auto a = dg_from_ring(f.q);
    o.expect(cm_certify(a) == Verdict3::yes, "CM certified: " + f.q->describe());
    for (const auto& seq : f.seqs) {
      auto k = koszul(a, seq);
      int rhs = static_cast<int>(seq.size()) - f.q->dimension() + k->h0()->dimension() - a->inf();
      o.expect(k->amp() == rhs, "amp formula " + join(seq) + " over " + f.q->describe());
      ++count;
    }
  }
  o.expect(count >= 6, "at least six sequences");
  auto p3 = ring({"x", "y", "z"});
  auto k = koszul(dg_from_ring(p3), polys(p3, {"x", "y", "x"}));
  o.expect(k->amp() == 1 && 3 - 3 + k->h0()->dimension() - 0 == 1, "(x,y,x): amp 1 = 3-3+1-0");

  auto bad = ring({"x", "y"}, {"x^2", "x*y"});
  auto kb = koszul(dg_from_ring(bad), polys(bad, {"y"}));
  int formula = 1 - bad->dimension() + kb->h0()->dimension() - 0;
  o.expect(kb->amp() == 1 && formula == 0, "control: direct 1 vs formula 0");
  JobSpec spec = parse_job(Json::parse(
      R"({"variables":["x","y"],"ideal":["x^2","x*y"],"sequences":[["y"]],"tasks":["check:amp_koszul"]})"));
  auto r = run_job(spec, {});
  o.expect(r.canonical["tasks"][0]["result"]["verdict"] == "HYPOTHESIS-NOT-MET", "control reported HYPOTHESIS-NOT-MET");
}

void seq_depth_formula(Outcome& o) {
  int count = 0;
  for (const auto& f : cm_fixtures()) {
    auto a = dg_from_ring(f.q);
    DGModule self = DGModule::of_ring(a);
    for (const auto& ideal : f.seqs) {
      int sd = seq_depth(a, ideal, self);
      int rhs = f.q->dimension() - QuotientRing::make(f.q->ring(), [&] {
                                      auto g = f.q->ideal();
                                      g.insert(g.end(), ideal.begin(), ideal.end());
                                      return g;
                                    }())->dimension();
      o.expect(sd == rhs, "seq_depth formula " + join(ideal) + " over " + f.q->describe());
      auto w = greedy_regular_sequence(a, ideal, self);
      o.expect(w.exhausted || static_cast<int>(w.elements.size()) == sd, "greedy witness " + join(ideal));
      ++count;
    }
  }
  o.expect(count >= 6, "at least six ideals");
  auto quad = ring({"x", "y", "z", "w"}, {"x*y-z*w"});
  auto a = dg_from_ring(quad);
  o.expect(seq_depth(a, polys(quad, {"x", "z"}), DGModule::of_ring(a)) == 1, "quadric (x,z) has seq_depth 1");
}

void depth_coherence(Outcome& o) {
  std::vector<Fixture> fs = cm_fixtures();
  auto bad = ring({"x", "y"}, {"x^2", "x*y"});
  fs.push_back({bad, {polys(bad, {"x", "y"}), polys(bad, {"y"})}});
  auto te_q = ring({"x", "y"}, {"x*y"});
  for (const auto& f : fs) {
    auto a = dg_from_ring(f.q);
    DGModule self = DGModule::of_ring(a);
    for (const auto& ideal : f.seqs) {
      int d = depth(a, ideal, self), sd = seq_depth(a, ideal, self);
      o.expect(sd == d - a->inf(), "depth - inf = seq_depth " + join(ideal));
      auto w = greedy_regular_sequence(a, ideal, self);
      o.expect(w.exhausted || static_cast<int>(w.elements.size()) == sd, "witness length " + join(ideal));
    }
  }
  auto te = trivial_extension(te_q, FPModule::cyclic(te_q, polys(te_q, {"x"})), 2);
  DGModule te_self = DGModule::of_ring(te);
  auto m = irrelevant_ideal(*te_q);
  o.expect(seq_depth(te, m, te_self) == depth(te, m, te_self) - te->inf(), "trivial extension depth - inf");

  struct Pair {
    QRingPtr q;
    std::vector<Polynomial> g1, g2;
  };
  auto p3 = ring({"x", "y", "z"});
  auto quad = ring({"x", "y", "z", "w"}, {"x*y-z*w"});
  std::vector<Pair> pairs{{p3, polys(p3, {"x", "y"}), polys(p3, {"x+y", "x-y", "x^2"})},
                          {te_q, polys(te_q, {"x", "y"}), polys(te_q, {"x+y", "y^2"})},
                          {quad, polys(quad, {"x", "z"}), polys(quad, {"z", "x+z", "x*w"})}};
  for (const auto& p : pairs) {
    auto a = dg_from_ring(p.q);
    DGModule self = DGModule::of_ring(a);
    o.expect(depth(a, p.g1, self) == depth(a, p.g2, self), "generating-set independence " + join(p.g1));
  }
}

void dualizing_criterion(Outcome& o) {
  for (const auto& f : cm_fixtures()) {
    o.expect(dualizing_complex(f.q).complex.amp() == 0, "amp R = 0 over " + f.q->describe());
    for (const auto& seq : f.seqs) {
      auto k = koszul(dg_from_ring(f.q), seq);
      o.expect(dualizing_of_koszul(k).complex.amp() == k->amp(), "amp D = amp K " + join(seq));
    }
  }
  auto bad = ring({"x", "y"}, {"x^2", "x*y"});
  o.expect(dualizing_complex(bad).complex.amp() == 1, "non-CM control: amp R = 1");
}

void counterexample(Outcome& o) {
  auto q = ring({"x", "y"}, {"x*y"});
  auto a = trivial_extension(q, FPModule::cyclic(q, polys(q, {"x"})), 2);
  auto m = irrelevant_ideal(*q);
  DGModule self = DGModule::of_ring(a);
  o.expect(is_local_cm(a), "A local-CM");
  o.expect(seq_depth(a, m, self) == 1 && a->h0()->dimension() == 1, "seq_depth A = 1 = dim");
  o.expect(!greedy_regular_sequence(a, m, self).elements.empty(), "witness in the irrelevant ideal");
  o.expect(!has_constant_amplitude(a), "no constant amplitude");
  auto k = koszul(a, polys(q, {"y"}));
  o.expect(seq_depth(k, m, DGModule::of_ring(k)) == 0 && k->h0()->dimension() == 1, "K: seq_depth 0 < dim 1");
  o.expect(cm_certify(k) == Verdict3::no, "K not CM");
  JobSpec spec = parse_job(Json::parse(R"({"variables":["x","y"],"ideal":["x*y"],
      "dg":{"trivial_extension":{"module":{"cyclic":["x"]},"shift":2}},"sequences":[["y"]],
      "tasks":["check:counterexample_4_5"]})"));
  auto r = run_job(spec, {});
  const Json& res = r.canonical["tasks"][0]["result"];
  o.expect(res["verdict"] == "PASS", "check verdict PASS");
  o.expect(!r.canonical["notes"].empty() && !res["notes"].empty(), "H^-1 discrepancy note present");
}

void gorenstein(Outcome& o) {
  auto node = ring({"x", "y"}, {"x*y"});
  auto cone = ring({"x", "y", "z"}, {"x^2-y*z"});
  auto two = ring({"x", "y", "z"}, {"x^2", "x*y", "y^2"});
  for (const auto& [q, seqs] : std::vector<std::pair<QRingPtr, std::vector<std::vector<std::string>>>>{
           {node, {{"x"}, {"x+y"}, {"x", "y"}}}, {cone, {{"y"}, {"x"}, {"y", "z"}}}}) {
    for (const auto& s : seqs) {
      auto g = gorenstein_dg_check(koszul(dg_from_ring(q), polys(q, s)));
      o.expect(g.verdict == Verdict3::yes, "Gorenstein K over " + q->describe() + " " + join(polys(q, s)));
    }
  }
  auto g = gorenstein_dg_check(koszul(dg_from_ring(two), polys(two, {"z"})));
  o.expect(g.verdict == Verdict3::no, "type-two ring: K not Gorenstein");
  o.expect(!is_gorenstein_ring(two).gorenstein, "type-two ring not Gorenstein");
}

void flatness(Outcome& o) {
  auto uv = ring({"u", "v"}, {"u*v"});
  auto r1 = flatdim_over_regular(polys(uv, {"u+v"}), dg_from_ring(uv));
  o.expect(r1.flatdim == 0 && r1.formula == 0 && r1.hypotheses_met, "node over k[t]: 0 = 0");
  auto x = ring({"x"});
  auto r2 = flatdim_over_regular(polys(x, {"0"}), dg_from_ring(x));
  o.expect(r2.flatdim == 1 && r2.formula == 1, "t to 0: 1 = 1");
  auto fin = ring({"x", "y"}, {"y^2"});
  auto r3 = flatdim_over_regular(polys(fin, {"x"}), dg_from_ring(fin));
  o.expect(r3.flatdim == 0 && r3.amp_b == 0 && cm_certify(dg_from_ring(fin)) == Verdict3::yes, "k[x,y]/(y^2): 0 = amp, CM");
  auto nf = ring({"x", "y"}, {"y^2", "x*y"});
  auto r4 = flatdim_over_regular(polys(nf, {"x"}), dg_from_ring(nf));
  o.expect(r4.flatdim == 1 && r4.amp_b == 0 && cm_certify(dg_from_ring(nf)) == Verdict3::no,
           "k[x,y]/(y^2,xy): 1 != amp 0, not CM");
}

HilbertSeries euler(const Complex& c) {
  HilbertSeries chi(LaurentPoly(), static_cast<int>(c.ring()->nvars()));
  for (int i = c.lo(); !c.empty() && i <= c.hi(); ++i)
    chi = i % 2 == 0 ? chi + c.homology_hilbert(i) : chi - c.homology_hilbert(i);
  return chi;
}

void oracle_and_euler(Outcome& o) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(KDG_FIXTURE_DIR))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  o.expect(!files.empty(), "fixtures present");
  for (const auto& f : files) {
    JobContext ctx = instantiate(load_job(f.string()), {});
    const std::string name = f.filename().string();
    o.expect(oracle_agrees(ctx.a->underlying(), 8), name + ": base oracle");
    HilbertSeries chi_a = euler(ctx.a->underlying());
    for (const auto& seq : ctx.sequences) {
      auto k = koszul(ctx.a, seq);
      const Complex& c = k->underlying();
      o.expect(oracle_agrees(c, 8), name + ": oracle " + join(seq));
      LaurentPoly factor = LaurentPoly::constant(1);
      for (const auto& p : k->lifts())
        factor = factor * (LaurentPoly::constant(1) - LaurentPoly::monomial(p.is_zero() ? 0 : *p.degree(), 1));
      HilbertSeries rhs(chi_a.numerator() * factor, chi_a.nvars());
      o.expect(euler(c) == rhs, name + ": Euler identity " + join(seq));
      int low = lowest_twist(c);
      int start = std::min(is_infinite(low) ? 0 : low, 0);
      auto table = truncation_oracle(c, 10, start);
      for (int d = start; d <= 10; ++d) {
        std::int64_t s = 0;
        for (int i = c.lo(); i <= c.hi(); ++i) s += (i % 2 == 0 ? 1 : -1) * table.dim(i, d);
        if (s != rhs.value(d)) {
          o.expect(false, name + ": oracle Euler sum in degree " + std::to_string(d));
          break;
        }
      }
    }
  }
}

void determinism(Outcome& o) {
  auto a = run_suite(KDG_FIXTURE_DIR, {});
  auto b = run_suite(KDG_FIXTURE_DIR, {});
  o.expect(a.canonical.dump() == b.canonical.dump(), "byte-identical canonical reports");
  o.expect(a.exit_code == 0, "suite meets every expected verdict");
}

}  // namespace

int main() {
  auto node = ring({"x", "y"}, {"x*y"});
  auto p3 = ring({"x", "y", "z"});
  std::vector<Criterion> criteria{
      {1, "regular-sequence collapse", 1, regular_collapse},
      {2, "Koszul self-duality", 2,
       [&](Outcome& o) {
         self_duality(o, node, {"x", "y"});
         self_duality(o, p3, {"x+y", "z"});
       }},
      {3, "composition and lift independence", 5, composition_and_lifts},
      {4, "Koszul amplitude formula on CM rings", 10, amp_formula},
      {5, "sequential depth formula", 10, seq_depth_formula},
      {6, "depth, sequential depth and witness coherence", 10, depth_coherence},
      {7, "amplitude of the dualizing DG-module", 30, dualizing_criterion},
      {8, "local-CM DG-ring with a non-CM Koszul DG-ring", 5, counterexample},
      {9, "Gorenstein transfer", 30, gorenstein},
      {10, "flat dimension over a regular ring", 5, flatness},
      {11, "truncation oracle and Euler characteristic", 60, oracle_and_euler},
      {12, "determinism and performance envelope", 300, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs < c.bound_seconds;
    bool pass = o.failures.empty() && in_time;
    failed += !pass;
    std::printf("%s  [%2d] %-48s %3d conditions  %8.3fs (bound %gs)\n", pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), o.instances, secs, c.bound_seconds);
    for (const auto& f : o.failures) std::printf("        failed: %s\n", f.c_str());
    if (!in_time) std::printf("        over the time bound\n");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

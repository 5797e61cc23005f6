// Acceptance run: one PASS/FAIL line per criterion, exact checks, runtime
// budgets in seconds pinned below. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "affhecke/cells.hpp"
#include "affhecke/suites.hpp"

using namespace affhecke;

namespace {

using Clock = std::chrono::steady_clock;

struct Run {
  SuiteConfig cfg;
  std::string suite;
  Report report;
  std::string json;
};

std::deque<Run> g_runs;

const Report& run(const std::string& suite, int n, int max_len = -1, int gen_len = -1, int range = -1) {
  SuiteConfig c;
  c.n = n;
  c.max_len = max_len;
  c.gen_len = gen_len;
  c.range = range;
  Report r = run_suite(suite, c);
  std::string j = r.to_json().dump(2);
  g_runs.push_back({c, suite, std::move(r), std::move(j)});
  return g_runs.back().report;
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void pass(const Report& r, const std::string& check) {
    const Check* c = r.find(check);
    require(c && c->status == Status::Pass, r.suite + " n=" + r.params.value("n", Json(0)).dump() + ": '" + check + "' " +
                                                 (c ? status_str(c->status) : std::string("missing")));
  }
  void no_failures(const Report& r) {
    for (const auto& c : r.checks) require(c.status != Status::Fail, r.suite + ": '" + c.name + "' failed");
  }
};

int g_failed = 0;

void criterion(int id, const std::string& title, double budget, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail += std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  o.require(secs < budget, "runtime over budget");
  if (!o.ok) ++g_failed;
  std::printf("%s %2d %s  (%.2f s, budget %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), secs, budget,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion(1, "KL engine vs bar-invariance oracle (S_3, S_4, n=2 ball l<=8)", 10, [](Outcome& o) {
    const Report& r4 = run("kl-oracle", 4);
    o.pass(r4, "kl = bar-invariance solver on S_4");
    o.pass(r4, "singular pattern on S_4");
    const Report& r3 = run("kl-oracle", 3, 6);
    o.pass(r3, "kl = bar-invariance solver on S_3");
    const Report& r2 = run("kl-oracle", 2, 8);
    o.pass(r2, "kl = bar-invariance solver on affine ball l<=8");
    for (const Report* r : {&r4, &r3, &r2}) o.no_failures(*r);
  });

  criterion(2, "basis axioms on the n=3 ball l<=6", 60, [](Outcome& o) {
    const Report& r = run("kl-oracle", 3, 6);
    o.pass(r, "bar(C_w) = q^-l(w) C_w on affine ball l<=6");
    o.pass(r, "degree bound on affine ball l<=6");
    o.require(r.params.value("max_len", -1) == 6, "ball bound is not 6");
  });

  criterion(3, "Bernstein relations, n in {2,3}, entries in [-2,2]", 120, [](Outcome& o) {
    for (int n : {2, 3}) {
      const Report& r = run("bernstein", n, -1, -1, 2);
      o.pass(r, "theta zero");
      o.pass(r, "theta multiplicative");
      o.pass(r, "bernstein relation");
      o.no_failures(r);
    }
  });

  criterion(4, "cells of S_4 = transposed RSK fibres, a-values", 60, [](Outcome& o) {
    const Report& r = run("cells", 4);
    for (const char* c : {"class count", "RSK fibres", "a-values", "a monotone", "quasi-idempotency"}) o.pass(r, c);
    o.no_failures(r);

    KLTable t(4);
    CPrimeAlgebra alg(t);
    const CellData cd = cells_in_ball(Ball::finite_group(t), alg);
    ElementRegistry& reg = t.registry();
    const std::map<Partition, int> expect{{Partition({1, 1, 1, 1}), 0}, {Partition({2, 1, 1}), 1}, {Partition({2, 2}), 2},
                                          {Partition({3, 1}), 3},       {Partition({4}), 6}};
    o.require(cd.two_sided_classes.size() == 5, "not 5 classes");
    for (std::size_t c = 0; c < cd.two_sided_classes.size(); ++c) {
      if (!cd.labels[c]) {
        o.require(false, "unlabelled class");
        continue;
      }
      const Partition& rho = *cd.labels[c];
      const int want = expect.at(rho);
      o.require(cell_a_value(rho) == want, "formula disagrees for " + rho.str());
      for (int i : cd.two_sided_classes[c]) {
        const ElemId id = cd.ball.ids[static_cast<std::size_t>(i)];
        o.require(cd.a_of(id, reg) == want, "a-value in " + rho.str());
        o.require(rsk_cell_partition(reg.elem(id)) == rho, "RSK fibre of " + rho.str());
      }
      for (int i : cd.anchors[c]) o.require(reg.length(cd.ball.ids[static_cast<std::size_t>(i)]) == want, "anchor length in " + rho.str());
    }
  });

  criterion(5, "star operations and gamma on the n=3 ball l<=6", 120, [](Outcome& o) {
    const Report& r = run("star-gamma", 3, 6);
    for (const char* c : {"LRstar (i)", "LRstar (ii)", "star gamma", "omega shift gamma", "lemma LR edges"}) o.pass(r, c);
    o.no_failures(r);
  });

  criterion(6, "generation witnesses (n=2 l<=8, n=3 l<=6)", 300, [](Outcome& o) {
    const Report& r2 = run("key1", 2, 8);
    o.pass(r2, "witnesses (2)");
    o.pass(r2, "gamma bookkeeping");
    o.no_failures(r2);
    const Report& r3 = run("key1", 3, 6);
    o.pass(r3, "witnesses (2,1)");
    o.pass(r3, "witnesses (3)");
    o.pass(r3, "gamma bookkeeping");
    o.no_failures(r3);
  });

  criterion(7, "finite generation by any parabolic element, n<=4", 60, [](Outcome& o) {
    for (int n : {2, 3, 4}) {
      const Report& r = run("key2", n);
      o.pass(r, "key1 finite");
      o.no_failures(r);
    }
  });

  criterion(8, "two-sided ideal membership for n=4, v = s1.s3", 300, [](Outcome& o) {
    const Report& r = run("remark-b", 4, -1, 6);
    o.pass(r, "integral membership of (v+v^-1)C'[s1.s2.s1]");
    const Check* neg = r.find("non-membership evidence for C'[s1.s2.s1]");
    o.require(neg && neg->status == Status::Evidence, "bare target not reported as evidence");
    if (neg) {
      o.require(neg->witness.value("rational_solvable", false), "no rational solution");
      o.require(!neg->witness.value("integral", true), "integral clearing unexpectedly succeeded");
      o.require(neg->witness.value("mod2_obstruction", false), "no mod-2 obstruction");
    }
    const Check* pos = r.find("integral membership of (v+v^-1)C'[s1.s2.s1]");
    if (pos) o.require(pos->witness.value("gen_len", 99) <= 6, "bound above 6");
    o.no_failures(r);
  });

  criterion(9, "cell preorder = closure order = dominance; orbit dimensions", 30, [](Outcome& o) {
    for (int n : {2, 3, 4}) {
      const Report& r = run("key2", n);
      o.pass(r, "preorder = closure = dominance on transposes");
      o.pass(r, "parabolic anchors");
    }
    const Report& r = run("orbits", 6);
    o.pass(r, "closure = dominance on transposes");
    o.pass(r, "orbit dim = commutator nullity");
    o.pass(r, "orbit dim increases along closure");
    o.no_failures(r);
  });

  criterion(10, "deterministic JSON across runs and execution modes", 600, [](Outcome& o) {
    const std::deque<Run> first = g_runs;
    for (const auto& r : first) {
      for (ExecMode m : {ExecMode::Parallel, ExecMode::Serial}) {
        SuiteConfig c = r.cfg;
        c.mode = m;
        const std::string again = run_suite(r.suite, c).to_json().dump(2);
        o.require(again == r.json, r.suite + " n=" + std::to_string(r.cfg.n) + (m == ExecMode::Serial ? " serial" : " rerun") + " differs");
      }
    }
    std::map<std::string, int> seen;
    for (const auto& r : first) ++seen[r.suite];
    for (const auto& s : suite_names()) o.require(seen.count(s) > 0, "suite " + s + " not exercised");
  });

  std::printf("%d of 10 criteria failed\n", g_failed);
  return g_failed;
}

#include "affhecke/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "affhecke/cell_modules.hpp"
#include "affhecke/cells.hpp"
#include "affhecke/cprime.hpp"
#include "affhecke/hecke.hpp"
#include "affhecke/oracle.hpp"
#include "affhecke/orbits.hpp"

namespace affhecke {

std::string status_str(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Evidence: return "evidence";
  }
  return "fail";
}

bool Report::failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Fail; });
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Json Report::to_json() const {
  Json j;
  j["schema"] = kReportSchema;
  j["suite"] = suite;
  j["params"] = params;
  Json cs = Json::array();
  int counts[3] = {0, 0, 0};
  for (const auto& c : checks) {
    Json e;
    e["name"] = c.name;
    e["status"] = status_str(c.status);
    e["detail"] = c.detail;
    if (!c.witness.is_null()) e["witness"] = c.witness;
    cs.push_back(std::move(e));
    ++counts[static_cast<int>(c.status)];
  }
  j["checks"] = std::move(cs);
  j["summary"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"evidence", counts[2]}};
  return j;
}

std::string Report::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) os << "[" << status_str(c.status) << "] " << suite << ": " << c.name << " - " << c.detail << "\n";
  return os.str();
}

namespace {

using Weights = std::vector<Weight>;

void add_check(Report& r, std::string name, Status st, std::string detail, Json witness = nullptr) {
  r.checks.push_back({std::move(name), st, std::move(detail), std::move(witness)});
}

void add_check(Report& r, std::string name, bool ok, std::string detail, Json witness = nullptr) {
  add_check(r, std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail), std::move(witness));
}

std::string count_detail(std::size_t bad, std::size_t total, const std::string& what) {
  std::ostringstream os;
  if (bad == 0) {
    os << total << " " << what << " checked";
  } else {
    os << bad << " of " << total << " " << what << " failed";
  }
  return os.str();
}

std::string word(ElementRegistry& reg, ElemId id) { return reg.elem(id).word_str(); }

std::string cvec_str(ElementRegistry& reg, const CVec& x) {
  std::vector<std::pair<AffPerm, LaurentInt>> terms;
  for (const auto& [w, c] : x) terms.emplace_back(reg.elem(w), c);
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return CanonicalLess{}(a.first, b.first); });
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")*C'[" + w.word_str() + "]";
  }
  return out;
}

std::string weight_str(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.entries.size(); ++i) s += (i ? "," : "") + std::to_string(w.entries[i]);
  return s + ")";
}

Weights weight_box(int n, int r) {
  Weights out;
  Weight w{std::vector<std::int64_t>(static_cast<std::size_t>(n), -r)};
  while (true) {
    out.push_back(w);
    int i = n - 1;
    while (i >= 0 && w.entries[static_cast<std::size_t>(i)] == r) w.entries[static_cast<std::size_t>(i--)] = -r;
    if (i < 0) break;
    ++w.entries[static_cast<std::size_t>(i)];
  }
  return out;
}

[[noreturn]] void refuse(const std::string& suite) {
  throw UnsupportedConfig("unsupported configuration for " + suite + "; supported: " + supported_ranges(suite));
}

// Keeps the first few failure descriptions for the witness block.
struct Failures {
  std::size_t total = 0;
  std::size_t bad = 0;
  Json list = Json::array();

  void record(bool ok, const std::function<std::string()>& describe) {
    ++total;
    if (ok) return;
    ++bad;
    if (list.size() < 8) list.push_back(describe());
  }
  void merge(const Failures& o) {
    total += o.total;
    bad += o.bad;
    for (const auto& e : o.list)
      if (list.size() < 8) list.push_back(e);
  }
  bool ok() const { return bad == 0; }
  Json witness() const { return bad == 0 ? Json(nullptr) : Json{{"failures", list}}; }
};

// ---------------------------------------------------------------- bernstein

Report suite_bernstein(const SuiteConfig& cfg) {
  const int n = cfg.n;
  const int r = cfg.range < 0 ? 2 : cfg.range;
  if (n < 2 || n > 3 || r > 2) refuse("bernstein");
  Report rep;
  rep.suite = "bernstein";
  rep.params = {{"n", n}, {"range", r}};

  const Weights box = weight_box(n, r);
  const Weights big = weight_box(n, 2 * r);
  auto key = [&](const Weight& w) {
    std::size_t k = 0;
    for (auto e : w.entries) k = k * static_cast<std::size_t>(4 * r + 1) + static_cast<std::size_t>(e + 2 * r);
    return k;
  };
  std::vector<HeckeElt> th(big.size());
  parallel_for(cfg.mode, static_cast<std::ptrdiff_t>(big.size()), [&](std::ptrdiff_t i) { th[static_cast<std::size_t>(i)] = theta(big[static_cast<std::size_t>(i)]); });
  auto T = [&](const Weight& w) -> const HeckeElt& { return th[key(w)]; };

  add_check(rep, "theta zero", T(Weight{std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)}) == HeckeElt::T(AffPerm::identity(n)),
            "theta_0 = T_e");

  // theta_lambda theta_mu = theta_{lambda + mu}
  const std::size_t B = box.size();
  std::vector<char> mult(B * B, 0);
  parallel_for(cfg.mode, static_cast<std::ptrdiff_t>(B * B), [&](std::ptrdiff_t idx) {
    const Weight& l = box[static_cast<std::size_t>(idx) / B];
    const Weight& m = box[static_cast<std::size_t>(idx) % B];
    mult[static_cast<std::size_t>(idx)] = mul_right_theta(T(l), m) == T(l + m);
  });
  Failures fm;
  for (std::size_t idx = 0; idx < B * B; ++idx)
    fm.record(mult[idx], [&] { return weight_str(box[idx / B]) + " * " + weight_str(box[idx % B]); });
  add_check(rep, "theta multiplicative", fm.ok(), count_detail(fm.bad, fm.total, "pairs (lambda, mu)"), fm.witness());

  // (T_s theta_l - theta_sl T_s)(theta_a - 1) = (q - 1) theta_a (theta_l - theta_sl)
  std::vector<char> rel(static_cast<std::size_t>(n - 1) * B, 0);
  parallel_for(cfg.mode, static_cast<std::ptrdiff_t>(rel.size()), [&](std::ptrdiff_t idx) {
    const int i = static_cast<int>(static_cast<std::size_t>(idx) / B) + 1;
    const Weight& l = box[static_cast<std::size_t>(idx) % B];
    const Weight sl = reflect(l, i);
    const Weight a = simple_root(n, i);
    const HeckeElt X = mul_left_gen(i, T(l)) - mul_right_gen(T(sl), i);
    const HeckeElt lhs = mul_right_theta(X, a) - X;
    const HeckeElt rhs = mul_left_theta(a, T(l) - T(sl)) * (LaurentInt::q_power(1) - LaurentInt(1));
    rel[static_cast<std::size_t>(idx)] = lhs == rhs;
  });
  Failures fr;
  for (std::size_t idx = 0; idx < rel.size(); ++idx)
    fr.record(rel[idx], [&] { return "s" + std::to_string(idx / B + 1) + ", " + weight_str(box[idx % B]); });
  add_check(rep, "bernstein relation", fr.ok(), count_detail(fr.bad, fr.total, "pairs (alpha, lambda)"), fr.witness());

  // Other dominant decompositions give the same element.
  std::vector<char> ind(B, 0);
  parallel_for(cfg.mode, static_cast<std::ptrdiff_t>(B), [&](std::ptrdiff_t idx) {
    const Weight& l = box[static_cast<std::size_t>(idx)];
    const Weight base = theta_shift(l);
    Weight ones{std::vector<std::int64_t>(static_cast<std::size_t>(n), 1)};
    Weight stair{std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)};
    for (int k = 0; k < n; ++k) stair.entries[static_cast<std::size_t>(k)] = n - 1 - k;
    ind[static_cast<std::size_t>(idx)] = theta_with(l, base + ones) == T(l) && theta_with(l, base + stair) == T(l);
  });
  Failures fi;
  for (std::size_t idx = 0; idx < B; ++idx) fi.record(ind[idx], [&] { return weight_str(box[idx]); });
  add_check(rep, "theta choice independence", fi.ok(), count_detail(fi.bad, fi.total, "weights"), fi.witness());
  return rep;
}

// --------------------------------------------------------------- star-gamma

Report suite_star_gamma(const SuiteConfig& cfg, KLTable& t) {
  const int n = cfg.n;
  const int L = cfg.max_len < 0 ? 6 : cfg.max_len;
  if (!((n == 3 && L >= 2 && L <= 8) || (n == 4 && L >= 2 && L <= 5))) refuse("star-gamma");
  Report rep;
  rep.suite = "star-gamma";
  rep.params = {{"n", n}, {"max_len", L}};

  CPrimeAlgebra alg(t);
  ElementRegistry& reg = t.registry();
  const Ball ball = Ball::affine(t, L);
  const CellData cd = cells_in_ball(ball, alg, {true, cfg.mode});
  const auto pairs = star_pairs(n);
  const int N = ball.size();
  auto idx = [&](std::ptrdiff_t i) { return static_cast<std::size_t>(i); };

  // star[p][i]: ball index of *w for pair p, or -1
  std::vector<std::vector<int>> star(pairs.size(), std::vector<int>(idx(N), -1));
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (int i = 0; i < N; ++i)
      if (auto x = try_star(reg, ball.ids[idx(i)], pairs[p].first, pairs[p].second, Side::Left)) star[p][idx(i)] = ball.find(*x);
  auto reliable = [&](int i) { return i >= 0 && ball.reliable(reg.length(ball.ids[idx(i)])); };
  auto pair_str = [&](std::size_t p) { return "{s" + std::to_string(pairs[p].first) + ",s" + std::to_string(pairs[p].second) + "}"; };

  Failures f1;
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (int i = 0; i < N; ++i) {
      const int j = star[p][idx(i)];
      if (!reliable(i) || j < 0) continue;
      f1.record(cd.left_of[idx(i)] == cd.left_of[idx(j)], [&] { return pair_str(p) + " " + word(reg, ball.ids[idx(i)]); });
    }
  add_check(rep, "LRstar (i)", f1.ok(), count_detail(f1.bad, f1.total, "pairs w, *w"), f1.witness());

  Failures f2;
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (int i = 0; i < N; ++i)
      for (int k = i + 1; k < N; ++k) {
        if (cd.right_of[idx(i)] != cd.right_of[idx(k)]) continue;
        const int si = star[p][idx(i)], sk = star[p][idx(k)];
        if (!reliable(i) || !reliable(k) || !reliable(si) || !reliable(sk)) continue;
        f2.record(cd.right_of[idx(si)] == cd.right_of[idx(sk)],
                  [&] { return pair_str(p) + " " + word(reg, ball.ids[idx(i)]) + " ~R " + word(reg, ball.ids[idx(k)]); });
      }
  add_check(rep, "LRstar (ii)", f2.ok(), count_detail(f2.bad, f2.total, "pairs y ~R w"), f2.witness());

  // gamma_{w,u,v} = gamma_{*w,u,*v}: products C'_a C'_u for every a that is
  // a star source or image.
  std::vector<ElemId> factors;
  std::vector<int> factor_of(idx(N), -1);
  for (int i = 0; i < N; ++i) {
    bool used = false;
    for (std::size_t p = 0; p < pairs.size(); ++p) used = used || star[p][idx(i)] >= 0;
    if (used) {
      factor_of[idx(i)] = static_cast<int>(factors.size());
      factors.push_back(ball.ids[idx(i)]);
    }
  }
  std::vector<std::vector<CVec>> prods(idx(N));
  parallel_for(cfg.mode, N, [&](std::ptrdiff_t iu) { prods[idx(iu)] = alg.left_basis_many(factors, CPrimeAlgebra::basis(ball.ids[idx(iu)])); });
  auto coeff_at = [&](const CVec& h, ElemId z, int a) {
    auto it = h.find(z);
    return it == h.end() ? Integer(0) : it->second.coeff(a);
  };
  Failures f3;
  std::size_t nonzero = 0;
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (int iw = 0; iw < N; ++iw) {
      const int jw = star[p][idx(iw)];
      if (jw < 0) continue;
      for (int iu = 0; iu < N; ++iu) {
        const CVec& h = prods[idx(iu)][idx(factor_of[idx(iw)])];
        const CVec& hs = prods[idx(iu)][idx(factor_of[idx(jw)])];
        for (int iv = 0; iv < N; ++iv) {
          const int jv = star[p][idx(iv)];
          if (jv < 0) continue;
          const auto a = cd.a_exact[idx(iv)];
          const auto as = cd.a_exact[idx(jv)];
          if (!a || !as) continue;
          const Integer g1 = coeff_at(h, ball.ids[idx(iv)], *a);
          const Integer g2 = coeff_at(hs, ball.ids[idx(jv)], *as);
          if (g1 != 0) ++nonzero;
          f3.record(g1 == g2, [&] {
            return pair_str(p) + " w=" + word(reg, ball.ids[idx(iw)]) + " u=" + word(reg, ball.ids[idx(iu)]) + " v=" + word(reg, ball.ids[idx(iv)]);
          });
        }
      }
    }
  add_check(rep, "star gamma", f3.ok(), count_detail(f3.bad, f3.total, "triples") + ", " + std::to_string(nonzero) + " nonzero", f3.witness());

  // gamma_{om^m w1, w2, w3} = gamma_{w1, w2, om^-m w3} for l(w1) + l(w2) <= max_len
  std::vector<Failures> f4s(idx(N));
  parallel_for(cfg.mode, N, [&](std::ptrdiff_t i2) {
    const ElemId w2 = ball.ids[idx(i2)];
    Failures& f = f4s[idx(i2)];
    for (int i1 = 0; i1 < N; ++i1) {
      const ElemId w1 = ball.ids[idx(i1)];
      if (reg.length(w1) + reg.length(w2) > L) continue;
      const CVec base = alg.left_basis(w1, CPrimeAlgebra::basis(w2));
      for (int m = 1; m < n; ++m) {
        const CVec shifted = alg.left_basis(reg.omega_left(w1, m), CPrimeAlgebra::basis(w2));
        for (const auto& [z, c] : shifted) {
          const ElemId z0 = reg.omega_left(z, -m);
          const auto a = cd.a_of(z, reg);
          const auto a0 = cd.a_of(z0, reg);
          if (!a || !a0) continue;
          f.record(c.coeff(*a) == coeff_at(base, z0, *a0), [&] {
            return "m=" + std::to_string(m) + " w1=" + word(reg, w1) + " w2=" + word(reg, w2) + " w3=" + word(reg, z);
          });
        }
      }
    }
  });
  Failures f4;
  for (const auto& f : f4s) f4.merge(f);
  add_check(rep, "omega shift gamma", f4.ok(), count_detail(f4.bad, f4.total, "triples"), f4.witness());

  // Lemma LR: y <-_L w forces R(w) in R(y); mirror for right edges.
  const MuGraph g = mu_graph(ball, alg, cfg.mode);
  Failures f5;
  for (int i = 0; i < N; ++i) {
    const ElemId w = ball.ids[idx(i)];
    for (int j : g.left[idx(i)]) {
      const ElemId y = ball.ids[idx(j)];
      f5.record((reg.right_descents(w) & ~reg.right_descents(y)) == 0, [&] { return "left " + word(reg, y) + " <- " + word(reg, w); });
    }
    for (int j : g.right[idx(i)]) {
      const ElemId y = ball.ids[idx(j)];
      f5.record((reg.left_descents(w) & ~reg.left_descents(y)) == 0, [&] { return "right " + word(reg, y) + " <- " + word(reg, w); });
    }
  }
  add_check(rep, "lemma LR edges", f5.ok(), count_detail(f5.bad, f5.total, "edges"), f5.witness());
  return rep;
}

// -------------------------------------------------------------------- cells

Report suite_cells(const SuiteConfig& cfg, KLTable& t) {
  const int n = cfg.n;
  if (n < 2 || n > 5 || cfg.max_len >= 0) refuse("cells");
  Report rep;
  rep.suite = "cells";
  rep.params = {{"n", n}};

  CPrimeAlgebra alg(t);
  ElementRegistry& reg = t.registry();
  const Ball ball = Ball::finite_group(t);
  const CellData cd = cells_in_ball(ball, alg, {true, cfg.mode});
  const int N = ball.size();
  auto idx = [](int i) { return static_cast<std::size_t>(i); };
  const auto parts = partitions(n);

  add_check(rep, "class count", cd.two_sided_classes.size() == parts.size(),
            std::to_string(cd.two_sided_classes.size()) + " two-sided classes, " + std::to_string(parts.size()) + " partitions");

  // two-sided classes are exactly the fibres of the transposed RSK shape
  Failures fr;
  std::map<Partition, std::set<int>> fibre;
  for (int i = 0; i < N; ++i) fibre[rsk_cell_partition(reg.elem(ball.ids[idx(i)]))].insert(cd.two_sided_of[idx(i)]);
  for (const auto& rho : parts) {
    const auto it = fibre.find(rho);
    fr.record(it != fibre.end() && it->second.size() == 1, [&] { return rho.str() + " is not a single class"; });
    if (it == fibre.end() || it->second.size() != 1) continue;
    const int c = *it->second.begin();
    const auto& lab = cd.labels[idx(c)];
    fr.record(lab && *lab == rho, [&] { return rho.str() + " anchor label " + (lab ? lab->str() : std::string("none")); });
  }
  add_check(rep, "RSK fibres", fr.ok() && fibre.size() == parts.size(), count_detail(fr.bad, fr.total, "fibre and label comparisons"), fr.witness());

  Failures fref;
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k) {
      if (cd.left_of[idx(i)] == cd.left_of[idx(k)] || cd.right_of[idx(i)] == cd.right_of[idx(k)])
        fref.record(cd.two_sided_of[idx(i)] == cd.two_sided_of[idx(k)], [&] { return word(reg, ball.ids[idx(i)]) + " / " + word(reg, ball.ids[idx(k)]); });
    }
  add_check(rep, "one-sided classes refine", fref.ok(), count_detail(fref.bad, fref.total, "related pairs"), fref.witness());

  Failures finv;
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k) {
      const int ii = ball.find(reg.inverse(ball.ids[idx(i)]));
      const int ki = ball.find(reg.inverse(ball.ids[idx(k)]));
      finv.record((cd.left_of[idx(i)] == cd.left_of[idx(k)]) == (cd.right_of[idx(ii)] == cd.right_of[idx(ki)]),
                  [&] { return word(reg, ball.ids[idx(i)]) + " / " + word(reg, ball.ids[idx(k)]); });
    }
  add_check(rep, "inverse exchanges left and right", finv.ok(), count_detail(finv.bad, finv.total, "pairs"), finv.witness());

  // a-values: anchor length = partition formula = empirical maximum
  Failures fa;
  Json aw = Json::array();
  std::vector<int> class_a(cd.two_sided_classes.size(), -1);
  for (std::size_t c = 0; c < cd.two_sided_classes.size(); ++c) {
    const auto& lab = cd.labels[c];
    if (!lab || cd.anchors[c].empty()) {
      fa.record(false, [&] { return "class " + std::to_string(c) + " has no anchor"; });
      continue;
    }
    const ElemId anchor = ball.ids[idx(cd.anchors[c].front())];
    const int expect = cell_a_value(*lab);
    fa.record(reg.length(anchor) == expect, [&] { return lab->str() + " anchor length"; });
    for (int i : cd.two_sided_classes[c]) {
      fa.record(cd.a_exact[idx(i)] == expect && cd.a_empirical[idx(i)] == expect,
                [&] { return lab->str() + " a(" + word(reg, ball.ids[idx(i)]) + ")"; });
    }
    class_a[c] = expect;
    aw.push_back({{"cell", lab->str()}, {"size", cd.two_sided_classes[c].size()}, {"a", expect}, {"anchor", word(reg, anchor)}});
  }
  std::sort(aw.begin(), aw.end(), [](const Json& x, const Json& y) { return x["a"].get<int>() < y["a"].get<int>(); });
  Json awit = {{"classes", aw}};
  if (!fa.ok()) awit["failures"] = fa.list;
  add_check(rep, "a-values", fa.ok(), count_detail(fa.bad, fa.total, "values"), awit);

  Failures fmono;
  for (std::size_t a = 0; a < class_a.size(); ++a)
    for (std::size_t b = 0; b < class_a.size(); ++b)
      if (cd.below[a][b] && class_a[a] >= 0 && class_a[b] >= 0)
        fmono.record(class_a[a] >= class_a[b], [&] { return cd.labels[a]->str() + " below " + cd.labels[b]->str(); });
  add_check(rep, "a monotone", fmono.ok(), count_detail(fmono.bad, fmono.total, "class relations"), fmono.witness());

  // C'_w C'_w = eta C'_w for parabolic w, with eta bar-invariant of leading term v^{l(w)}
  Failures fq;
  for (GenMask T = 0; T <= finite_mask(n); T += 2) {
    const ElemId w = reg.intern(parabolic_longest(GenSet{n, T}));
    const CVec sq = alg.left_basis(w, CPrimeAlgebra::basis(w));
    bool ok = sq.size() == 1 && sq.count(w) == 1;
    if (ok) {
      const LaurentInt& eta = sq.at(w);
      ok = eta.is_bar_invariant() && eta.leading() == std::make_pair(reg.length(w), Integer(1));
    }
    fq.record(ok, [&] { return word(reg, w); });
  }
  add_check(rep, "quasi-idempotency", fq.ok(), count_detail(fq.bad, fq.total, "parabolic elements"), fq.witness());
  return rep;
}

// --------------------------------------------------------------------- key1

Json witness_json(ElementRegistry& reg, ElemId u, const Key1Witness& w) {
  Json path = Json::array();
  for (const auto& s : w.path) path.push_back({s.s, s.t});
  return {{"u", word(reg, u)},       {"route", w.route}, {"x", word(reg, w.x)},        {"y", word(reg, w.y)},
          {"omega_shift", w.omega_shift}, {"path", path},  {"h", cvec_str(reg, w.h)}, {"h_right", cvec_str(reg, w.h_right)},
          {"gamma_checked", w.gamma_checked}};
}

Report suite_key1(const SuiteConfig& cfg, KLTable& t) {
  const int n = cfg.n;
  const int L = cfg.max_len < 0 ? (n == 2 ? 8 : 6) : cfg.max_len;
  if (!((n == 2 && L >= 1 && L <= 10) || (n == 3 && L >= 1 && L <= 6)) || cfg.depth < 0 || cfg.depth > 20) refuse("key1");
  Report rep;
  rep.suite = "key1";
  const int margin = n == 2 ? 2 : 6;
  rep.params = {{"n", n}, {"max_len", L}, {"depth", cfg.depth}, {"label_ball", L + margin}};

  CPrimeAlgebra alg(t);
  ElementRegistry& reg = t.registry();
  const Ball ball = Ball::affine(t, L + margin);
  const CellData cd = cells_in_ball(ball, alg, {false, cfg.mode});

  std::vector<ElemId> targets, unlabelled;
  for (ElemId u : ball.ids)
    if (reg.length(u) <= L) {
      targets.push_back(u);
      if (!cd.label_of(u, reg)) unlabelled.push_back(u);
    }
  Json uw = Json::array();
  for (ElemId u : unlabelled) uw.push_back(word(reg, u));
  add_check(rep, "labels cover ball", unlabelled.empty() ? Status::Pass : Status::Evidence,
            std::to_string(targets.size() - unlabelled.size()) + " of " + std::to_string(targets.size()) + " elements anchored",
            unlabelled.empty() ? Json(nullptr) : Json{{"unlabelled", uw}});

  std::vector<Partition> cells;
  if (n == 2) cells = {Partition({2})};
  if (n == 3) cells = {Partition({2, 1}), Partition({3})};
  std::size_t checked = 0, total_w = 0;
  for (const auto& rho : cells) {
    const ElemId v = reg.intern(parabolic_longest(parabolic_for_partition(rho)));
    std::vector<ElemId> us;
    for (ElemId u : targets)
      if (auto lab = cd.label_of(u, reg); lab && *lab == rho) us.push_back(u);
    std::vector<std::optional<Key1Witness>> found(us.size());
    parallel_for(cfg.mode, static_cast<std::ptrdiff_t>(us.size()),
                 [&](std::ptrdiff_t i) { found[static_cast<std::size_t>(i)] = key1_witness(alg, us[static_cast<std::size_t>(i)], v, rho, cd, cfg.depth); });
    Json list = Json::array();
    Json missing = Json::array();
    for (std::size_t i = 0; i < us.size(); ++i) {
      if (found[i]) {
        list.push_back(witness_json(reg, us[i], *found[i]));
        checked += found[i]->gamma_checked;
        ++total_w;
      } else {
        missing.push_back(word(reg, us[i]));
      }
    }
    Json wit = {{"cell", rho.str()}, {"v", word(reg, v)}, {"elements", us.size()}, {"witnesses", list}};
    if (!missing.empty()) wit["missing"] = missing;
    add_check(rep, "witnesses " + rho.str(), missing.empty() && !us.empty(),
              std::to_string(list.size()) + " of " + std::to_string(us.size()) + " elements have verified witnesses", wit);
  }
  add_check(rep, "gamma bookkeeping", checked == total_w ? Status::Pass : Status::Evidence,
            std::to_string(checked) + " of " + std::to_string(total_w) + " witnesses have C'_x C'_y with leading cell coefficient 1 at u only");
  return rep;
}

// --------------------------------------------------------------------- key2

Report suite_key2(const SuiteConfig& cfg, KLTable& t) {
  const int n = cfg.n;
  if (n < 2 || n > 4 || cfg.max_len >= 0) refuse("key2");
  Report rep;
  rep.suite = "key2";
  rep.params = {{"n", n}};

  CPrimeAlgebra alg(t);
  ElementRegistry& reg = t.registry();
  const Ball ball = Ball::finite_group(t);
  const CellData cd = cells_in_ball(ball, alg, {false, cfg.mode});
  const auto parts = partitions(n);

  Failures fp;
  for (const auto& xi : parts)
    for (const auto& rho : parts) {
      const auto cx = cd.class_with_label(xi), cr = cd.class_with_label(rho);
      if (cx.size() != 1 || cr.size() != 1) {
        fp.record(false, [&] { return xi.str() + " or " + rho.str() + " has no unique class"; });
        continue;
      }
      const bool pre = cd.below[static_cast<std::size_t>(cx[0])][static_cast<std::size_t>(cr[0])];
      const bool clo = closure_leq(xi, rho);
      const bool dom = dominance_leq(transpose(xi), transpose(rho));
      fp.record(pre == clo && clo == dom, [&] { return xi.str() + " vs " + rho.str(); });
    }
  add_check(rep, "preorder = closure = dominance on transposes", fp.ok(), count_detail(fp.bad, fp.total, "ordered pairs"), fp.witness());

  Failures fa;
  for (GenMask T = 0; T <= finite_mask(n); T += 2) {
    const GenSet g{n, T};
    const AffPerm w = parabolic_longest(g);
    fa.record(rsk_cell_partition(w) == partition_of_parabolic(g), [&] { return w.word_str(); });
  }
  add_check(rep, "parabolic anchors", fa.ok(), count_detail(fa.bad, fa.total, "subsets of S"), fa.witness());

  // Every parabolic v in C_rho generates the whole cell module, so any two
  // generate the same submodule.
  Json per = Json::array();
  bool all = true;
  std::size_t gens = 0;
  for (const auto& rho : parts) {
    Json vs = Json::array();
    std::size_t size = 0;
    for (GenMask T = 0; T <= finite_mask(n); T += 2) {
      const GenSet g{n, T};
      if (partition_of_parabolic(g) != rho) continue;
      const ElemId v = reg.intern(parabolic_longest(g));
      const SpanCheck sc = finite_generated_span(alg, v, rho, cd);
      size = sc.cell_size;
      all = all && sc.full;
      ++gens;
      vs.push_back({{"v", word(reg, v)}, {"covered", sc.covered}, {"full", sc.full}});
    }
    per.push_back({{"cell", rho.str()}, {"cell_size", size}, {"generators", vs}});
  }
  add_check(rep, "key1 finite", all, std::to_string(gens) + " parabolic generators over " + std::to_string(parts.size()) + " cells", Json{{"cells", per}});
  return rep;
}

// ----------------------------------------------------------------- remark-b

Report suite_remark_b(const SuiteConfig& cfg, KLTable& t) {
  const int n = cfg.n;
  const int G = cfg.gen_len < 0 ? 6 : cfg.gen_len;
  if (n != 4 || G > 6) refuse("remark-b");
  Report rep;
  rep.suite = "remark-b";
  rep.params = {{"n", n}, {"gen_len", G}};

  CPrimeAlgebra alg(t);
  ElementRegistry& reg = t.registry();
  const ElemId v = reg.intern(AffPerm::parse(n, "s1.s3"));
  const ElemId w = reg.intern(AffPerm::parse(n, "s1.s2.s1"));
  const CVec pos{{w, LaurentInt::v_plus_vinv()}};
  const CVec neg{{w, LaurentInt(1)}};

  Json attempts = Json::array();
  std::optional<MembershipEvidence> hit;
  int bound = G;
  for (int g = 0; g <= G; ++g) {
    MembershipEvidence ev = ideal_membership_evidence(alg, pos, v, g, cfg.mode);
    attempts.push_back({{"gen_len", g}, {"generators", ev.generators}, {"unit_rank", ev.unit_rank}, {"integral", ev.integral}});
    if (ev.integral) {
      hit = std::move(ev);
      bound = g;
      break;
    }
  }
  Json pw = {{"target", "(v + v^-1)*C'[s1.s2.s1]"}, {"v", "s1.s3"}, {"attempts", attempts}};
  if (hit) {
    // independent re-check in the T-basis
    HeckeElt sum(n);
    Json sol = Json::array();
    for (const auto& [xvy, c] : hit->solution) {
      const HeckeElt prod = t_mul(t_mul(alg.c_prime(xvy[0]), alg.c_prime(xvy[1])), alg.c_prime(xvy[2]));
      sum.add_scaled(prod, c);
      sol.push_back({{"x", word(reg, xvy[0])}, {"v", word(reg, xvy[1])}, {"y", word(reg, xvy[2])}, {"coeff", c.str()}});
    }
    const bool tcheck = sum == alg.c_prime(w) * LaurentInt::v_plus_vinv();
    pw["gen_len"] = bound;
    pw["terms"] = sol.size();
    pw["solution"] = sol;
    pw["t_basis_check"] = tcheck;
    add_check(rep, "integral membership of (v+v^-1)C'[s1.s2.s1]", tcheck,
              "integral combination of " + std::to_string(sol.size()) + " products found at gen_len " + std::to_string(bound), pw);
  } else {
    add_check(rep, "integral membership of (v+v^-1)C'[s1.s2.s1]", Status::Evidence,
              "no integral combination up to gen_len " + std::to_string(G), pw);
  }

  const MembershipEvidence ev = ideal_membership_evidence(alg, neg, v, bound, cfg.mode);
  const bool consistent = ev.rational_checked && ev.rational && !ev.integral && ev.mod2_obstruction;
  Json nw = {{"target", "C'[s1.s2.s1]"},
             {"v", "s1.s3"},
             {"gen_len", bound},
             {"generators", ev.generators},
             {"unit_rank", ev.unit_rank},
             {"rational_solvable", ev.rational},
             {"residual_rank", ev.residual_rank},
             {"integral", ev.integral},
             {"mod2_obstruction", ev.mod2_obstruction},
             {"scope", "evidence on a finite generating set; not a proof of non-membership"}};
  add_check(rep, "non-membership evidence for C'[s1.s2.s1]", consistent ? Status::Evidence : Status::Fail,
            consistent ? "rational solution exists, integral clearing fails, v=1 mod 2 obstruction"
                       : "solver output does not match the expected evidence pattern",
            nw);
  return rep;
}

// ------------------------------------------------------------------- orbits

Report suite_orbits(const SuiteConfig& cfg) {
  const int n = cfg.n;
  if (n < 1 || n > 8) refuse("orbits");
  Report rep;
  rep.suite = "orbits";
  rep.params = {{"n", n}};

  Failures ft, fo, fanc, fdom, fdim, fcov, frt;
  for (int m = 1; m <= n; ++m) {
    const auto parts = partitions(m);
    const Partition top = Partition::single_column(m), bottom = Partition::single_row(m);
    for (const auto& r : parts) {
      ft.record(transpose(transpose(r)) == r, [&] { return r.str(); });
      fanc.record(closure_leq(bottom, r) && closure_leq(r, top), [&] { return r.str(); });
      fdim.record(orbit_dim(r) == m * m - oracle::commutator_nullity(transpose(r)), [&] { return r.str(); });
      frt.record(partition_of_parabolic(parabolic_for_partition(r)) == r, [&] { return r.str(); });
      for (const auto& x : parts) {
        fdom.record(closure_leq(x, r) == dominance_leq(transpose(x), transpose(r)) && closure_leq(x, r) == dominance_leq(r, x),
                    [&] { return x.str() + " vs " + r.str(); });
        if (x != r) {
          fo.record(!(closure_leq(x, r) && closure_leq(r, x)), [&] { return "antisymmetry " + x.str() + " " + r.str(); });
          if (closure_leq(x, r)) fcov.record(orbit_dim(x) < orbit_dim(r), [&] { return x.str() + " < " + r.str(); });
        }
        for (const auto& y : parts)
          if (closure_leq(x, r) && closure_leq(r, y)) fo.record(closure_leq(x, y), [&] { return "transitivity " + x.str(); });
      }
      fo.record(closure_leq(r, r), [&] { return "reflexivity " + r.str(); });
    }
    for (const auto& [x, r] : closure_covers(m)) fcov.record(orbit_dim(x) < orbit_dim(r), [&] { return "cover " + x.str() + " < " + r.str(); });
  }
  Json dims = Json::array();
  for (const auto& r : partitions(n)) dims.push_back({{"rho", r.str()}, {"dim", orbit_dim(r)}});
  const std::string range = "n <= " + std::to_string(n);
  add_check(rep, "transpose involution", ft.ok(), count_detail(ft.bad, ft.total, "partitions, " + range), ft.witness());
  add_check(rep, "closure partial order", fo.ok(), count_detail(fo.bad, fo.total, "relations"), fo.witness());
  add_check(rep, "closure anchors", fanc.ok(), count_detail(fanc.bad, fanc.total, "partitions"), fanc.witness());
  add_check(rep, "closure = dominance on transposes", fdom.ok(), count_detail(fdom.bad, fdom.total, "pairs"), fdom.witness());
  add_check(rep, "orbit dim = commutator nullity", fdim.ok(), count_detail(fdim.bad, fdim.total, "partitions"),
            fdim.ok() ? Json{{"dims", dims}} : fdim.witness());
  add_check(rep, "orbit dim increases along closure", fcov.ok(), count_detail(fcov.bad, fcov.total, "strict relations and covers"), fcov.witness());
  add_check(rep, "parabolic round trip", frt.ok(), count_detail(frt.bad, frt.total, "partitions"), frt.witness());
  return rep;
}

// ---------------------------------------------------------------- kl-oracle

void kl_domain_checks(Report& rep, const SuiteConfig& cfg, KLTable& t, const std::vector<AffPerm>& domain, const std::string& tag, int radius,
                      GenMask gens) {
  ElementRegistry& reg = t.registry();
  CPrimeAlgebra alg(t);
  t.fill(domain, cfg.mode);
  const std::size_t N = domain.size();
  std::vector<ElemId> ids;
  for (const auto& w : domain) ids.push_back(reg.intern(w));

  std::vector<Failures> fo(N), fb(N), fd(N), fs(N), fbr(N);
  std::vector<std::vector<AffPerm>> lower(N);
  parallel_for(cfg.mode, static_cast<std::ptrdiff_t>(N), [&](std::ptrdiff_t i) {
    const auto k = static_cast<std::size_t>(i);
    const AffPerm& w = domain[k];
    const ElemId wid = ids[k];
    const KLRow& row = t.row(wid);
    const auto sol = oracle::kl_by_bar_invariance(w);
    bool same = sol && sol->size() == row.lower.size();
    if (same)
      for (const auto& [y, p] : *sol) same = same && t.P(reg.intern(y), wid) == p;
    fo[k].record(same, [&] { return w.word_str(); });

    const HeckeElt C = alg.c_prime(wid) * LaurentInt::v_power(w.length());
    fb[k].record(bar_elt(C) == C * LaurentInt::v_power(-2 * w.length()), [&] { return w.word_str(); });

    for (std::size_t j = 0; j < row.lower.size(); ++j) {
      const ElemId y = row.lower[j];
      const LaurentInt& p = row.P[j];
      const int d = w.length() - reg.length(y);
      bool ok;
      if (y == wid) {
        ok = p == LaurentInt(1);
      } else {
        ok = !p.is_zero() && p.low_degree() >= 0 && 2 * (p.high_degree() / 2) == p.high_degree() && p.high_degree() <= d - 1;
        p.for_each_term([&](int e, const Integer&) { ok = ok && e % 2 == 0; });
      }
      fd[k].record(ok, [&] { return reg.elem(y).word_str() + " <= " + w.word_str(); });
      fs[k].record(t.P(reg.inverse(y), reg.inverse(wid)) == p, [&] { return reg.elem(y).word_str() + " <= " + w.word_str(); });
    }
    lower[k] = oracle::lower_interval(w);
  });
  // Bruhat order against subwords, over all pairs of the domain
  std::vector<std::set<AffPerm>> lower_sets(N);
  for (std::size_t k = 0; k < N; ++k) lower_sets[k] = std::set<AffPerm>(lower[k].begin(), lower[k].end());
  parallel_for(cfg.mode, static_cast<std::ptrdiff_t>(N), [&](std::ptrdiff_t i) {
    const auto k = static_cast<std::size_t>(i);
    for (std::size_t j = 0; j < N; ++j)
      fbr[k].record(t.bruhat_leq(ids[j], ids[k]) == (lower_sets[k].count(domain[j]) > 0),
                    [&] { return domain[j].word_str() + " <= " + domain[k].word_str(); });
  });
  auto merged = [](const std::vector<Failures>& fs) {
    Failures f;
    for (const auto& x : fs) f.merge(x);
    return f;
  };
  const Failures o = merged(fo), b = merged(fb), d = merged(fd), s = merged(fs), br = merged(fbr);
  add_check(rep, "kl = bar-invariance solver " + tag, o.ok(), count_detail(o.bad, o.total, "intervals"), o.witness());
  add_check(rep, "bar(C_w) = q^-l(w) C_w " + tag, b.ok(), count_detail(b.bad, b.total, "elements"), b.witness());
  add_check(rep, "degree bound " + tag, d.ok(), count_detail(d.bad, d.total, "polynomials"), d.witness());
  add_check(rep, "inverse symmetry " + tag, s.ok(), count_detail(s.bad, s.total, "polynomials"), s.witness());
  add_check(rep, "bruhat = subwords " + tag, br.ok(), count_detail(br.bad, br.total, "pairs"), br.witness());

  const auto dist = oracle::bfs_lengths(reg.rank(), radius, gens);
  Failures fl;
  const std::size_t in_radius = dist.size();
  fl.record(in_radius == N, [&] { return "ball has " + std::to_string(N) + " elements, search found " + std::to_string(in_radius); });
  for (const auto& w : domain) {
    auto it = dist.find(w);
    fl.record(it != dist.end() && it->second == w.length(), [&] { return w.word_str(); });
  }
  add_check(rep, "length = search distance " + tag, fl.ok(), count_detail(fl.bad, fl.total, "elements"), fl.witness());
}

Report suite_kl_oracle(const SuiteConfig& cfg, KLTable& t) {
  const int n = cfg.n;
  int L = cfg.max_len;
  if (n == 2) {
    if (L < 0) L = 8;
    if (L < 1 || L > 10) refuse("kl-oracle");
  } else if (n == 3) {
    if (L < 0) L = 6;
    if (L > 6) refuse("kl-oracle");
  } else if (n == 4) {
    if (L >= 0) refuse("kl-oracle");
  } else {
    refuse("kl-oracle");
  }
  Report rep;
  rep.suite = "kl-oracle";
  rep.params = {{"n", n}};
  if (L >= 0) rep.params["max_len"] = L;
  ElementRegistry& reg = t.registry();

  if (n >= 3) {
    const int top = n * (n - 1) / 2;
    const auto fin = enumerate_ball(n, top, finite_mask(n));
    kl_domain_checks(rep, cfg, t, fin, "on S_" + std::to_string(n), top, finite_mask(n));
  }
  if (n <= 3 && L > 0) {
    const auto aff = enumerate_ball(n, L, full_mask(n));
    kl_domain_checks(rep, cfg, t, aff, "on affine ball l<=" + std::to_string(L), L, full_mask(n));

    // other omega components: P_{om y, om w} = P_{y,w}, P_{om y, w} = 0
    Failures fw;
    for (const auto& w : aff)
      for (const auto& y : aff) {
        const ElemId yi = reg.intern(y), wi = reg.intern(w);
        const ElemId oy = reg.omega_left(yi, 1), ow = reg.omega_left(wi, 1);
        fw.record(t.P(oy, ow) == t.P(yi, wi) && t.P(oy, wi).is_zero() && !t.bruhat_leq(oy, wi),
                  [&] { return y.word_str() + ", " + w.word_str(); });
      }
    add_check(rep, "omega components", fw.ok(), count_detail(fw.bad, fw.total, "pairs"), fw.witness());
  }
  if (n == 4) {
    const AffPerm e = AffPerm::identity(4);
    std::set<AffPerm> singular;
    bool ok = true;
    for (const auto& w : enumerate_ball(4, 6, finite_mask(4))) {
      const LaurentInt p = t.P(e, w);
      if (p == LaurentInt(1)) continue;
      if (p == LaurentInt(1) + LaurentInt::q_power(1)) {
        singular.insert(w);
      } else {
        ok = false;
      }
    }
    const std::set<AffPerm> expect{AffPerm::from_window(4, {3, 4, 1, 2}), AffPerm::from_window(4, {4, 2, 3, 1})};
    Json sw = Json::array();
    for (const auto& w : singular) sw.push_back(w.window_str());
    add_check(rep, "singular pattern on S_4", ok && singular == expect, std::to_string(singular.size()) + " elements with P_{e,w} = 1+q",
              Json{{"singular", sw}});
  }
  return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"bernstein", "star-gamma", "cells", "key1", "key2", "remark-b", "orbits", "kl-oracle"};
  return names;
}

int default_rank(const std::string& suite) {
  static const std::map<std::string, int> d{{"bernstein", 2}, {"star-gamma", 3}, {"cells", 4}, {"key1", 2},
                                            {"key2", 4},      {"remark-b", 4},   {"orbits", 6}, {"kl-oracle", 4}};
  auto it = d.find(suite);
  if (it == d.end()) throw UnsupportedConfig("unknown suite '" + suite + "'");
  return it->second;
}

std::string supported_ranges(const std::string& suite) {
  static const std::map<std::string, std::string> r{
      {"bernstein", "--n 2..3, --range 0..2 (default 2)"},
      {"star-gamma", "--n 3 with --max-len 2..8, or --n 4 with --max-len 2..5 (default 6)"},
      {"cells", "--n 2..5 (finite group S_n; no --max-len)"},
      {"key1", "--n 2 with --max-len 1..10 (default 8), or --n 3 with --max-len 1..6 (default 6); --depth 0..20"},
      {"key2", "--n 2..4 (finite group S_n; no --max-len)"},
      {"remark-b", "--n 4, --gen-len 0..6 (default 6)"},
      {"orbits", "--n 1..8 (all partitions of m <= n)"},
      {"kl-oracle", "--n 2 with --max-len 1..10 (default 8), --n 3 with --max-len 0..6 (default 6), or --n 4 (S_4; no --max-len)"}};
  auto it = r.find(suite);
  if (it == r.end()) {
    std::string all;
    for (const auto& s : suite_names()) all += (all.empty() ? "" : ", ") + s;
    return "suites: " + all;
  }
  return it->second;
}

Report run_suite(const std::string& suite, const SuiteConfig& cfg, KLTable* table) {
  SuiteConfig c = cfg;
  if (c.n == 0) c.n = default_rank(suite);
  else default_rank(suite);
  if (c.n < 1 || c.n > kMaxRank) refuse(suite);
  if (suite == "bernstein") return suite_bernstein(c);
  if (suite == "orbits") return suite_orbits(c);

  if (c.n < 2) refuse(suite);
  std::unique_ptr<KLTable> own;
  if (table && table->rank() != c.n) throw Error("table rank " + std::to_string(table->rank()) + " does not match --n " + std::to_string(c.n));
  if (!table) {
    own = std::make_unique<KLTable>(c.n);
    table = own.get();
  }
  if (suite == "star-gamma") return suite_star_gamma(c, *table);
  if (suite == "cells") return suite_cells(c, *table);
  if (suite == "key1") return suite_key1(c, *table);
  if (suite == "key2") return suite_key2(c, *table);
  if (suite == "remark-b") return suite_remark_b(c, *table);
  return suite_kl_oracle(c, *table);
}

}  // namespace affhecke

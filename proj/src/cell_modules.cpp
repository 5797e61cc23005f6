#include "affhecke/cell_modules.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace affhecke {

namespace {

bool subset(GenMask a, GenMask b) { return (a & ~b) == 0; }

}  // namespace

CellModuleElt project(CPrimeAlgebra& alg, const CVec& a, const Partition& cell, const CellData& cd, bool known_in_ideal) {
  ElementRegistry& reg = alg.registry();
  const bool lowest = cell == Partition::single_row(reg.rank());
  CellModuleElt out{cell, {}};
  for (const auto& [z, c] : a) {
    const auto label = cd.label_of(z, reg);
    if (!label) {
      if (known_in_ideal && lowest) {
        out.coords.emplace(z, c);
        continue;
      }
      throw Error("ball too small");
    }
    if (*label == cell) {
      out.coords.emplace(z, c);
    } else if (!closure_leq(*label, cell)) {
      throw Error("not in the ideal");
    }
  }
  return out;
}

CellModuleElt project(CPrimeAlgebra& alg, const HeckeElt& a, const Partition& cell, const CellData& cd) {
  return project(alg, alg.to_cprime(a), cell, cd);
}

CellModuleElt bimodule_mul(CPrimeAlgebra& alg, const CVec& h, const CellModuleElt& m, const CVec& h_right, const CellData& cd) {
  const CVec right = alg.mul(m.coords, h_right);
  return project(alg, alg.mul(h, right), m.cell, cd, true);
}

namespace {

enum class Dir { Left, Right };

class Expander {
 public:
  Expander(CPrimeAlgebra& alg, ElemId w, Dir dir) : alg_(alg), reg_(alg.registry()), w_(w), dir_(dir) {
    winv_ = reg_.inverse(w);
  }

  const CVec& get(ElemId x) {
    if (auto it = memo_.find(x); it != memo_.end()) return it->second;
    const GenMask need = dir_ == Dir::Left ? reg_.right_descents(w_) : reg_.left_descents(w_);
    const GenMask have = dir_ == Dir::Left ? reg_.right_descents(x) : reg_.left_descents(x);
    if (!subset(need, have)) throw Error(dir_ == Dir::Left ? "not in left ideal shape" : "not in right ideal shape");
    const AffPerm& xe = reg_.elem(x);
    const AffPerm& we = reg_.elem(winv_);
    const ElemId x1 = reg_.intern(dir_ == Dir::Left ? compose(xe, we) : compose(we, xe));
    if (reg_.length(x1) + reg_.length(w_) != reg_.length(x)) throw Error("not in left ideal shape");
    CVec h;
    if (reg_.length(x1) == 0) {
      h = CPrimeAlgebra::basis(x1);
    } else if (dir_ == Dir::Left) {
      const GenMask ld = reg_.left_descents(x1);
      int s = 0;
      while (!has_gen(ld, s)) ++s;
      const ElemId sx = reg_.left_mul(x, s);
      h = alg_.left_gen(s, get(sx));
      for (const auto& [z, m] : alg_.table().mu_list(sx))
        if (reg_.is_left_descent(z, s)) cvec_add_scaled(h, get(z), LaurentInt(-m));
    } else {
      const GenMask rd = reg_.right_descents(x1);
      int s = 0;
      while (!has_gen(rd, s)) ++s;
      const ElemId xs = reg_.right_mul(x, s);
      h = alg_.right_gen(get(xs), s);
      for (const auto& [z, m] : alg_.table().mu_list(xs))
        if (reg_.is_right_descent(z, s)) cvec_add_scaled(h, get(z), LaurentInt(-m));
    }
    return memo_.emplace(x, std::move(h)).first->second;
  }

 private:
  CPrimeAlgebra& alg_;
  ElementRegistry& reg_;
  ElemId w_;
  ElemId winv_;
  Dir dir_;
  std::unordered_map<ElemId, CVec> memo_;
};

}  // namespace

CVec express_left(CPrimeAlgebra& alg, ElemId x, ElemId w) {
  if (!is_parabolic(alg.registry().elem(w))) throw Error("not a parabolic element");
  Expander e(alg, w, Dir::Left);
  CVec h = e.get(x);
  if (!cvec_equal(alg.mul(h, CPrimeAlgebra::basis(w)), CPrimeAlgebra::basis(x))) throw Error("left factorization failed verification");
  return h;
}

CVec express_right(CPrimeAlgebra& alg, ElemId y, ElemId w) {
  if (!is_parabolic(alg.registry().elem(w))) throw Error("not a parabolic element");
  Expander e(alg, w, Dir::Right);
  CVec h = e.get(y);
  if (!cvec_equal(alg.left_basis(w, h), CPrimeAlgebra::basis(y))) throw Error("right factorization failed verification");
  return h;
}

std::optional<Key1Witness> key1_witness(CPrimeAlgebra& alg, ElemId u, ElemId v, const Partition& cell, const CellData& cd, int depth) {
  ElementRegistry& reg = alg.registry();
  const int n = reg.rank();
  const GenMask Lv = reg.left_descents(v);
  const GenMask Rv = reg.right_descents(v);
  const CVec want = CPrimeAlgebra::basis(u);
  const int a = reg.length(v);

  auto attempt = [&](ElemId x, ElemId y, const std::string& route, const std::vector<StarStep>& path, int m) -> std::optional<Key1Witness> {
    try {
      Key1Witness w;
      w.h = express_left(alg, x, v);
      w.h_right = express_right(alg, y, v);
      const CVec prod = alg.mul(w.h, alg.left_basis(v, w.h_right));
      if (!cvec_equal(project(alg, prod, cell, cd, true).coords, want)) return std::nullopt;
      const CVec xy = project(alg, alg.left_basis(x, CPrimeAlgebra::basis(y)), cell, cd, true).coords;
      bool ok = xy.count(u) > 0;
      for (const auto& [z, c] : xy) {
        if (c.high_degree() > a || c.coeff(a) != (z == u ? 1 : 0)) ok = false;
      }
      w.x = x;
      w.y = y;
      w.omega_shift = m;
      w.path = path;
      w.route = route;
      w.gamma_checked = ok;
      return w;
    } catch (const Error&) {
      return std::nullopt;
    }
  };

  if (subset(Rv, reg.right_descents(u)))
    if (auto w = attempt(u, v, "left", {}, 0)) return w;

  std::vector<int> shifts{0};
  for (int m = 1; m <= n; ++m) {
    shifts.push_back(m);
    shifts.push_back(-m);
  }
  const auto pairs = star_pairs(n);
  std::vector<std::pair<ElemId, std::vector<StarStep>>> frontier{{u, {}}};
  std::set<ElemId> seen{u};
  for (int d = 0; d <= depth && !frontier.empty(); ++d) {
    for (const auto& [p, path] : frontier) {
      for (int m : shifts) {
        const ElemId y = reg.omega_left(p, m);
        if (!subset(Lv, reg.left_descents(y))) continue;
        std::optional<ElemId> x = reg.omega_left(v, -m);
        for (auto it = path.rbegin(); it != path.rend() && x; ++it) x = try_star(reg, *x, it->s, it->t, Side::Left);
        if (!x) continue;
        if (auto w = attempt(*x, y, path.empty() && m == 0 ? "right" : "star", path, m)) return w;
      }
    }
    if (d == depth) break;
    std::vector<std::pair<ElemId, std::vector<StarStep>>> next;
    for (const auto& [p, path] : frontier)
      for (const auto& [s, t] : pairs)
        if (auto q = try_star(reg, p, s, t, Side::Left); q && seen.insert(*q).second) {
          auto np = path;
          np.push_back({s, t});
          next.emplace_back(*q, std::move(np));
        }
    frontier = std::move(next);
  }
  return std::nullopt;
}

namespace {

SVec to_svec(const CVec& x, const std::unordered_map<ElemId, int>& coord) {
  SVec out;
  for (const auto& [z, c] : x) out.emplace(coord.at(z), c);
  return out;
}

}  // namespace

SpanCheck finite_generated_span(CPrimeAlgebra& alg, ElemId v, const Partition& cell, const CellData& cd) {
  ElementRegistry& reg = alg.registry();
  std::unordered_map<ElemId, int> coord;
  for (int i = 0; i < cd.ball.size(); ++i) {
    const ElemId z = cd.ball.ids[static_cast<std::size_t>(i)];
    const auto lab = cd.label_of(z, reg);
    if (lab && *lab == cell) coord.emplace(z, i);
  }
  SpanCheck out;
  out.cell_size = coord.size();
  UnitEchelon ech;
  std::deque<CVec> todo{project(alg, CPrimeAlgebra::basis(v), cell, cd).coords};
  const std::vector<int> gens = mask_members(cd.ball.gens(), reg.rank());
  const std::size_t cap = 64 * (coord.size() + 1);
  std::size_t steps = 0;
  while (!todo.empty() && ech.rank() < coord.size() && steps++ < cap) {
    CVec g = std::move(todo.front());
    todo.pop_front();
    const std::size_t before = ech.rank() + ech.parked().size();
    ech.add(to_svec(g, coord), {});
    if (ech.rank() + ech.parked().size() == before) continue;
    for (int s : gens) {
      todo.push_back(project(alg, alg.left_gen(s, g), cell, cd).coords);
      todo.push_back(project(alg, alg.right_gen(g, s), cell, cd).coords);
    }
    ech.settle();
  }
  out.covered = ech.rank();
  out.full = out.covered == out.cell_size;
  return out;
}

MembershipEvidence ideal_membership_evidence(CPrimeAlgebra& alg, const CVec& target, ElemId v, int gen_len, ExecMode mode,
                                             bool rational_check) {
  ElementRegistry& reg = alg.registry();
  const int n = reg.rank();
  MembershipEvidence ev;
  ev.gen_len = gen_len;

  std::vector<AffPerm> conj;
  for (int k = 0; k < n; ++k) conj.push_back(reg.elem(v).conjugate_by_omega(k));
  std::sort(conj.begin(), conj.end(), CanonicalLess{});
  conj.erase(std::unique(conj.begin(), conj.end()), conj.end());
  std::vector<ElemId> vs, xs;
  for (const auto& c : conj) vs.push_back(reg.intern(c));
  for (const auto& x : enumerate_ball(n, gen_len, full_mask(n))) xs.push_back(reg.intern(x));

  // Generator (v', x, y) has index (iv * |xs| + iy) * |xs| + ix.
  const std::size_t X = xs.size();
  std::vector<std::vector<CVec>> blocks(vs.size() * X);
  parallel_for(mode, static_cast<std::ptrdiff_t>(blocks.size()), [&](std::ptrdiff_t b) {
    const ElemId vp = vs[static_cast<std::size_t>(b) / X];
    const ElemId y = xs[static_cast<std::size_t>(b) % X];
    blocks[static_cast<std::size_t>(b)] = alg.left_basis_many(xs, alg.left_basis(vp, CPrimeAlgebra::basis(y)));
  });

  std::vector<AffPerm> support;
  for (const auto& blk : blocks)
    for (const auto& g : blk)
      for (const auto& [z, c] : g) support.push_back(reg.elem(z));
  for (const auto& [z, c] : target) support.push_back(reg.elem(z));
  std::sort(support.begin(), support.end(), CanonicalLess{});
  support.erase(std::unique(support.begin(), support.end()), support.end());
  std::unordered_map<ElemId, int> coord;
  for (const auto& z : support) coord.emplace(reg.intern(z), static_cast<int>(coord.size()));

  std::vector<SVec> gens;
  gens.reserve(blocks.size() * X);
  for (const auto& blk : blocks)
    for (const auto& g : blk) gens.push_back(to_svec(g, coord));
  ev.generators = gens.size();

  UnitEchelon ech;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!gens[i].empty()) ech.add_generator(static_cast<int>(i), gens[i]);
  ech.settle();
  ev.unit_rank = ech.rank();

  const SVec t = to_svec(target, coord);
  auto red = ech.reduce(t);
  // reduce() keeps residual = t + sum combo_i g_i; flip to t = residual + sum combo_i g_i.
  Combo combo;
  svec_add_scaled(combo, red.combo, LaurentInt(-1));
  if (!red.residual.empty() && rational_check) {
    // Residual against the parked (unit-free) vectors: solve over Q(v), then
    // try to clear the common denominator.
    std::vector<SVec> cols;
    std::vector<const Combo*> combos;
    std::set<std::string> distinct;
    for (const auto& [vec, combo] : ech.parked()) {
      std::string key;
      for (const auto& [k, c] : vec) key += std::to_string(k) + ":" + c.str() + ";";
      if (distinct.insert(key).second) {
        cols.push_back(vec);
        combos.push_back(&combo);
      }
    }
    ev.rational_checked = true;
    const auto sol = rational_solve(cols, red.residual, &ev.residual_rank);
    ev.rational = sol.has_value();
    if (sol) {
      Combo extra;
      bool cleared = true;
      for (std::size_t j = 0; j < cols.size() && cleared; ++j) {
        if (sol->numerators[j].is_zero()) continue;
        LaurentInt x;
        if (!try_divide(sol->numerators[j], sol->denominator, x)) {
          cleared = false;
          break;
        }
        svec_add_scaled(extra, *combos[j], x);
      }
      if (cleared) {
        svec_add_scaled(combo, extra, LaurentInt(1));
        red.residual.clear();
      }
    }
  }
  if (red.residual.empty()) {
    // target = sum combo_i g_i; confirm before reporting.
    SVec check;
    for (const auto& [i, c] : combo) svec_add_scaled(check, gens[static_cast<std::size_t>(i)], c);
    if (check != t) throw Error("membership combination failed verification");
    ev.integral = true;
    ev.rational = true;
    for (const auto& [i, c] : combo) {
      const auto ui = static_cast<std::size_t>(i);
      const std::size_t ix = ui % X, iy = (ui / X) % X, iv = ui / (X * X);
      ev.solution.push_back({{xs[ix], vs[iv], xs[iy]}, c});
    }
    std::sort(ev.solution.begin(), ev.solution.end(), [&](const auto& p, const auto& q) {
      for (int k = 0; k < 3; ++k) {
        const AffPerm& a = reg.elem(p.first[static_cast<std::size_t>(k)]);
        const AffPerm& b = reg.elem(q.first[static_cast<std::size_t>(k)]);
        if (a != b) return CanonicalLess{}(a, b);
      }
      return false;
    });
  }
  ev.mod2_obstruction = !f2_in_span(gens, t);
  return ev;
}

}  // namespace affhecke

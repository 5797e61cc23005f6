#include "affhecke/cells.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace affhecke {

namespace {

Ball make_ball(KLTable& table, int max_len, bool finite) {
  Ball b;
  b.n = table.rank();
  b.max_len = max_len;
  b.finite = finite;
  for (const auto& w : enumerate_ball(b.n, max_len, finite ? finite_mask(b.n) : full_mask(b.n))) {
    const ElemId id = table.id(w);
    b.index.emplace(id, b.size());
    b.ids.push_back(id);
  }
  return b;
}

// Tarjan's algorithm, iterative; returns component ids renumbered by the
// smallest member so that the numbering follows the ball's canonical order.
std::vector<int> strong_components(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0), comp(static_cast<std::size_t>(n), -1);
  std::vector<int> stack;
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  int counter = 0, ncomp = 0;
  std::vector<std::pair<int, std::size_t>> call;
  for (int root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] >= 0) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, next] = call.back();
      const auto uv = static_cast<std::size_t>(v);
      if (next == 0 && index[uv] < 0) {
        index[uv] = low[uv] = counter++;
        stack.push_back(v);
        on_stack[uv] = true;
      }
      if (next < adj[uv].size()) {
        const int w = adj[uv][next++];
        const auto uw = static_cast<std::size_t>(w);
        if (index[uw] < 0) {
          call.emplace_back(w, 0);
        } else if (on_stack[uw]) {
          low[uv] = std::min(low[uv], index[uw]);
        }
        continue;
      }
      if (low[uv] == index[uv]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = false;
          comp[static_cast<std::size_t>(w)] = ncomp;
        } while (w != v);
        ++ncomp;
      }
      const int finished = v;
      call.pop_back();
      if (!call.empty()) {
        const auto up = static_cast<std::size_t>(call.back().first);
        low[up] = std::min(low[up], low[static_cast<std::size_t>(finished)]);
      }
    }
  }
  std::vector<int> rename(static_cast<std::size_t>(ncomp), -1);
  int fresh = 0;
  for (int v = 0; v < n; ++v) {
    int& r = rename[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
    if (r < 0) r = fresh++;
  }
  for (auto& c : comp) c = rename[static_cast<std::size_t>(c)];
  return comp;
}

std::vector<std::vector<int>> group(const std::vector<int>& comp) {
  const int k = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<int>> out(static_cast<std::size_t>(k));
  for (int v = 0; v < static_cast<int>(comp.size()); ++v) out[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);
  return out;
}

}  // namespace

Ball Ball::finite_group(KLTable& table) {
  const int n = table.rank();
  return make_ball(table, n * (n - 1) / 2, true);
}

Ball Ball::affine(KLTable& table, int max_len) { return make_ball(table, max_len, false); }

int Ball::find(ElemId id) const {
  auto it = index.find(id);
  return it == index.end() ? -1 : it->second;
}

std::vector<std::pair<int, int>> star_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  if (n < 3) return out;
  for (int k = 0; k < n; ++k) out.emplace_back(k, (k + 1) % n);
  return out;
}

namespace {

void check_pair(int n, int s, int t) {
  const bool adjacent = n >= 3 && s != t && ((s + 1) % n == t || (t + 1) % n == s);
  if (!adjacent) throw Error("star pair must have order 3");
}

}  // namespace

std::optional<AffPerm> try_star(const AffPerm& w, int s, int t, Side side) {
  check_pair(w.rank(), s, t);
  auto in_d = [&](const AffPerm& x) {
    const GenMask d = side == Side::Left ? x.left_descents() : x.right_descents();
    return has_gen(d, s) != has_gen(d, t);
  };
  if (!in_d(w)) return std::nullopt;
  for (int g : {s, t}) {
    AffPerm c = side == Side::Left ? w.left_mul_gen(g) : w.right_mul_gen(g);
    if (in_d(c)) return c;
  }
  return std::nullopt;
}

AffPerm star(const AffPerm& w, int s, int t, Side side) {
  auto r = try_star(w, s, t, side);
  if (!r) throw Error("undefined star");
  return *r;
}

std::optional<ElemId> try_star(ElementRegistry& reg, ElemId w, int s, int t, Side side) {
  check_pair(reg.rank(), s, t);
  auto in_d = [&](ElemId x) {
    const GenMask d = side == Side::Left ? reg.left_descents(x) : reg.right_descents(x);
    return has_gen(d, s) != has_gen(d, t);
  };
  if (!in_d(w)) return std::nullopt;
  for (int g : {s, t}) {
    const ElemId c = side == Side::Left ? reg.left_mul(w, g) : reg.right_mul(w, g);
    if (in_d(c)) return c;
  }
  return std::nullopt;
}

MuGraph mu_graph(const Ball& ball, CPrimeAlgebra& alg, ExecMode mode) {
  ElementRegistry& reg = alg.registry();
  KLTable& t = alg.table();
  const int N = ball.size();
  MuGraph g;
  g.left.assign(static_cast<std::size_t>(N), {});
  g.right.assign(static_cast<std::size_t>(N), {});
  const std::vector<int> gens = mask_members(ball.gens(), ball.n);
  parallel_for(mode, N, [&](std::ptrdiff_t i) {
    const ElemId w = ball.ids[static_cast<std::size_t>(i)];
    const auto& mus = t.row(w).mu;
    std::vector<int> left, right;
    auto push = [&](std::vector<int>& out, ElemId y) {
      const int j = ball.find(y);
      if (j >= 0 && j != i) out.push_back(j);
    };
    for (int s : gens) {
      if (!reg.is_left_descent(w, s)) {
        push(left, reg.left_mul(w, s));
        for (const auto& [z, m] : mus)
          if (reg.is_left_descent(z, s)) push(left, z);
      }
      if (!reg.is_right_descent(w, s)) {
        push(right, reg.right_mul(w, s));
        for (const auto& [z, m] : mus)
          if (reg.is_right_descent(z, s)) push(right, z);
      }
    }
    for (auto* v : {&left, &right}) {
      std::sort(v->begin(), v->end());
      v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    g.left[static_cast<std::size_t>(i)] = std::move(left);
    g.right[static_cast<std::size_t>(i)] = std::move(right);
  });
  return g;
}

CellData cells_in_ball(const Ball& ball, CPrimeAlgebra& alg, const CellOptions& opts) {
  ElementRegistry& reg = alg.registry();
  const int N = ball.size();
  const int n = ball.n;
  CellData cd;
  cd.ball = ball;
  const MuGraph g = mu_graph(ball, alg, opts.mode);

  cd.left_of = strong_components(g.left);
  cd.right_of = strong_components(g.right);
  std::vector<std::vector<int>> both(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) {
    auto& e = both[static_cast<std::size_t>(i)];
    e = g.left[static_cast<std::size_t>(i)];
    e.insert(e.end(), g.right[static_cast<std::size_t>(i)].begin(), g.right[static_cast<std::size_t>(i)].end());
    if (!ball.finite) {
      const ElemId c = reg.intern(reg.elem(ball.ids[static_cast<std::size_t>(i)]).conjugate_by_omega(1));
      const int j = ball.find(c);
      if (j >= 0 && j != i) e.push_back(j);
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
  }
  cd.two_sided_of = strong_components(both);
  cd.left_classes = group(cd.left_of);
  cd.right_classes = group(cd.right_of);
  cd.two_sided_classes = group(cd.two_sided_of);

  const std::size_t K = cd.two_sided_classes.size();
  cd.anchors.assign(K, {});
  cd.labels.assign(K, std::nullopt);
  cd.label_conflict.assign(K, false);
  for (int i = 0; i < N; ++i) {
    const AffPerm& w = reg.elem(ball.ids[static_cast<std::size_t>(i)]);
    if (!is_parabolic(w)) continue;
    const auto c = static_cast<std::size_t>(cd.two_sided_of[static_cast<std::size_t>(i)]);
    cd.anchors[c].push_back(i);
    const Partition p = partition_of_parabolic(GenSet{n, w.right_descents()});
    if (!cd.labels[c]) {
      cd.labels[c] = p;
    } else if (*cd.labels[c] != p) {
      cd.label_conflict[c] = true;
    }
  }
  for (std::size_t c = 0; c < K; ++c)
    if (cd.label_conflict[c]) cd.labels[c].reset();

  // Preorder on classes: class a lies below class b when the generated
  // graph reaches a from b.
  cd.below.assign(K, std::vector<bool>(K, false));
  std::vector<std::vector<int>> cadj(K);
  for (int i = 0; i < N; ++i)
    for (int j : both[static_cast<std::size_t>(i)]) cadj[static_cast<std::size_t>(cd.two_sided_of[static_cast<std::size_t>(i)])].push_back(cd.two_sided_of[static_cast<std::size_t>(j)]);
  for (std::size_t b = 0; b < K; ++b) {
    std::vector<std::size_t> todo{b};
    cd.below[b][b] = true;
    while (!todo.empty()) {
      const std::size_t c = todo.back();
      todo.pop_back();
      for (int d : cadj[c]) {
        const auto ud = static_cast<std::size_t>(d);
        if (!cd.below[ud][b]) {
          cd.below[ud][b] = true;
          todo.push_back(ud);
        }
      }
    }
  }

  cd.a_empirical.assign(static_cast<std::size_t>(N), -1);
  cd.a_exact.assign(static_cast<std::size_t>(N), std::nullopt);
  if (opts.compute_a) {
    std::vector<std::vector<int>> local(static_cast<std::size_t>(N));
    parallel_for(opts.mode, N, [&](std::ptrdiff_t iu) {
      const ElemId u = ball.ids[static_cast<std::size_t>(iu)];
      const int budget = ball.finite ? ball.max_len : ball.max_len - reg.length(u);
      std::vector<ElemId> ws;
      for (ElemId w : ball.ids)
        if (reg.length(w) <= budget) ws.push_back(w);
      std::vector<int> best(static_cast<std::size_t>(N), -1);
      for (const CVec& prod : alg.left_basis_many(ws, CPrimeAlgebra::basis(u)))
        for (const auto& [z, c] : prod) {
          const int j = ball.find(z);
          if (j >= 0) best[static_cast<std::size_t>(j)] = std::max(best[static_cast<std::size_t>(j)], c.high_degree());
        }
      local[static_cast<std::size_t>(iu)] = std::move(best);
    });
    for (const auto& best : local)
      for (int j = 0; j < N; ++j) cd.a_empirical[static_cast<std::size_t>(j)] = std::max(cd.a_empirical[static_cast<std::size_t>(j)], best[static_cast<std::size_t>(j)]);
  }
  const int global = n * (n - 1) / 2;
  for (int i = 0; i < N; ++i) {
    const auto c = static_cast<std::size_t>(cd.two_sided_of[static_cast<std::size_t>(i)]);
    if (cd.labels[c]) {
      cd.a_exact[static_cast<std::size_t>(i)] = reg.length(ball.ids[static_cast<std::size_t>(cd.anchors[c].front())]);
    } else if (cd.a_empirical[static_cast<std::size_t>(i)] == global) {
      cd.a_exact[static_cast<std::size_t>(i)] = global;
    }
  }
  return cd;
}

int CellData::class_of(ElemId id, ElementRegistry& reg) const {
  const int m = reg.omega_power(id);
  const int i = ball.find(m == 0 ? id : reg.omega_left(id, -m));
  return i < 0 ? -1 : two_sided_of[static_cast<std::size_t>(i)];
}

std::optional<Partition> CellData::label_of(ElemId id, ElementRegistry& reg) const {
  const int c = class_of(id, reg);
  if (c < 0) return std::nullopt;
  return labels[static_cast<std::size_t>(c)];
}

std::optional<int> CellData::a_of(ElemId id, ElementRegistry& reg) const {
  const int m = reg.omega_power(id);
  const int i = ball.find(m == 0 ? id : reg.omega_left(id, -m));
  if (i < 0) return std::nullopt;
  return a_exact[static_cast<std::size_t>(i)];
}

std::vector<int> CellData::class_with_label(const Partition& rho) const {
  std::vector<int> out;
  for (std::size_t c = 0; c < labels.size(); ++c)
    if (labels[c] && *labels[c] == rho) out.push_back(static_cast<int>(c));
  return out;
}

Partition rsk_shape(const AffPerm& w) {
  if (!w.in_finite_part()) throw Error("RSK needs a permutation of {1..n}");
  std::vector<std::vector<std::int64_t>> rows;
  for (int i = 0; i < w.rank(); ++i) {
    std::int64_t x = w.window_at(i);
    for (auto& row : rows) {
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        x = 0;
        break;
      }
      std::swap(*it, x);
    }
    if (x != 0) rows.push_back({x});
  }
  std::vector<int> shape;
  for (const auto& r : rows) shape.push_back(static_cast<int>(r.size()));
  return Partition(shape);
}

Partition rsk_cell_partition(const AffPerm& w) { return transpose(rsk_shape(w)); }

CVec structure_constants(CPrimeAlgebra& alg, ElemId w, ElemId u) { return alg.left_basis(w, CPrimeAlgebra::basis(u)); }

Integer gamma(CPrimeAlgebra& alg, const CellData& cd, ElemId w, ElemId u, ElemId z) {
  const auto a = cd.a_of(z, alg.registry());
  if (!a) throw Error("gamma undefined on this ball");
  const CVec h = structure_constants(alg, w, u);
  auto it = h.find(z);
  return it == h.end() ? Integer(0) : it->second.coeff(*a);
}

}  // namespace affhecke

#include "affhecke/orbits.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace affhecke {

Partition::Partition(std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) throw Error("negative part in partition");
    if (p > 0) parts_.push_back(p);
  }
  if (!std::is_sorted(parts_.rbegin(), parts_.rend())) throw Error("partition parts must be weakly decreasing");
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int j) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), j));
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  std::string body;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') body += c;
  std::vector<int> parts;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw Error("cannot parse partition '" + text + "'");
    parts.push_back(v);
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition transpose(const Partition& rho) {
  std::vector<int> t;
  const int largest = rho.parts().empty() ? 0 : rho.parts().front();
  for (int i = 1; i <= largest; ++i) {
    int col = 0;
    for (int p : rho.parts())
      if (p >= i) ++col;
    t.push_back(col);
  }
  return Partition(t);
}

bool dominance_leq(const Partition& rho, const Partition& xi) {
  if (rho.size() != xi.size()) throw Error("partition size mismatch");
  int a = 0, b = 0;
  const std::size_t len = std::max(rho.parts().size(), xi.parts().size());
  for (std::size_t k = 0; k < len; ++k) {
    a += rho.part(k);
    b += xi.part(k);
    if (a > b) return false;
  }
  return true;
}

bool closure_leq(const Partition& xi, const Partition& rho) {
  // O_xi has Jordan type xi*; orbit closures follow dominance of Jordan types.
  return dominance_leq(transpose(xi), transpose(rho));
}

int orbit_dim(const Partition& rho) {
  const int n = rho.size();
  int sq = 0;
  for (int p : rho.parts()) sq += p * p;
  return n * n - sq;
}

int cell_a_value(const Partition& rho) {
  int a = 0;
  for (int p : rho.parts()) a += p * (p - 1) / 2;
  return a;
}

Partition partition_of_parabolic(const GenSet& T) {
  std::vector<int> parts;
  int used = 0;
  for (int k : block_type(T)) {
    parts.push_back(k + 1);
    used += k + 1;
  }
  for (; used < T.n; ++used) parts.push_back(1);
  return Partition(parts);
}

GenSet parabolic_for_partition(const Partition& rho) {
  GenSet T{rho.size(), 0};
  int pos = 1;
  for (int p : rho.parts()) {
    if (p < 2) break;
    for (int j = 0; j < p - 1; ++j) T.members |= gen_bit(pos++);
    ++pos;  // gap
  }
  return T;
}

std::vector<std::pair<Partition, Partition>> closure_covers(int n) {
  const auto all = partitions(n);
  std::vector<std::pair<Partition, Partition>> covers;
  for (const auto& xi : all)
    for (const auto& rho : all) {
      if (xi == rho || !closure_leq(xi, rho)) continue;
      bool between = false;
      for (const auto& mid : all) {
        if (mid == xi || mid == rho) continue;
        if (closure_leq(xi, mid) && closure_leq(mid, rho)) {
          between = true;
          break;
        }
      }
      if (!between) covers.emplace_back(xi, rho);
    }
  return covers;
}

}  // namespace affhecke

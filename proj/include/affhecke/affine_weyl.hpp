#pragma once

// The extended affine Weyl group of GL_n realized as periodic permutations
// of Z: sigma(i + n) = sigma(i) + n, stored by the window [sigma(1..n)].
//
// Conventions used throughout the library:
//   * (a * b)(i) = a(b(i)).
//   * Right multiplication by s_k swaps window positions k, k+1; left
//     multiplication by s_k swaps the values in residue classes k, k+1.
//   * omega(i) = i + 1; s_k for 0 <= k < n as affine simple reflections.
//   * Generator sets and descent sets are bitmasks over {0, ..., n-1}.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "affhecke/laurent.hpp"

namespace affhecke {

inline constexpr int kMaxRank = 8;

using GenMask = std::uint32_t;

inline bool has_gen(GenMask m, int k) { return ((m >> k) & 1u) != 0; }
inline GenMask gen_bit(int k) { return GenMask{1} << k; }
inline GenMask full_mask(int n) { return (GenMask{1} << n) - 1; }
/// {s_1, ..., s_{n-1}}, the finite simple reflections.
inline GenMask finite_mask(int n) { return full_mask(n) & ~GenMask{1}; }

std::vector<int> mask_members(GenMask m, int n);

class AffPerm {
 public:
  AffPerm() = default;

  /// Validates residues; throws Error("not a bijection") on a clash.
  static AffPerm from_window(int n, const std::vector<std::int64_t>& window);
  static AffPerm identity(int n);
  static AffPerm omega(int n, int power = 1);
  static AffPerm generator(int n, int k);

  int rank() const { return n_; }
  std::vector<std::int64_t> window() const;
  std::int64_t window_at(int i) const { return w_[static_cast<std::size_t>(i)]; }  // sigma(i+1)

  /// sigma(i) for any integer i.
  std::int64_t operator()(std::int64_t i) const;

  int length() const { return len_; }
  /// m with this = omega^m * (element of W_a); equals sum(sigma(i) - i) / n.
  int omega_power() const { return om_; }
  bool is_identity() const;
  /// True when the element permutes {1, ..., n}, i.e. lies in S_n.
  bool in_finite_part() const;

  AffPerm inverse() const;
  AffPerm right_mul_gen(int k) const;
  AffPerm left_mul_gen(int k) const;
  /// omega^m * this * omega^-m
  AffPerm conjugate_by_omega(int m) const;

  bool is_right_descent(int k) const;
  bool is_left_descent(int k) const { return inverse().is_right_descent(k); }
  GenMask right_descents() const;
  GenMask left_descents() const { return inverse().right_descents(); }

  std::string window_str() const;  // "[3,2]"
  std::string word_str() const;    // "om.s1", "e"

  /// Accepts "[3,2]", "e", or '.'-separated words over om, om^k, s0..s{n-1}.
  static AffPerm parse(int n, std::string_view text);

  friend bool operator==(const AffPerm& a, const AffPerm& b) { return a.n_ == b.n_ && a.w_ == b.w_; }
  /// Lexicographic on windows; used where a plain strict order suffices.
  friend auto operator<=>(const AffPerm& a, const AffPerm& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    return a.w_ <=> b.w_;
  }

  std::size_t hash() const;

 private:
  void finish();

  int n_ = 0;
  int len_ = 0;
  int om_ = 0;
  std::array<std::int64_t, kMaxRank> w_{};
};

/// Deterministic presentation order: length first, then window.
struct CanonicalLess {
  bool operator()(const AffPerm& a, const AffPerm& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    return a < b;
  }
};

struct AffPermHash {
  std::size_t operator()(const AffPerm& w) const { return w.hash(); }
};

/// (a * b)(i) = a(b(i)); throws on rank mismatch.
AffPerm compose(const AffPerm& a, const AffPerm& b);
AffPerm compose(std::initializer_list<AffPerm> factors);

/// w = omega^omega_power * s_{word[0]} ... s_{word.back()}, reduced.
struct CanonicalWord {
  int omega_power = 0;
  std::vector<int> word;
};

CanonicalWord canonical_word(const AffPerm& w);
AffPerm from_word(int n, const CanonicalWord& cw);

/// Memoized Bruhat order on the extended group (different omega components
/// are incomparable). Thread-safe; results do not depend on cache state.
class BruhatOrder {
 public:
  bool leq(const AffPerm& y, const AffPerm& w);
  std::size_t cache_size() const;

 private:
  bool leq_locked(const AffPerm& y, const AffPerm& w);

  struct PairHash {
    std::size_t operator()(const std::pair<AffPerm, AffPerm>& p) const {
      return p.first.hash() * 31u ^ p.second.hash();
    }
  };
  mutable std::mutex mu_;
  std::unordered_map<std::pair<AffPerm, AffPerm>, bool, PairHash> memo_;
};

bool bruhat_leq(const AffPerm& y, const AffPerm& w);

/// Subset of the affine simple reflections S_a = {s_0, ..., s_{n-1}}.
struct GenSet {
  int n = 0;
  GenMask members = 0;

  bool finite_type() const { return members != full_mask(n); }
  std::vector<int> indices() const { return mask_members(members, n); }
};

/// lambda in Z^n, the weight lattice of GL_n.
struct Weight {
  std::vector<std::int64_t> entries;

  int rank() const { return static_cast<int>(entries.size()); }
  bool dominant() const;
  friend bool operator==(const Weight&, const Weight&) = default;
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
/// The simple root e_i - e_{i+1}, 1 <= i < n.
Weight simple_root(int n, int i);
/// Swap of entries i and i+1 (action of s_i, 1 <= i < n).
Weight reflect(const Weight& lambda, int i);

/// t_lambda(i) = i + n * lambda_i.
AffPerm translation(const Weight& lambda);

/// Longest element of the finite parabolic subgroup generated by T.
AffPerm parabolic_longest(const GenSet& T);

/// Sizes of the connected components of T in the cyclic Dynkin diagram,
/// sorted descending.
std::vector<int> block_type(const GenSet& T);

/// w is the longest element of <R(w)> with R(w) a proper subset of S_a.
bool is_parabolic(const AffPerm& w);

/// Elements of W_a (omega component 0) of length at most max_len generated by
/// the given generators, in canonical order.
std::vector<AffPerm> enumerate_ball(int n, int max_len, GenMask gens);

}  // namespace affhecke

template <>
struct std::hash<affhecke::AffPerm> {
  std::size_t operator()(const affhecke::AffPerm& w) const { return w.hash(); }
};

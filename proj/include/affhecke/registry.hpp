#pragma once

// Interning of group elements into dense integer ids with cached lengths,
// descent sets and generator neighbours. Every KL and C'-basis kernel works
// on ids; AffPerm values appear only at API boundaries.

#include <array>
#include <atomic>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "affhecke/affine_weyl.hpp"

namespace affhecke {

using ElemId = std::uint32_t;
inline constexpr ElemId kNoElem = std::numeric_limits<ElemId>::max();

class ElementRegistry {
 public:
  explicit ElementRegistry(int n);
  ElementRegistry(const ElementRegistry&) = delete;
  ElementRegistry& operator=(const ElementRegistry&) = delete;
  ~ElementRegistry();

  int rank() const { return n_; }
  std::size_t size() const { return size_.load(std::memory_order_acquire); }

  ElemId intern(const AffPerm& w);
  std::optional<ElemId> find(const AffPerm& w) const;
  ElemId identity() const { return 0; }

  const AffPerm& elem(ElemId id) const { return info(id).w; }
  int length(ElemId id) const { return info(id).w.length(); }
  int omega_power(ElemId id) const { return info(id).w.omega_power(); }
  GenMask left_descents(ElemId id) const { return info(id).ldes; }
  GenMask right_descents(ElemId id) const { return info(id).rdes; }
  bool is_left_descent(ElemId id, int k) const { return has_gen(info(id).ldes, k); }
  bool is_right_descent(ElemId id, int k) const { return has_gen(info(id).rdes, k); }

  ElemId left_mul(ElemId id, int k);
  ElemId right_mul(ElemId id, int k);
  ElemId inverse(ElemId id);
  /// omega^m * x and x * omega^m
  ElemId omega_left(ElemId id, int m);
  ElemId omega_right(ElemId id, int m);
  /// omega^-m * x, where m is the omega component of x.
  ElemId base(ElemId id) { return omega_left(id, -omega_power(id)); }

 private:
  static constexpr std::size_t kSegBits = 12;
  static constexpr std::size_t kSegSize = std::size_t{1} << kSegBits;
  static constexpr std::size_t kMaxSegs = 4096;

  struct Info {
    AffPerm w;
    GenMask ldes = 0;
    GenMask rdes = 0;
    std::array<std::atomic<ElemId>, kMaxRank> lmul;
    std::array<std::atomic<ElemId>, kMaxRank> rmul;
    std::atomic<ElemId> inv{kNoElem};
  };

  const Info& info(ElemId id) const {
    return segs_[id >> kSegBits].load(std::memory_order_acquire)[id & (kSegSize - 1)];
  }
  Info& info(ElemId id) { return segs_[id >> kSegBits].load(std::memory_order_acquire)[id & (kSegSize - 1)]; }

  int n_;
  std::array<std::atomic<Info*>, kMaxSegs> segs_{};
  std::atomic<std::size_t> size_{0};
  mutable std::shared_mutex mu_;
  std::unordered_map<AffPerm, ElemId, AffPermHash> index_;
};

}  // namespace affhecke

#include "affhecke/registry.hpp"

#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "affhecke/parallel.hpp"

namespace affhecke {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_num_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

ElementRegistry::ElementRegistry(int n) : n_(n) { intern(AffPerm::identity(n)); }

ElementRegistry::~ElementRegistry() {
  for (auto& seg : segs_) delete[] seg.load();
}

ElemId ElementRegistry::intern(const AffPerm& w) {
  if (w.rank() != n_) throw Error("element of rank " + std::to_string(w.rank()) + " in rank-" + std::to_string(n_) + " registry");
  {
    std::shared_lock lock(mu_);
    if (auto it = index_.find(w); it != index_.end()) return it->second;
  }
  std::unique_lock lock(mu_);
  if (auto it = index_.find(w); it != index_.end()) return it->second;
  const std::size_t id = size_.load(std::memory_order_relaxed);
  const std::size_t seg = id >> kSegBits;
  if (seg >= kMaxSegs) throw Error("element registry capacity exhausted");
  if (segs_[seg].load(std::memory_order_relaxed) == nullptr) segs_[seg].store(new Info[kSegSize], std::memory_order_release);
  Info& slot = segs_[seg].load(std::memory_order_relaxed)[id & (kSegSize - 1)];
  slot.w = w;
  slot.rdes = w.right_descents();
  slot.ldes = w.left_descents();
  for (auto& a : slot.lmul) a.store(kNoElem, std::memory_order_relaxed);
  for (auto& a : slot.rmul) a.store(kNoElem, std::memory_order_relaxed);
  index_.emplace(w, static_cast<ElemId>(id));
  size_.store(id + 1, std::memory_order_release);
  return static_cast<ElemId>(id);
}

std::optional<ElemId> ElementRegistry::find(const AffPerm& w) const {
  std::shared_lock lock(mu_);
  if (auto it = index_.find(w); it != index_.end()) return it->second;
  return std::nullopt;
}

ElemId ElementRegistry::left_mul(ElemId id, int k) {
  auto& slot = info(id).lmul[static_cast<std::size_t>(k)];
  ElemId r = slot.load(std::memory_order_acquire);
  if (r != kNoElem) return r;
  r = intern(elem(id).left_mul_gen(k));
  slot.store(r, std::memory_order_release);
  info(r).lmul[static_cast<std::size_t>(k)].store(id, std::memory_order_release);
  return r;
}

ElemId ElementRegistry::right_mul(ElemId id, int k) {
  auto& slot = info(id).rmul[static_cast<std::size_t>(k)];
  ElemId r = slot.load(std::memory_order_acquire);
  if (r != kNoElem) return r;
  r = intern(elem(id).right_mul_gen(k));
  slot.store(r, std::memory_order_release);
  info(r).rmul[static_cast<std::size_t>(k)].store(id, std::memory_order_release);
  return r;
}

ElemId ElementRegistry::inverse(ElemId id) {
  auto& slot = info(id).inv;
  ElemId r = slot.load(std::memory_order_acquire);
  if (r != kNoElem) return r;
  r = intern(elem(id).inverse());
  slot.store(r, std::memory_order_release);
  info(r).inv.store(id, std::memory_order_release);
  return r;
}

ElemId ElementRegistry::omega_left(ElemId id, int m) {
  if (m == 0) return id;
  return intern(compose(AffPerm::omega(n_, m), elem(id)));
}

ElemId ElementRegistry::omega_right(ElemId id, int m) {
  if (m == 0) return id;
  return intern(compose(elem(id), AffPerm::omega(n_, m)));
}

}  // namespace affhecke

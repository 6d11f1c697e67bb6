#ifndef CMW_QRING_HPP
#define CMW_QRING_HPP

#include <atomic>
#include <memory>

#include "cmw/idealops.hpp"

namespace cmw {

class QRing;
using QRingPtr = std::shared_ptr<const QRing>;

// R = S/I for a homogeneous ideal I given by its reduced Groebner basis.
// I empty means the polynomial ring itself (the "ambient" tag of resolutions).
class QRing : public std::enable_shared_from_this<QRing> {
 public:
  static QRingPtr make(RingPtr S, const std::vector<Poly>& igens, const GBOptions& opt = {});
  static QRingPtr ambient_of(const RingPtr& S) { return make(S, {}); }

  const RingPtr& poly_ring() const { return S_; }
  const IdealGB& defining() const { return igb_; }
  bool is_ambient() const { return igb_.g.empty(); }
  QRingPtr ambient() const;

  int nvars() const { return S_->nvars(); }
  int dim() const { return dim_; }

  // depth R at the irrelevant maximal ideal; filled by the invariants layer.
  int cached_depth() const { return depth_.load(); }
  void set_depth(int d) const { depth_.store(d); }
  static constexpr int kDepthUnset = -1000;

  Poly nf(const Poly& f) const { return poly_nf(f, igb_); }
  int hilbert(int d) const;

  uint64_t fingerprint() const { return fpr_; }
  bool same(const QRing& o) const { return fpr_ == o.fpr_; }
  std::string describe() const;

 private:
  QRing() = default;
  RingPtr S_;
  IdealGB igb_;
  int dim_ = 0;
  mutable std::atomic<int> depth_{kDepthUnset};
  uint64_t fpr_ = 0;
};

}  // namespace cmw

#endif

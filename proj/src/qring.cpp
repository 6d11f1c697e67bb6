#include "cmw/qring.hpp"

#include <sstream>

namespace cmw {

QRingPtr QRing::make(RingPtr S, const std::vector<Poly>& igens, const GBOptions& opt) {
  auto R = std::shared_ptr<QRing>(new QRing());
  R->S_ = S;
  R->igb_ = ideal_gb(S, igens, opt);
  if (R->igb_.is_unit()) fail_kernel("defining ideal is the unit ideal (zero ring)");
  R->dim_ = krull_dimension(R->igb_);

  Fnv1a h;
  S->fingerprint(h);
  h.feed("/");
  for (const auto& g : R->igb_.g) g.fingerprint(h);
  R->fpr_ = h.value();
  return R;
}

QRingPtr QRing::ambient() const {
  if (is_ambient()) return shared_from_this();
  return make(S_, {});
}

int QRing::hilbert(int d) const {
  if (d < 0) return 0;
  int count = 0;
  std::vector<Expo> leads;
  for (const auto& g : igb_.g) leads.push_back(g.lead().m);
  for (const auto& m : S_->monomials_of_degree(d)) {
    bool divisible = false;
    for (const auto& l : leads)
      if (PolyRing::divides(l, m)) {
        divisible = true;
        break;
      }
    if (!divisible) ++count;
  }
  return count;
}

std::string QRing::describe() const {
  std::ostringstream os;
  os << S_->describe();
  if (!is_ambient()) {
    os << " / (";
    for (size_t i = 0; i < igb_.g.size(); ++i) {
      if (i) os << ", ";
      os << igb_.g[i].str();
    }
    os << ")";
  }
  return os.str();
}

}  // namespace cmw

#ifndef CMW_TEST_UTIL_HPP
#define CMW_TEST_UTIL_HPP

#include <string>
#include <vector>

#include "cmw/module.hpp"

namespace cmwtest {

using namespace cmw;

// Shared fixtures for the worked examples: Q[x,y], the hypersurface
// Q[x,y]/(xy), and the numerical-semigroup ring of <3,4,5>.

inline RingPtr ring_xy() {
  return PolyRing::make(Field::rationals(), {"x", "y"}, TermOrder::grevlex);
}

inline QRingPtr S_xy() { return QRing::ambient_of(ring_xy()); }

inline QRingPtr hypersurface_xy() {
  RingPtr S = ring_xy();
  Poly x = var_poly(S, 0), y = var_poly(S, 1);
  return QRing::make(S, {x * y});
}

inline QRingPtr semigroup_345() {
  RingPtr S = PolyRing::make(Field::rationals(), {"x", "y", "z"}, TermOrder::grevlex, {3, 4, 5});
  Poly x = var_poly(S, 0), y = var_poly(S, 1), z = var_poly(S, 2);
  return QRing::make(S, {x * z - y * y, x * x * x - y * z, x * x * y - z * z});
}

inline Poly pvar(const QRingPtr& R, int i) { return var_poly(R->poly_ring(), i); }

inline std::string gb_str(const IdealGB& I) {
  std::string s;
  for (const auto& g : I.g) s += "[" + g.str() + "]";
  return s;
}

}  // namespace cmwtest

#endif

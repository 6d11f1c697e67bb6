#ifndef CMW_VECPOLY_HPP
#define CMW_VECPOLY_HPP

#include <vector>

#include "cmw/ring.hpp"

namespace cmw {

// Graded free module over the ring: component t is a copy of the ring
// generated in degree shifts[t] (i.e. the summand R(-shifts[t])).
struct FreeMod {
  RingPtr ring;
  std::vector<int> shifts;

  int rank() const { return static_cast<int>(shifts.size()); }
};

FreeMod stack(const FreeMod& a, const std::vector<int>& more_shifts);

struct MTerm {
  Coeff c;
  Expo m;
  int comp = 0;
};

// Module monomial order: term-over-position with an optional component split.
// Components < split form the major block — every major-block monomial is
// greater than every minor-block one (the elimination property used to read
// syzygies off a stacked Groebner basis).
struct ModOrder {
  const PolyRing* ring = nullptr;
  int split = -1;  // -1: no split

  int block(int comp) const { return (split >= 0 && comp >= split) ? 1 : 0; }
  int cmp(const MTerm& a, const MTerm& b) const {
    int ba = block(a.comp), bb = block(b.comp);
    if (ba != bb) return ba < bb ? 1 : -1;
    int c = ring->cmp(a.m, b.m);
    if (c) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
  }
};

// Element of a free module: terms strictly descending under a ModOrder.
class VecPoly {
 public:
  VecPoly() = default;
  explicit VecPoly(RingPtr ring) : ring_(std::move(ring)) {}
  static VecPoly from_terms(RingPtr ring, std::vector<MTerm> terms, const ModOrder& ord);
  static VecPoly unit(RingPtr ring, int comp);
  static VecPoly embed(const Poly& p, int comp, const ModOrder& ord);

  const RingPtr& ring() const { return ring_; }
  const std::vector<MTerm>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  const MTerm& lead() const { return t_.front(); }

  VecPoly add(const VecPoly& o, const ModOrder& ord) const;
  VecPoly sub(const VecPoly& o, const ModOrder& ord) const;
  VecPoly negate() const;
  VecPoly mul_term(const Coeff& c, const Expo& m) const;
  VecPoly monic() const;
  VecPoly drop_lead() const;

  // All terms share total degree wdeg(m) + shifts[comp]; kernels require it.
  std::optional<int> homogeneous_degree(const FreeMod& target) const;

  // Component t extracted as a plain polynomial.
  Poly component(int t) const;
  // Drop components < k and renumber the rest downward.
  VecPoly strip_components(int k) const;
  // Shift all component indices upward by k.
  VecPoly lift_components(int k) const;
  bool has_component_below(int k) const;

  bool operator==(const VecPoly& o) const;
  void fingerprint(Fnv1a& h) const;
  std::string str(const FreeMod& target) const;

 private:
  RingPtr ring_;
  std::vector<MTerm> t_;
};

}  // namespace cmw

#endif

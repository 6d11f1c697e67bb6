#ifndef CMW_LOCALIZE_HPP
#define CMW_LOCALIZE_HPP

#include <optional>

#include "cmw/module.hpp"

namespace cmw {

// Structural view of a direct sum of shifted cyclic monomial quotients
// (+) R(-shift_i)/J_i, recognized from the raw presentation: at most one
// nonzero entry per column and every entry a monomial. These are the modules
// the variable-inversion localization oracle can handle.
struct MonomialShape {
  std::vector<int> shifts;
  std::vector<std::vector<Expo>> ideals;  // monomial generators per summand
};

bool ring_is_monomial(const QRing& R);
std::optional<MonomialShape> monomial_shape(const Module& M);

struct LocalInvariants {
  bool nonzero = false;
  int depth = 0;
  int dim = 0;
};

// Invariants of M localized at the monomial prime p_T = (x_t : t in T),
// computed by inverting the variables outside T: each summand restricts to a
// cyclic monomial quotient of k[x_T], whose graded depth/dim at (x_T) equal
// the local ones (flat base change with zero-dimensional closed fiber).
LocalInvariants localize(const QRingPtr& R, const MonomialShape& shape, unsigned tmask);

// Masks T of monomial primes containing the (monomial) ideal; nullopt when
// some generator is not a monomial.
std::optional<std::vector<unsigned>> monomial_primes_over(const QRingPtr& R, const IdealGB& ideal);

}  // namespace cmw

#endif

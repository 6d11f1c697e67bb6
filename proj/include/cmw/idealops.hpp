#ifndef CMW_IDEALOPS_HPP
#define CMW_IDEALOPS_HPP

#include <vector>

#include "cmw/groebner.hpp"

namespace cmw {

// Ideals are the rank-one case of the module machinery.
struct IdealGB {
  RingPtr ring;
  std::vector<Poly> g;  // reduced Groebner basis, ascending by lead

  bool is_zero() const { return g.empty(); }
  bool is_unit() const;
};

IdealGB ideal_gb(const RingPtr& ring, const std::vector<Poly>& gens, const GBOptions& opt = {});
Poly poly_nf(const Poly& f, const IdealGB& I);
bool ideal_contains(const IdealGB& I, const Poly& f);
bool same_ideal(const IdealGB& a, const IdealGB& b);

// (I : f) = { g | g*f in I }; rejects f = 0.
std::vector<Poly> ideal_quotient(const RingPtr& ring, const std::vector<Poly>& igens,
                                 const Poly& f, const GBOptions& opt = {});

// (I : f^infinity), computed by iterating the quotient until it stabilizes.
IdealGB saturation(const RingPtr& ring, const std::vector<Poly>& igens, const Poly& f,
                   const GBOptions& opt = {});

// f in rad(I), decided through saturation (homogeneity-preserving).
bool radical_membership(const Poly& f, const std::vector<Poly>& igens, const GBOptions& opt = {});

std::vector<Poly> ideal_intersection(const RingPtr& ring,
                                     const std::vector<std::vector<Poly>>& ideals,
                                     const GBOptions& opt = {});

// Krull dimension of S/I via maximal variable sets independent modulo in(I);
// the unit ideal (zero ring) reports -1.
int krull_dimension(const IdealGB& I);

// Degree-d dimension of F/span(gb) counted through standard monomials.
int std_monomial_count(const GBasis& gb, int d);

VecPoly embed_poly(const Poly& p);
Poly extract_component(const VecPoly& v, int comp);

}  // namespace cmw

#endif

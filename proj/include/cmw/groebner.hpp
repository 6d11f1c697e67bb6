#ifndef CMW_GROEBNER_HPP
#define CMW_GROEBNER_HPP

#include <vector>

#include "cmw/vecpoly.hpp"

namespace cmw {

struct GBOptions {
  enum class Engine { fast, reference } engine = Engine::fast;
  bool parallel = true;  // degree-batched OpenMP S-poly reduction (fast engine)
};

// Reduced Groebner basis of a submodule of a graded free module.
// Elements are monic, mutually reduced, sorted ascending by leading term;
// this form is canonical for the submodule, the order and the split.
struct GBasis {
  FreeMod target;
  ModOrder ord;
  std::vector<VecPoly> g;

  bool same_basis(const GBasis& o) const;
};

// gens must be homogeneous over target (checked; error names the offender).
GBasis module_gb(const FreeMod& target, const std::vector<VecPoly>& gens, int split,
                 const GBOptions& opt = {});

// Unique remainder of full division by a (not necessarily Groebner) list.
VecPoly normal_form(const VecPoly& f, const std::vector<VecPoly>& divisors, const ModOrder& ord);
inline VecPoly normal_form(const VecPoly& f, const GBasis& gb) {
  return normal_form(f, gb.g, gb.ord);
}
bool in_span(const VecPoly& v, const GBasis& gb);

// Matrix-free application: sum of cols[t.comp] * (t.c, t.m) over terms of v.
VecPoly apply_columns(const std::vector<VecPoly>& cols, const VecPoly& v, const ModOrder& ord);

}  // namespace cmw

#endif

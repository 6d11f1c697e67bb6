#ifndef CMW_HOMALG_HPP
#define CMW_HOMALG_HPP

#include "cmw/resolution.hpp"

namespace cmw {

struct DerivedResult {
  std::string functor;  // "ext" | "tor"
  int index = 0;
  ModulePtr value;
  bool vanishes = false;
};

// i-th cohomology of Hom(resolution of M, N). Exact within the resolution:
// beyond a truncated (non-terminated) chain the call is an error, never a
// silent zero.
DerivedResult ext_module(int i, const ModulePtr& M, const ModulePtr& N, int bound = -1);

// i-th homology of (resolution of M) tensor N.
DerivedResult tor_module(int i, const ModulePtr& M, const ModulePtr& N, int bound = -1);

struct TorVanish {
  bool vanishes = false;
  bool complete = false;  // false: established only up to `checked_to`
  int checked_to = 0;
  int witness = -1;  // least index with nonzero Tor when vanishes is false
};
TorVanish tor_vanishes_positive(const ModulePtr& M, const ModulePtr& N, int bound = -1);

// Hom(M, R) presented on explicit generators: B's columns are the functional
// representatives inside R^{gens(M)}; the presentation keeps exactly those
// generators so the evaluation pairing stays usable.
struct DualData {
  ModulePtr dual;
  PolyMatrix B;
  std::vector<int> bdegs;
};
DualData dual_module(const ModulePtr& M);

struct BidualityResult {
  bool ker_zero = false;
  bool coker_zero = false;
  bool iso() const { return ker_zero && coker_zero; }
};
// The canonical map M -> Hom(Hom(M,R),R), tested for isomorphy.
BidualityResult biduality(const ModulePtr& M);

// Presentation of span(gens)/span(rels) inside the free module W over S;
// rels must already contain I*W (and whatever denominators apply).
ModulePtr subquotient(const QRingPtr& R, const FreeMod& W, const std::vector<VecPoly>& gens,
                      const std::vector<int>& gdegs, const std::vector<VecPoly>& rels,
                      const std::vector<int>& rdegs);

}  // namespace cmw

#endif

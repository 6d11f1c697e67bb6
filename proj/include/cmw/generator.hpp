#ifndef CMW_GENERATOR_HPP
#define CMW_GENERATOR_HPP

#include "cmw/module.hpp"

namespace cmw {

enum class IdealStyle { monomial, binomial, zero };
const char* ideal_style_name(IdealStyle s);

// Seeded instance generation: a pure function of the parameters. Monomial
// style yields direct sums of shifted cyclic monomial quotients, so all
// associated primes are monomial and the localization oracle applies.
struct GenParams {
  uint64_t seed = 1;
  int vars = 2;  // 1..4
  IdealStyle style = IdealStyle::monomial;
  int max_degree = 2;  // 1..4
  int max_summands = 3;
  int max_ideal_gens = 2;
  int max_shift = 2;
};

QRingPtr random_ring(const GenParams& p, uint64_t salt);
ModulePtr random_module_over(const QRingPtr& R, const GenParams& p, uint64_t salt,
                             unsigned varmask);
// The spec-level generator: builds its own ring, retries until nonzero.
ModulePtr random_module(const GenParams& p);

struct InstancePair {
  QRingPtr ring;
  ModulePtr M, N;
  bool transversal = false;  // M and N built on disjoint variable sets
};
// Instance tuple for campaigns: one ring, two independently seeded modules.
// Over the zero ideal every other instance splits the variables between M
// and N, which forces complete Tor-vanishing and feeds the equality
// statements applicable cases.
InstancePair random_pair(const GenParams& p, uint64_t instance);

}  // namespace cmw

#endif

#include "cmw/generator.hpp"

#include <random>

namespace cmw {

const char* ideal_style_name(IdealStyle s) {
  switch (s) {
    case IdealStyle::monomial: return "monomial";
    case IdealStyle::binomial: return "binomial";
    case IdealStyle::zero: return "zero";
  }
  return "?";
}

namespace {

uint64_t splitmix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

struct Rng {
  std::mt19937_64 e;
  explicit Rng(uint64_t seed) : e(seed) {}
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(e() % static_cast<uint64_t>(n)); }
  bool coin() { return (e() & 1) != 0; }
};

Expo random_monomial(Rng& rng, int degree, unsigned varmask, int nvars) {
  std::vector<int> allowed;
  for (int i = 0; i < nvars; ++i)
    if (varmask & (1u << i)) allowed.push_back(i);
  Expo m;
  for (int k = 0; k < degree; ++k) m.e[allowed[rng.below((int)allowed.size())]]++;
  return m;
}

}  // namespace

QRingPtr random_ring(const GenParams& p, uint64_t salt) {
  if (p.vars < 1 || p.vars > 4) fail_kernel("generator: vars must be in 1..4");
  if (p.max_degree < 1 || p.max_degree > 4) fail_kernel("generator: max degree must be in 1..4");
  Rng rng(splitmix(p.seed * 0x10001 + salt));

  static const char* names[] = {"x", "y", "z", "w"};
  std::vector<std::string> vars(names, names + p.vars);
  RingPtr S = PolyRing::make(Field::rationals(), vars, TermOrder::grevlex);

  std::vector<Poly> igens;
  unsigned all = (1u << p.vars) - 1;
  if (p.style == IdealStyle::monomial) {
    int cnt = rng.below(p.max_ideal_gens + 1);
    for (int k = 0; k < cnt; ++k) {
      int d = 1 + rng.below(p.max_degree);
      igens.push_back(Poly::monomial(S, S->field().one(), random_monomial(rng, d, all, p.vars)));
    }
  } else if (p.style == IdealStyle::binomial) {
    int cnt = rng.below(p.max_ideal_gens + 1);
    for (int k = 0; k < cnt; ++k) {
      int d = 1 + rng.below(p.max_degree);
      Expo a = random_monomial(rng, d, all, p.vars);
      Expo b = random_monomial(rng, d, all, p.vars);
      if (a == b) continue;
      Poly f = Poly::monomial(S, S->field().one(), a) -
               Poly::monomial(S, S->field().one(), b);
      igens.push_back(std::move(f));
    }
  }
  return QRing::make(S, igens);
}

ModulePtr random_module_over(const QRingPtr& R, const GenParams& p, uint64_t salt,
                             unsigned varmask) {
  Rng rng(splitmix(p.seed * 0x7f4a7c15 + salt));
  const RingPtr& S = R->poly_ring();
  const int n = S->nvars();

  for (int attempt = 0; attempt < 16; ++attempt) {
    int s = 1 + rng.below(p.max_summands);
    std::vector<int> shifts;
    std::vector<std::vector<Expo>> ideals;
    int total_cols = 0;
    for (int i = 0; i < s; ++i) {
      shifts.push_back(rng.below(p.max_shift + 1));
      int cnt = rng.below(p.max_ideal_gens + 1);
      std::vector<Expo> J;
      for (int k = 0; k < cnt; ++k) {
        int d = 1 + rng.below(p.max_degree);
        J.push_back(random_monomial(rng, d, varmask, n));
      }
      total_cols += static_cast<int>(J.size());
      ideals.push_back(std::move(J));
    }
    PolyMatrix m = PolyMatrix::zero(s, total_cols);
    int col = 0;
    for (int i = 0; i < s; ++i)
      for (const auto& e : ideals[i]) m.at(i, col++) = Poly::monomial(S, S->field().one(), e);
    ModulePtr M = Module::make(R, shifts, std::move(m));
    if (!M->is_zero()) return M;  // monomial quotients are never zero; defensive
  }
  fail_internal("generator failed to produce a nonzero module");
}

ModulePtr random_module(const GenParams& p) {
  QRingPtr R = random_ring(p, 0xA11CE);
  return random_module_over(R, p, 0xB0B, (1u << p.vars) - 1);
}

InstancePair random_pair(const GenParams& p, uint64_t instance) {
  GenParams q = p;
  q.seed = splitmix(p.seed ^ (instance * 0x9e3779b9ull + 7));
  InstancePair out;
  out.ring = random_ring(q, 1);

  unsigned all = (1u << p.vars) - 1;
  unsigned maskM = all, maskN = all;
  Rng rng(splitmix(q.seed + 1234567));
  if (p.style == IdealStyle::zero && p.vars >= 2 && rng.coin()) {
    int split = 1 + rng.below(p.vars - 1);
    maskM = (1u << split) - 1;
    maskN = all & ~maskM;
    out.transversal = true;
  }
  out.M = random_module_over(out.ring, q, 2, maskM);
  out.N = random_module_over(out.ring, q, 3, maskN);
  return out;
}

}  // namespace cmw

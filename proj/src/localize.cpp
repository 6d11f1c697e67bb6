#include "cmw/localize.hpp"

#include <algorithm>

#include "cmw/invariants.hpp"

namespace cmw {

bool ring_is_monomial(const QRing& R) {
  for (const auto& g : R.defining().g)
    if (g.terms().size() != 1) return false;
  return true;
}

std::optional<MonomialShape> monomial_shape(const Module& M) {
  if (!ring_is_monomial(*M.ring())) return std::nullopt;
  MonomialShape s;
  s.shifts = M.row_degs();
  s.ideals.assign(M.ngens(), {});
  for (int j = 0; j < M.nrels(); ++j) {
    int owner = -1;
    for (int i = 0; i < M.ngens(); ++i) {
      const Poly& e = M.rel().at(i, j);
      if (e.is_zero()) continue;
      if (owner >= 0 || e.terms().size() != 1) return std::nullopt;
      owner = i;
    }
    if (owner >= 0) s.ideals[owner].push_back(M.rel().at(owner, j).lead().m);
  }
  return s;
}

namespace {

// Restriction of a monomial to the T-variables; nullopt when everything in
// its support is inverted (the monomial becomes a unit).
std::optional<Expo> restrict_to(const Expo& m, unsigned tmask, int n,
                                const std::vector<int>& newpos) {
  Expo r;
  bool survives = false;
  for (int i = 0; i < n; ++i) {
    if (!m.e[i]) continue;
    if (tmask & (1u << i)) {
      r.e[newpos[i]] = m.e[i];
      survives = true;
    }
  }
  if (!survives && !m.is_one()) return std::nullopt;
  return r;
}

}  // namespace

LocalInvariants localize(const QRingPtr& R, const MonomialShape& shape, unsigned tmask) {
  const RingPtr& S = R->poly_ring();
  const int n = S->nvars();

  std::vector<std::string> tvars;
  std::vector<int> tweights, newpos(n, -1);
  for (int i = 0; i < n; ++i)
    if (tmask & (1u << i)) {
      newpos[i] = static_cast<int>(tvars.size());
      tvars.push_back(S->vars()[i]);
      tweights.push_back(S->weights()[i]);
    }
  RingPtr ST = PolyRing::make(S->field(), tvars, S->order(), tweights);
  QRingPtr QT = QRing::ambient_of(ST);

  std::vector<Expo> iram;  // defining ideal restricted (monomial by contract)
  for (const auto& g : R->defining().g) {
    CMW_CHECK(g.terms().size() == 1, "localize wants a monomial defining ideal");
    iram.push_back(g.lead().m);
  }

  LocalInvariants out;
  bool first = true;
  for (const auto& J : shape.ideals) {
    // restricted ideal of this summand; a generator turning into a unit
    // kills the localized piece
    bool dead = false;
    std::vector<Poly> gens;
    auto add = [&](const Expo& m) {
      if (dead) return;
      auto r = restrict_to(m, tmask, n, newpos);
      if (!r || r->is_one()) {
        dead = true;
        return;
      }
      gens.push_back(Poly::monomial(ST, ST->field().one(), *r));
    };
    for (const auto& m : J) add(m);
    for (const auto& m : iram) add(m);
    if (dead) continue;

    ModulePtr piece = cyclic_module(QT, gens);
    int d = module_depth(piece);
    int dm = krull_dimension(ideal_gb(ST, gens));
    if (first) {
      out.depth = d;
      out.dim = dm;
      first = false;
    } else {
      out.depth = std::min(out.depth, d);
      out.dim = std::max(out.dim, dm);
    }
    out.nonzero = true;
  }
  return out;
}

std::optional<std::vector<unsigned>> monomial_primes_over(const QRingPtr& R,
                                                          const IdealGB& ideal) {
  const int n = R->poly_ring()->nvars();
  std::vector<Expo> gens;
  for (const auto& g : ideal.g) {
    if (g.terms().size() != 1) return std::nullopt;
    gens.push_back(g.lead().m);
  }
  std::vector<unsigned> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool contains = true;
    for (const auto& m : gens) {
      bool meets = false;
      for (int i = 0; i < n; ++i)
        if (m.e[i] && (mask & (1u << i))) {
          meets = true;
          break;
        }
      if (!meets) {
        contains = false;
        break;
      }
    }
    if (contains) out.push_back(mask);
  }
  return out;
}

}  // namespace cmw

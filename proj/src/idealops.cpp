#include "cmw/idealops.hpp"

#include <algorithm>
#include <bit>

#include "cmw/syzygy.hpp"

namespace cmw {

namespace {
FreeMod line(const RingPtr& ring) { return FreeMod{ring, {0}}; }

std::vector<VecPoly> embed_all(const std::vector<Poly>& ps) {
  std::vector<VecPoly> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(embed_poly(p));
  return out;
}

std::vector<int> degrees_of(const std::vector<Poly>& ps) {
  std::vector<int> out;
  out.reserve(ps.size());
  for (const auto& p : ps) {
    auto d = p.homogeneous_degree();
    if (!d) fail_kernel("inhomogeneous polynomial in ideal operation");
    out.push_back(*d);
  }
  return out;
}
}  // namespace

VecPoly embed_poly(const Poly& p) {
  std::vector<MTerm> ts;
  ts.reserve(p.terms().size());
  for (const auto& t : p.terms()) ts.push_back({t.c, t.m, 0});
  return VecPoly::from_terms(p.ring(), std::move(ts), ModOrder{p.ring().get(), -1});
}

Poly extract_component(const VecPoly& v, int comp) {
  return v.is_zero() ? Poly() : v.component(comp);
}

bool IdealGB::is_unit() const {
  return g.size() == 1 && !g[0].is_zero() && g[0].terms().size() == 1 && g[0].lead().m.is_one();
}

IdealGB ideal_gb(const RingPtr& ring, const std::vector<Poly>& gens, const GBOptions& opt) {
  for (size_t k = 0; k < gens.size(); ++k)
    if (!gens[k].is_zero() && !gens[k].homogeneous_degree())
      fail_kernel("generator #" + std::to_string(k) + " is not homogeneous");
  GBasis gb = module_gb(line(ring), embed_all(gens), -1, opt);
  IdealGB out;
  out.ring = ring;
  for (const auto& v : gb.g) out.g.push_back(extract_component(v, 0));
  return out;
}

Poly poly_nf(const Poly& f, const IdealGB& I) {
  if (f.is_zero() || I.g.empty()) return f;
  if (!f.ring()->same_ring(*I.ring)) fail_kernel("normal form: ring mismatch");
  ModOrder ord{I.ring.get(), -1};
  return extract_component(normal_form(embed_poly(f), embed_all(I.g), ord), 0);
}

bool ideal_contains(const IdealGB& I, const Poly& f) { return poly_nf(f, I).is_zero(); }

bool same_ideal(const IdealGB& a, const IdealGB& b) {
  if (a.g.size() != b.g.size()) return false;
  for (size_t i = 0; i < a.g.size(); ++i)
    if (!(a.g[i] == b.g[i])) return false;
  return true;
}

std::vector<Poly> ideal_quotient(const RingPtr& ring, const std::vector<Poly>& igens,
                                 const Poly& f, const GBOptions& opt) {
  if (f.is_zero()) fail_kernel("ideal quotient by the zero polynomial");
  std::vector<Poly> cols_p;
  cols_p.push_back(f);
  for (const auto& g : igens)
    if (!g.is_zero()) cols_p.push_back(g);
  std::vector<VecPoly> syz = syzygies(line(ring), embed_all(cols_p), degrees_of(cols_p), opt);
  std::vector<Poly> out;
  for (const auto& s : syz) {
    Poly a = s.component(0);
    if (!a.is_zero()) out.push_back(std::move(a));
  }
  return out;
}

IdealGB saturation(const RingPtr& ring, const std::vector<Poly>& igens, const Poly& f,
                   const GBOptions& opt) {
  if (f.is_zero()) fail_kernel("saturation by the zero polynomial");
  IdealGB cur = ideal_gb(ring, igens, opt);
  for (int round = 0; round < 1000; ++round) {
    if (cur.is_unit()) return cur;
    IdealGB next = ideal_gb(ring, ideal_quotient(ring, cur.g, f, opt), opt);
    if (same_ideal(cur, next)) return cur;
    cur = std::move(next);
  }
  fail_internal("saturation did not stabilize");
}

bool radical_membership(const Poly& f, const std::vector<Poly>& igens, const GBOptions& opt) {
  if (f.is_zero()) return true;
  if (!f.homogeneous_degree()) fail_kernel("radical membership wants a homogeneous polynomial");
  return saturation(f.ring(), igens, f, opt).is_unit();
}

std::vector<Poly> ideal_intersection(const RingPtr& ring,
                                     const std::vector<std::vector<Poly>>& ideals,
                                     const GBOptions& opt) {
  if (ideals.empty()) return {Poly::constant(ring, ring->field().one())};
  if (ideals.size() == 1) return ideals[0];
  const int k = static_cast<int>(ideals.size());
  FreeMod target{ring, std::vector<int>(k, 0)};
  ModOrder ord{ring.get(), -1};

  std::vector<VecPoly> cols;
  std::vector<int> degs;
  {
    std::vector<MTerm> ones;
    for (int l = 0; l < k; ++l) ones.push_back({ring->field().one(), Expo{}, l});
    cols.push_back(VecPoly::from_terms(ring, std::move(ones), ord));
    degs.push_back(0);
  }
  for (int l = 0; l < k; ++l) {
    for (const auto& g : ideals[l]) {
      if (g.is_zero()) continue;
      std::vector<MTerm> ts;
      for (const auto& t : g.terms()) ts.push_back({t.c, t.m, l});
      cols.push_back(VecPoly::from_terms(ring, std::move(ts), ord));
      auto d = g.homogeneous_degree();
      if (!d) fail_kernel("inhomogeneous polynomial in ideal intersection");
      degs.push_back(*d);
    }
  }

  std::vector<VecPoly> syz = syzygies(target, cols, degs, opt);
  std::vector<Poly> out;
  for (const auto& s : syz) {
    Poly a = s.component(0);
    if (!a.is_zero()) out.push_back(std::move(a));
  }
  return out;
}

int krull_dimension(const IdealGB& I) {
  const int n = I.ring->nvars();
  std::vector<Expo> leads;
  for (const auto& g : I.g)
    if (!g.is_zero()) leads.push_back(g.lead().m);

  int best = -1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (const auto& m : leads) {
      bool escapes = false;  // some variable outside mask occurs in m
      for (int i = 0; i < n; ++i)
        if (m.e[i] && !(mask & (1u << i))) {
          escapes = true;
          break;
        }
      if (!escapes) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, std::popcount(mask));
  }
  return best;
}

int std_monomial_count(const GBasis& gb, int d) {
  const auto& ring = gb.target.ring;
  std::vector<std::vector<Expo>> leads(gb.target.rank());
  for (const auto& g : gb.g) leads[g.lead().comp].push_back(g.lead().m);

  int count = 0;
  for (int t = 0; t < gb.target.rank(); ++t) {
    int md = d - gb.target.shifts[t];
    if (md < 0) continue;
    for (const auto& m : ring->monomials_of_degree(md)) {
      bool divisible = false;
      for (const auto& l : leads[t])
        if (PolyRing::divides(l, m)) {
          divisible = true;
          break;
        }
      if (!divisible) ++count;
    }
  }
  return count;
}

}  // namespace cmw

#include "cmw/groebner.hpp"

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cmw {

namespace {

struct Pair {
  int i, j;        // basis indices, i < j, same leading component
  Expo lcm;
  int deg;         // weighted degree of the S-poly (shift included)

  bool operator<(const Pair& o) const {
    if (deg != o.deg) return deg < o.deg;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

VecPoly s_poly(const VecPoly& f, const VecPoly& g, const ModOrder& ord) {
  const auto& lf = f.lead();
  const auto& lg = g.lead();
  Expo l = PolyRing::lcm(lf.m, lg.m);
  const Field& F = f.ring()->field();
  VecPoly a = f.mul_term(F.inv(lf.c), PolyRing::quotient(l, lf.m));
  VecPoly b = g.mul_term(F.inv(lg.c), PolyRing::quotient(l, lg.m));
  return a.sub(b, ord);
}

int pair_degree(const FreeMod& target, const VecPoly& f, const VecPoly& g, const Expo& l) {
  return target.ring->wdeg(l) + target.shifts.at(f.lead().comp);
}

// Gebauer-Moller style pair update. The product criterion is applied only in
// the ideal case (rank-1 target, no split): it is not valid for modules.
void update_pairs(const FreeMod& target, const ModOrder& ord, std::vector<VecPoly>& basis,
                  std::vector<Pair>& pairs, const VecPoly& h, bool ideal_case) {
  const int t = static_cast<int>(basis.size());
  const auto& lh = h.lead();

  // Drop old pairs strictly dominated by h.
  std::vector<Pair> kept;
  kept.reserve(pairs.size());
  for (const auto& p : pairs) {
    if (basis[p.i].lead().comp == lh.comp && PolyRing::divides(lh.m, p.lcm)) {
      Expo lih = PolyRing::lcm(basis[p.i].lead().m, lh.m);
      Expo ljh = PolyRing::lcm(basis[p.j].lead().m, lh.m);
      if (!(lih == p.lcm) && !(ljh == p.lcm)) continue;
    }
    kept.push_back(p);
  }
  pairs = std::move(kept);

  // Candidate pairs with h, minimized among themselves.
  std::vector<Pair> cand;
  for (int k = 0; k < t; ++k) {
    if (basis[k].lead().comp != lh.comp) continue;
    Expo l = PolyRing::lcm(basis[k].lead().m, lh.m);
    cand.push_back({k, t, l, pair_degree(target, basis[k], h, l)});
  }
  std::stable_sort(cand.begin(), cand.end());
  std::vector<Pair> minimal;
  for (const auto& p : cand) {
    bool dominated = false;
    for (const auto& q : minimal) {
      if (PolyRing::divides(q.lcm, p.lcm)) {  // covers the equal-lcm case
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    if (ideal_case && PolyRing::coprime(basis[p.i].lead().m, lh.m)) continue;
    minimal.push_back(p);
  }

  basis.push_back(h);
  pairs.insert(pairs.end(), minimal.begin(), minimal.end());
}

std::vector<VecPoly> interreduce(std::vector<VecPoly> g, const ModOrder& ord) {
  // 1. drop elements whose lead is divisible by another's lead
  std::vector<char> dead(g.size(), 0);
  for (size_t i = 0; i < g.size(); ++i) {
    for (size_t j = 0; j < g.size(); ++j) {
      if (i == j || dead[j] || dead[i]) continue;
      const auto& li = g[i].lead();
      const auto& lj = g[j].lead();
      if (li.comp != lj.comp) continue;
      if (PolyRing::divides(lj.m, li.m)) {
        // equal leads: keep the smaller index
        if (li.m == lj.m && i < j) continue;
        dead[i] = 1;
        break;
      }
    }
  }
  std::vector<VecPoly> live;
  for (size_t i = 0; i < g.size(); ++i)
    if (!dead[i]) live.push_back(std::move(g[i]));

  // 2. tail-reduce each against the others (leads are now stable)
  std::vector<VecPoly> out;
  out.reserve(live.size());
  for (size_t i = 0; i < live.size(); ++i) {
    std::vector<VecPoly> others;
    others.reserve(live.size() - 1);
    for (size_t j = 0; j < live.size(); ++j)
      if (j != i) others.push_back(live[j]);
    VecPoly r = normal_form(live[i], others, ord);
    CMW_CHECK(!r.is_zero(), "interreduce killed a basis element");
    out.push_back(r.monic());
  }
  std::sort(out.begin(), out.end(),
            [&](const VecPoly& a, const VecPoly& b) { return ord.cmp(a.lead(), b.lead()) < 0; });
  return out;
}

std::vector<VecPoly> prepare_gens(const FreeMod& target, const std::vector<VecPoly>& gens,
                                  const ModOrder& ord) {
  std::vector<VecPoly> out;
  for (size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].is_zero()) continue;
    VecPoly v = VecPoly::from_terms(target.ring, gens[k].terms(), ord);
    if (v.is_zero()) continue;
    if (!v.homogeneous_degree(target))
      fail_kernel("generator #" + std::to_string(k) + " is not homogeneous");
    out.push_back(v.monic());
  }
  return out;
}

// Plain Buchberger: every pair is processed once, no pruning criteria.
// Kept as the correctness reference for the fast engine.
std::vector<VecPoly> buchberger_reference(const FreeMod& target, std::vector<VecPoly> gens,
                                          const ModOrder& ord) {
  std::vector<VecPoly> basis = std::move(gens);
  std::vector<Pair> pairs;
  auto add_pairs_for = [&](int t) {
    for (int k = 0; k < t; ++k) {
      if (basis[k].lead().comp != basis[t].lead().comp) continue;
      Expo l = PolyRing::lcm(basis[k].lead().m, basis[t].lead().m);
      pairs.push_back({k, t, l, pair_degree(target, basis[k], basis[t], l)});
    }
  };
  for (int t = 0; t < static_cast<int>(basis.size()); ++t) add_pairs_for(t);

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end());
    Pair p = *it;
    pairs.erase(it);
    VecPoly r = normal_form(s_poly(basis[p.i], basis[p.j], ord), basis, ord);
    if (!r.is_zero()) {
      basis.push_back(r.monic());
      add_pairs_for(static_cast<int>(basis.size()) - 1);
    }
  }
  return basis;
}

// Degree-batched Buchberger with Gebauer-Moller pruning. With homogeneous
// input, pairs created while processing degree d all have degree > d, so a
// whole degree batch can be reduced against a frozen snapshot in parallel;
// remainders are then absorbed serially in deterministic order.
std::vector<VecPoly> buchberger_fast(const FreeMod& target, std::vector<VecPoly> gens,
                                     const ModOrder& ord, bool parallel) {
  const bool ideal_case = target.rank() == 1 && ord.split < 0;
  std::vector<VecPoly> basis;
  std::vector<Pair> pairs;
  for (auto& g : gens) {
    VecPoly r = normal_form(g, basis, ord);
    if (!r.is_zero()) update_pairs(target, ord, basis, pairs, r.monic(), ideal_case);
  }

  while (!pairs.empty()) {
    int d = pairs.front().deg;
    for (const auto& p : pairs) d = std::min(d, p.deg);
    std::vector<Pair> batch;
    std::vector<Pair> rest;
    for (const auto& p : pairs)
      (p.deg == d ? batch : rest).push_back(p);
    std::sort(batch.begin(), batch.end());
    pairs = std::move(rest);

    std::vector<VecPoly> reduced(batch.size());
    const std::vector<VecPoly> snapshot = basis;  // frozen view for the batch
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel && batch.size() > 1)
#endif
    for (long k = 0; k < static_cast<long>(batch.size()); ++k) {
      const Pair& p = batch[k];
      reduced[k] = normal_form(s_poly(snapshot[p.i], snapshot[p.j], ord), snapshot, ord);
    }
    for (size_t k = 0; k < batch.size(); ++k) {
      if (reduced[k].is_zero()) continue;
      VecPoly r = normal_form(reduced[k], basis, ord);  // catch up with batch additions
      if (!r.is_zero()) update_pairs(target, ord, basis, pairs, r.monic(), ideal_case);
    }
  }
  return basis;
}

}  // namespace

VecPoly normal_form(const VecPoly& f, const std::vector<VecPoly>& divisors, const ModOrder& ord) {
  if (f.is_zero() || divisors.empty()) return f;
  const Field& F = f.ring()->field();
  VecPoly h = f;
  std::vector<MTerm> remainder;
  while (!h.is_zero()) {
    const MTerm& lt = h.lead();
    bool hit = false;
    for (const auto& g : divisors) {
      const MTerm& lg = g.lead();
      if (lg.comp != lt.comp || !PolyRing::divides(lg.m, lt.m)) continue;
      Coeff c = F.div(lt.c, lg.c);
      h = h.sub(g.mul_term(c, PolyRing::quotient(lt.m, lg.m)), ord);
      hit = true;
      break;
    }
    if (!hit) {
      remainder.push_back(lt);
      h = h.drop_lead();
    }
  }
  return VecPoly::from_terms(f.ring(), std::move(remainder), ord);
}

bool GBasis::same_basis(const GBasis& o) const {
  if (g.size() != o.g.size()) return false;
  for (size_t i = 0; i < g.size(); ++i)
    if (!(g[i] == o.g[i])) return false;
  return true;
}

GBasis module_gb(const FreeMod& target, const std::vector<VecPoly>& gens, int split,
                 const GBOptions& opt) {
  GBasis out;
  out.target = target;
  out.ord = ModOrder{target.ring.get(), split};
  std::vector<VecPoly> prepared = prepare_gens(target, gens, out.ord);
  std::vector<VecPoly> basis = (opt.engine == GBOptions::Engine::reference)
                                   ? buchberger_reference(target, std::move(prepared), out.ord)
                                   : buchberger_fast(target, std::move(prepared), out.ord, opt.parallel);
  out.g = interreduce(std::move(basis), out.ord);
  return out;
}

bool in_span(const VecPoly& v, const GBasis& gb) { return normal_form(v, gb).is_zero(); }

VecPoly apply_columns(const std::vector<VecPoly>& cols, const VecPoly& v, const ModOrder& ord) {
  VecPoly acc(v.ring());
  for (const auto& t : v.terms()) {
    CMW_CHECK(t.comp < static_cast<int>(cols.size()), "apply_columns: component out of range");
    acc = acc.add(cols[t.comp].mul_term(t.c, t.m), ord);
  }
  return acc;
}

}  // namespace cmw

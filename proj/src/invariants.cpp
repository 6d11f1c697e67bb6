#include "cmw/invariants.hpp"

#include <algorithm>
#include <map>

namespace cmw {

namespace {
int effective_bound(const QRingPtr& R, int bound) {
  return bound > 0 ? bound : default_bound(R);
}
}  // namespace

int module_depth(const ModulePtr& M) {
  require_nonzero(*M, "depth");
  const int n = M->ring()->nvars();
  PdResult pd = projective_dimension(M, /*over_ambient=*/true, n + 1);
  CMW_CHECK(pd.exact, "ambient resolution must terminate");
  return n - pd.value;
}

int depth_ext_route(const ModulePtr& M, int bound) {
  require_nonzero(*M, "depth");
  const QRingPtr& R = M->ring();
  const int n = R->nvars();
  bound = std::max(effective_bound(R, bound), n + 2);
  ModulePtr k = residue_field(R);
  for (int i = 0; i <= n; ++i)
    if (!ext_module(i, k, M, bound).vanishes) return i;
  fail_internal("no nonvanishing Ext^i(k,M) found up to the variable count");
}

int module_dimension(const ModulePtr& M) {
  require_nonzero(*M, "dimension");
  return krull_dimension(M->annihilator_ideal());
}

int ring_depth(const QRingPtr& R) {
  int cached = R->cached_depth();
  if (cached != QRing::kDepthUnset) return cached;
  int d = module_depth(ring_as_module(R));
  R->set_depth(d);
  return d;
}

int grade_mn(const ModulePtr& M, const ModulePtr& N, int bound) {
  require_same_ring(*M, *N);
  require_nonzero(*M, "grade");
  require_nonzero(*N, "grade");
  const QRingPtr& R = M->ring();
  const int top = R->dim();
  bound = std::max(effective_bound(R, bound), top + 2);
  for (int i = 0; i <= top; ++i)
    if (!ext_module(i, M, N, bound).vanishes) return i;
  fail_internal("grade(M,N) exceeded dim R; graded supports must meet");
}

namespace {

// z acts as a nonzerodivisor on coker(relgb) iff the pullback of the
// relation module under multiplication by z is no bigger than the module.
bool is_regular_on(const Poly& z, const ModulePtr& cur) {
  const RingPtr& S = cur->ring()->poly_ring();
  ModOrder plain{S.get(), -1};
  const GBasis& U = cur->relation_gb();
  const int r = cur->ngens();
  int dz = *z.homogeneous_degree();

  std::vector<int> w1(cur->row_degs());
  for (int& d : w1) d += dz;
  FreeMod W1{S, w1};
  std::vector<VecPoly> zcols;
  for (int t = 0; t < r; ++t) zcols.push_back(VecPoly::embed(z, t, plain));

  std::vector<int> udegs;
  for (const auto& u : U.g) udegs.push_back(*u.homogeneous_degree(U.target));
  std::vector<VecPoly> pre = preimage(W1, U.target, zcols, U.g, udegs);
  for (const auto& p : pre)
    if (!in_span(p, U)) return false;
  return true;
}

ModulePtr quotient_by(const Poly& z, const ModulePtr& cur) {
  PolyMatrix m = PolyMatrix::zero(cur->ngens(), cur->nrels() + cur->ngens());
  for (int i = 0; i < cur->ngens(); ++i)
    for (int j = 0; j < cur->nrels(); ++j) m.at(i, j) = cur->rel().at(i, j);
  for (int t = 0; t < cur->ngens(); ++t) m.at(t, cur->nrels() + t) = z;
  return Module::make(cur->ring(), cur->row_degs(), std::move(m))->minimal();
}

}  // namespace

int grade_oracle(const ModulePtr& M, const ModulePtr& N) {
  require_same_ring(*M, *N);
  require_nonzero(*M, "grade");
  require_nonzero(*N, "grade");
  const QRingPtr& R = M->ring();
  const RingPtr& S = R->poly_ring();
  const Field& F = S->field();

  // homogeneous generators of ann M that are nonzero in R
  std::vector<Poly> jgens;
  for (const auto& g : M->annihilator_ideal().g) {
    Poly gn = R->nf(g);
    if (!gn.is_zero()) jgens.push_back(std::move(gn));
  }
  if (jgens.empty()) return 0;

  int lo = *jgens.front().homogeneous_degree(), hi = lo;
  for (const auto& g : jgens) {
    lo = std::min(lo, *g.homogeneous_degree());
    hi = std::max(hi, *g.homogeneous_degree());
  }
  int wmax = 1;
  for (int w : S->weights()) wmax = std::max(wmax, w);
  hi += 2 * wmax;

  ModulePtr cur = N->minimal();
  int length = 0;
  for (int round = 0; round <= R->dim(); ++round) {
    Poly found;
    for (int d = lo; d <= hi && found.is_zero(); ++d) {
      // spanning set of (ann M)_d
      std::vector<Poly> span;
      for (const auto& g : jgens) {
        int gd = *g.homogeneous_degree();
        if (gd > d) continue;
        for (const auto& m : S->monomials_of_degree(d - gd)) {
          Poly cand = R->nf(g.mul_term(F.one(), m));
          if (!cand.is_zero()) span.push_back(std::move(cand));
        }
      }
      if (span.empty()) continue;
      for (const auto& cand : span) {
        if (is_regular_on(cand, cur)) {
          found = cand;
          break;
        }
      }
      if (!found.is_zero()) break;
      // moment-curve combinations catch regular elements that no single
      // spanning element provides (graded prime avoidance)
      const int budget = 4 * static_cast<int>(span.size()) + 16;
      for (int lam = 2; lam < 2 + budget && found.is_zero(); ++lam) {
        Poly z(S);
        Coeff c = F.one();
        for (const auto& v : span) {
          z = z + v.scale(c);
          c = F.mul(c, F.from_int(lam));
        }
        z = R->nf(z);
        if (!z.is_zero() && is_regular_on(z, cur)) found = z;
      }
    }
    if (found.is_zero()) break;
    ++length;
    cur = quotient_by(found, cur);
    CMW_CHECK(!cur->is_zero(), "regular quotient collapsed to zero");
  }
  return length;
}

int imperfection(const ModulePtr& M, const ModulePtr& N, int bound) {
  return module_depth(N) - module_depth(M) - grade_mn(M, N, bound);
}

int cm_defect(const ModulePtr& M) { return module_dimension(M) - module_depth(M); }

bool is_cohen_macaulay(const ModulePtr& M) { return cm_defect(M) == 0; }

bool is_maximal_cm(const ModulePtr& M) {
  int d = module_depth(M);
  return d == module_dimension(M) && d == M->ring()->dim();
}

CertBool is_perfect(const ModulePtr& M, int bound) {
  return is_n_perfect(M, ring_as_module(M->ring()), bound);
}

CertBool is_n_perfect(const ModulePtr& M, const ModulePtr& N, int bound) {
  require_nonzero(*M, "perfection");
  bound = effective_bound(M->ring(), bound);
  PdResult pd = projective_dimension(M, false, bound);
  CertBool out;
  if (!pd.exact) return out;  // not established
  out.established = true;
  out.value = (pd.value == grade_mn(M, N, bound));
  return out;
}

bool satisfies_serre(const ModulePtr& M, int k) {
  require_nonzero(*M, "serre");
  if (k < 0) fail_kernel("serre: negative index");
  ModulePtr Ms = lift_to_ambient(M)->minimal();
  const QRingPtr& S0 = Ms->ring();
  const int n = S0->nvars();
  const int c = n - module_dimension(Ms);
  ModulePtr Sfree = ring_as_module(S0);
  for (int i = c + 1; i <= n; ++i) {
    DerivedResult E = ext_module(i, Ms, Sfree, n + 1);
    if (E.vanishes) continue;
    int codim = n - module_dimension(E.value);
    if (codim < i + k) return false;
  }
  return true;
}

std::string CertifiedValue::str() const {
  switch (cert) {
    case Cert::proved: return std::to_string(value) + " (proved)";
    case Cert::bounded:
      return std::to_string(value) + " (certified up to bound " + std::to_string(bound) + ")";
    case Cert::unknown: return "unknown";
  }
  return "?";
}

CertifiedValue gdim_zero(const ModulePtr& M, int bound) {
  require_nonzero(*M, "gdim_zero");
  const QRingPtr& R = M->ring();
  bound = effective_bound(R, bound);
  CertifiedValue out;
  out.bound = bound;

  PdResult pd = projective_dimension(M, false, bound);
  if (pd.exact) {
    out.value = pd.value == 0 ? 1 : 0;
    out.cert = CertifiedValue::Cert::proved;
    return out;
  }

  ModulePtr Rfree = ring_as_module(R);
  for (int i = 1; i <= bound; ++i)
    if (!ext_module(i, M, Rfree, bound + 1).vanishes) {
      out.value = 0;
      out.cert = CertifiedValue::Cert::proved;
      return out;
    }
  DualData dual = dual_module(M);
  for (int i = 1; i <= bound; ++i)
    if (!ext_module(i, dual.dual, Rfree, bound + 1).vanishes) {
      out.value = 0;
      out.cert = CertifiedValue::Cert::proved;
      return out;
    }
  if (!biduality(M).iso()) {
    out.value = 0;
    out.cert = CertifiedValue::Cert::proved;
    return out;
  }
  out.value = 1;
  out.cert = CertifiedValue::Cert::bounded;
  return out;
}

CertifiedValue gdim(const ModulePtr& M, int bound) {
  require_nonzero(*M, "gdim");
  const QRingPtr& R = M->ring();
  bound = effective_bound(R, bound);
  CertifiedValue out;
  out.bound = bound;

  PdResult pd = projective_dimension(M, false, bound);
  if (pd.exact) {
    out.value = pd.value;
    out.cert = CertifiedValue::Cert::proved;
    return out;
  }

  ModulePtr Rfree = ring_as_module(R);
  int sup = -1;
  for (int t = 0; t <= bound; ++t)
    if (!ext_module(t, M, Rfree, bound + 1).vanishes) sup = t;
  int target = ring_depth(R) - module_depth(M);
  if (sup >= 0 && sup == target) {
    out.value = sup;
    out.cert = CertifiedValue::Cert::bounded;
  } else {
    out.value = std::max(sup, 0);
    out.cert = CertifiedValue::Cert::unknown;
  }
  return out;
}

ModulePtr canonical_module(const QRingPtr& R) {
  static std::mutex mu;
  static std::map<uint64_t, ModulePtr> cache;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(R->fingerprint());
    if (it != cache.end()) return it->second;
  }

  ModulePtr RM = ring_as_module(R);
  if (ring_depth(R) != R->dim())
    fail_kernel("canonical module: the ring is not Cohen-Macaulay");
  const int n = R->nvars();
  const int c = n - R->dim();

  ModulePtr RS = lift_to_ambient(RM)->minimal();
  const QRingPtr& S0 = RS->ring();
  DerivedResult E = ext_module(c, RS, ring_as_module(S0), n + 1);
  CMW_CHECK(!E.vanishes, "canonical module of a CM ring cannot vanish");

  // degree normalization: least generator degree becomes 0
  ModulePtr K_S = E.value->minimal();
  int m0 = *std::min_element(K_S->row_degs().begin(), K_S->row_degs().end());
  K_S = shift_module(K_S, -m0);

  // K is an R-module: the defining ideal annihilates it (checked), so the
  // same presentation works over R
  const GBasis& kgb = Module::make(S0, K_S->row_degs(), K_S->rel(), K_S->col_degs())->relation_gb();
  ModOrder plain{S0->poly_ring().get(), -1};
  for (const auto& g : R->defining().g)
    for (int t = 0; t < K_S->ngens(); ++t)
      CMW_CHECK(in_span(VecPoly::embed(g, t, plain), kgb),
                "canonical module is not annihilated by the defining ideal");

  ModulePtr K = Module::make(R, K_S->row_degs(), K_S->rel(), K_S->col_degs())->minimal();

  // contract: full support and maximal Cohen-Macaulayness
  for (const auto& g : K->annihilator_ideal().g)
    CMW_CHECK(radical_membership(g, R->defining().g),
              "canonical module does not have full support");
  int dK = module_depth(K);
  CMW_CHECK(dK == module_dimension(K) && dK == R->dim(), "canonical module is not maximal CM");

  std::lock_guard<std::mutex> lk(mu);
  cache.emplace(R->fingerprint(), K);
  return cache[R->fingerprint()];
}

InvariantReport invariant_report(const ModulePtr& M, const ModulePtr& N, int bound,
                                 const std::vector<int>& serre_ks) {
  require_nonzero(*M, "invariants");
  const QRingPtr& R = M->ring();
  bound = effective_bound(R, bound);

  InvariantReport rep;
  rep.depth = module_depth(M);
  rep.dim = module_dimension(M);
  rep.cmd = rep.dim - rep.depth;
  rep.pd = projective_dimension(M, false, bound);
  rep.is_cm = rep.cmd == 0;
  rep.is_max_cm = rep.is_cm && rep.depth == R->dim();
  for (int k : serre_ks) rep.serre[k] = satisfies_serre(M, k);
  rep.gdim = gdim(M, bound);
  rep.perfect = is_perfect(M, bound);
  if (N) {
    require_nonzero(*N, "invariants");
    rep.with_n = true;
    rep.grade_vs = grade_mn(M, N, bound);
    rep.imp_vs = module_depth(N) - module_depth(M) - rep.grade_vs;
    rep.n_perfect = is_n_perfect(M, N, bound);
  }
  return rep;
}

}  // namespace cmw

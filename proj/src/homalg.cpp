#include "cmw/homalg.hpp"

#include <algorithm>

namespace cmw {

namespace {

ModulePtr zero_module(const QRingPtr& R) {
  return Module::make(R, {}, PolyMatrix::zero(0, 0), std::vector<int>{}, true);
}

// Presentation data of N shared by all Hom/tensor ambients.
struct NEnv {
  ModulePtr N;
  int g0 = 0;
  std::vector<int> gdeg;
  std::vector<VecPoly> ucols;  // relation columns + I block inside G0
  std::vector<int> udegs;

  explicit NEnv(const ModulePtr& n) : N(n->minimal()) {
    g0 = N->ngens();
    gdeg = N->row_degs();
    ucols = N->rel_cols_aug(&udegs);
  }
};

struct Ambient {
  FreeMod W;                    // rank = blocks * g0, component (j,t) = j*g0 + t
  std::vector<VecPoly> urels;   // block-diagonal copies of env.ucols
  std::vector<int> urel_degs;
};

// blocks[j] are the degree shifts of F_i; sign = -1 for Hom (contravariant),
// +1 for tensor.
Ambient make_ambient(const NEnv& env, const std::vector<int>& blocks, int sign) {
  Ambient a;
  const RingPtr& S = env.N->ring()->poly_ring();
  std::vector<int> shifts(blocks.size() * env.g0);
  for (size_t j = 0; j < blocks.size(); ++j)
    for (int t = 0; t < env.g0; ++t) shifts[j * env.g0 + t] = env.gdeg[t] + sign * blocks[j];
  a.W = FreeMod{S, std::move(shifts)};
  ModOrder plain{S.get(), -1};
  for (size_t j = 0; j < blocks.size(); ++j) {
    for (size_t u = 0; u < env.ucols.size(); ++u) {
      a.urels.push_back(env.ucols[u].lift_components(static_cast<int>(j) * env.g0));
      a.urel_degs.push_back(env.udegs[u] + sign * blocks[j]);
    }
  }
  return a;
}

std::vector<VecPoly> basis_cols(const FreeMod& W) {
  std::vector<VecPoly> out;
  for (int k = 0; k < W.rank(); ++k) out.push_back(VecPoly::unit(W.ring, k));
  return out;
}

// Hom-dual of the differential d (rows x cols over F-ranks): maps
// Hom(F_prev, N) -> Hom(F_next, N); source blocks indexed by d's rows.
// Column for source basis (j, t): sum over j'' of d[j][j''] e_{(j'', t)}.
std::vector<VecPoly> dual_map_cols(const NEnv& env, const PolyMatrix& d) {
  const RingPtr& S = env.N->ring()->poly_ring();
  ModOrder plain{S.get(), -1};
  std::vector<VecPoly> cols(size_t(d.rows) * env.g0);
  for (int j = 0; j < d.rows; ++j)
    for (int t = 0; t < env.g0; ++t) {
      std::vector<MTerm> ts;
      for (int jj = 0; jj < d.cols; ++jj)
        for (const auto& tm : d.at(j, jj).terms()) ts.push_back({tm.c, tm.m, jj * env.g0 + t});
      cols[size_t(j) * env.g0 + t] = VecPoly::from_terms(S, std::move(ts), plain);
    }
  return cols;
}

// Tensor image of the differential d: maps F_next (x) N -> F_prev (x) N;
// source blocks indexed by d's columns.
std::vector<VecPoly> tensor_map_cols(const NEnv& env, const PolyMatrix& d) {
  const RingPtr& S = env.N->ring()->poly_ring();
  ModOrder plain{S.get(), -1};
  std::vector<VecPoly> cols(size_t(d.cols) * env.g0);
  for (int j = 0; j < d.cols; ++j)
    for (int t = 0; t < env.g0; ++t) {
      std::vector<MTerm> ts;
      for (int jp = 0; jp < d.rows; ++jp)
        for (const auto& tm : d.at(jp, j).terms()) ts.push_back({tm.c, tm.m, jp * env.g0 + t});
      cols[size_t(j) * env.g0 + t] = VecPoly::from_terms(S, std::move(ts), plain);
    }
  return cols;
}

std::vector<int> degrees_in(const FreeMod& W, const std::vector<VecPoly>& cols,
                            const char* who) {
  std::vector<int> out;
  out.reserve(cols.size());
  for (const auto& c : cols) {
    auto d = c.homogeneous_degree(W);
    if (!d) fail_internal(std::string(who) + ": inhomogeneous column");
    out.push_back(*d);
  }
  return out;
}

int effective_bound(const ModulePtr& M, int bound) {
  return bound > 0 ? bound : default_bound(M->ring());
}

}  // namespace

ModulePtr subquotient(const QRingPtr& R, const FreeMod& W, const std::vector<VecPoly>& gens,
                      const std::vector<int>& gdegs, const std::vector<VecPoly>& rels,
                      const std::vector<int>& rdegs) {
  std::vector<VecPoly> cols = gens;
  std::vector<int> degs = gdegs;
  cols.insert(cols.end(), rels.begin(), rels.end());
  degs.insert(degs.end(), rdegs.begin(), rdegs.end());

  std::vector<VecPoly> syz = syzygies(W, cols, degs);
  const int s = static_cast<int>(gens.size());
  ModOrder plain{W.ring.get(), -1};
  std::vector<VecPoly> relcols;
  for (const auto& z : syz) {
    std::vector<MTerm> ts;
    for (const auto& t : z.terms())
      if (t.comp < s) ts.push_back(t);
    VecPoly v = VecPoly::from_terms(W.ring, std::move(ts), plain);
    if (!v.is_zero()) relcols.push_back(std::move(v));
  }
  return Module::make(R, gdegs, matrix_from_cols(W.ring, s, relcols));
}

namespace {

DerivedResult finish(const char* functor, int i, ModulePtr value) {
  DerivedResult r;
  r.functor = functor;
  r.index = i;
  r.value = value->minimal();
  r.vanishes = r.value->is_zero();
  return r;
}

// Shares the resolution access pattern of ext/tor: resolves M to the bound,
// enforces the beyond-truncation error, reports a definitive zero when the
// chain terminated below i.
struct ResView {
  ResolutionPtr res;
  bool definite_zero = false;
};

ResView resolution_for(int i, const ModulePtr& M, int bound, const char* who) {
  if (i < 0) fail_kernel(std::string(who) + ": negative index");
  ResView v;
  v.res = resolve(M, /*over_ambient=*/false, bound);
  if (v.res->terminated) {
    if (i > v.res->length()) v.definite_zero = true;
  } else if (i + 1 > v.res->length()) {
    fail_kernel(std::string(who) + "^" + std::to_string(i) +
                " is unknown beyond the truncation bound " + std::to_string(v.res->length()));
  }
  return v;
}

}  // namespace

DerivedResult ext_module(int i, const ModulePtr& M, const ModulePtr& N, int bound) {
  require_same_ring(*M, *N);
  const QRingPtr& R = M->ring();
  bound = effective_bound(M, bound);
  ResView v = resolution_for(i, M, bound, "Ext");
  if (v.definite_zero) return finish("ext", i, zero_module(R));
  const Resolution& res = *v.res;
  NEnv env(N);
  if (res.rank(i) == 0 || env.g0 == 0) return finish("ext", i, zero_module(R));

  Ambient Wi = make_ambient(env, res.shifts[i], -1);

  // generators: preimage of U_{i+1} under the dual of d_{i+1}
  std::vector<VecPoly> gens;
  if (i < res.length()) {
    Ambient Wn = make_ambient(env, res.shifts[i + 1], -1);
    std::vector<VecPoly> dcols = dual_map_cols(env, res.diff[i]);
    gens = preimage(Wi.W, Wn.W, dcols, Wn.urels, Wn.urel_degs);
  } else {
    gens = basis_cols(Wi.W);  // terminated chain: the dual of 0 is everything
  }

  // relations: U_i plus the image of the previous dual map
  std::vector<VecPoly> rels = Wi.urels;
  std::vector<int> rdegs = Wi.urel_degs;
  if (i >= 1) {
    std::vector<VecPoly> prev = dual_map_cols(env, res.diff[i - 1]);
    // columns of the previous dual map are indexed by W_{i-1} basis vectors
    Ambient Wp = make_ambient(env, res.shifts[i - 1], -1);
    for (size_t k = 0; k < prev.size(); ++k) {
      if (prev[k].is_zero()) continue;
      rels.push_back(prev[k]);
      rdegs.push_back(Wp.W.shifts[k]);
    }
  }

  std::vector<VecPoly> gent;
  std::vector<int> gdegs;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    gdegs.push_back(*g.homogeneous_degree(Wi.W));
    gent.push_back(std::move(g));
  }
  return finish("ext", i, subquotient(R, Wi.W, gent, gdegs, rels, rdegs));
}

DerivedResult tor_module(int i, const ModulePtr& M, const ModulePtr& N, int bound) {
  require_same_ring(*M, *N);
  const QRingPtr& R = M->ring();
  bound = effective_bound(M, bound);
  ResView v = resolution_for(i, M, bound, "Tor");
  if (v.definite_zero) return finish("tor", i, zero_module(R));
  const Resolution& res = *v.res;
  NEnv env(N);
  if (res.rank(i) == 0 || env.g0 == 0) return finish("tor", i, zero_module(R));

  Ambient Wi = make_ambient(env, res.shifts[i], +1);

  // generators: kernel of d_i (x) id, or everything at homological degree 0
  std::vector<VecPoly> gens;
  if (i == 0) {
    gens = basis_cols(Wi.W);
  } else {
    Ambient Wp = make_ambient(env, res.shifts[i - 1], +1);
    std::vector<VecPoly> tcols = tensor_map_cols(env, res.diff[i - 1]);
    gens = preimage(Wi.W, Wp.W, tcols, Wp.urels, Wp.urel_degs);
  }

  // relations: U_i plus the image of d_{i+1} (x) id
  std::vector<VecPoly> rels = Wi.urels;
  std::vector<int> rdegs = Wi.urel_degs;
  if (i < res.length()) {
    Ambient Wn = make_ambient(env, res.shifts[i + 1], +1);
    std::vector<VecPoly> next = tensor_map_cols(env, res.diff[i]);
    for (size_t k = 0; k < next.size(); ++k) {
      if (next[k].is_zero()) continue;
      rels.push_back(next[k]);
      rdegs.push_back(Wn.W.shifts[k]);
    }
  }

  std::vector<VecPoly> gent;
  std::vector<int> gdegs;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    gdegs.push_back(*g.homogeneous_degree(Wi.W));
    gent.push_back(std::move(g));
  }
  return finish("tor", i, subquotient(R, Wi.W, gent, gdegs, rels, rdegs));
}

TorVanish tor_vanishes_positive(const ModulePtr& M, const ModulePtr& N, int bound) {
  require_same_ring(*M, *N);
  bound = effective_bound(M, bound);
  TorVanish out;

  PdResult pm = projective_dimension(M, false, bound);
  PdResult pn = pm.exact ? pm : projective_dimension(N, false, bound);
  const ModulePtr& first = pm.exact ? M : (pn.exact ? N : M);
  const ModulePtr& second = pm.exact ? N : (pn.exact ? M : N);
  bool complete = pm.exact || pn.exact;
  int top = complete ? (pm.exact ? pm.value : pn.value) : bound - 1;

  for (int i = 1; i <= top; ++i) {
    DerivedResult t = tor_module(i, first, second, bound);
    if (!t.vanishes) {
      out.vanishes = false;
      out.complete = true;  // a nonzero witness is definitive
      out.witness = i;
      out.checked_to = i;
      return out;
    }
  }
  out.vanishes = true;
  out.complete = complete;
  out.checked_to = top;
  return out;
}

DualData dual_module(const ModulePtr& M) {
  ModulePtr A = M->minimal();
  const QRingPtr& R = A->ring();
  const RingPtr& S = R->poly_ring();
  ModOrder plain{S.get(), -1};
  const int r0 = A->ngens(), r1 = A->nrels();

  std::vector<int> w1(r0), w2(r1);
  for (int t = 0; t < r0; ++t) w1[t] = -A->row_degs()[t];
  for (int c = 0; c < r1; ++c) w2[c] = -A->col_degs()[c];
  FreeMod W1{S, w1}, W2{S, w2};

  // transpose of the presentation as a map W1 -> W2
  std::vector<VecPoly> tcols(r0);
  for (int t = 0; t < r0; ++t) {
    std::vector<MTerm> ts;
    for (int c = 0; c < r1; ++c)
      for (const auto& tm : A->rel().at(t, c).terms()) ts.push_back({tm.c, tm.m, c});
    tcols[t] = VecPoly::from_terms(S, std::move(ts), plain);
  }

  std::vector<VecPoly> i2;
  std::vector<int> i2d;
  std::vector<VecPoly> i1;
  std::vector<int> i1d;
  for (const auto& g : R->defining().g) {
    int gd = *g.homogeneous_degree();
    for (int c = 0; c < r1; ++c) {
      i2.push_back(VecPoly::embed(g, c, plain));
      i2d.push_back(gd + w2[c]);
    }
    for (int t = 0; t < r0; ++t) {
      i1.push_back(VecPoly::embed(g, t, plain));
      i1d.push_back(gd + w1[t]);
    }
  }

  std::vector<VecPoly> pre = preimage(W1, W2, tcols, i2, i2d);
  std::vector<int> predegs = degrees_in(W1, pre, "dual_module");
  std::vector<int> kept = minimal_generator_indices(W1, pre, predegs, i1);

  DualData out;
  std::vector<VecPoly> bcols;
  for (int k : kept) {
    bcols.push_back(pre[k]);
    out.bdegs.push_back(predegs[k]);
  }
  out.B = matrix_from_cols(S, r0, bcols);
  out.dual = subquotient(R, W1, bcols, out.bdegs, i1, i1d);
  return out;
}

BidualityResult biduality(const ModulePtr& M) {
  ModulePtr A = M->minimal();
  const QRingPtr& R = A->ring();
  const RingPtr& S = R->poly_ring();
  ModOrder plain{S.get(), -1};
  const int r0 = A->ngens();

  DualData d1 = dual_module(A);
  const int s = static_cast<int>(d1.bdegs.size());
  BidualityResult out;

  // ambient of M**: R^s with the dual-dual shifts
  std::vector<int> w1(s);
  for (int j = 0; j < s; ++j) w1[j] = -d1.bdegs[j];
  FreeMod W1{S, w1};

  const PolyMatrix& C = d1.dual->rel();  // relations of M* on the B generators
  const int c2 = C.cols;
  std::vector<int> w2(c2);
  for (int c = 0; c < c2; ++c) w2[c] = -d1.dual->col_degs()[c];
  FreeMod W2{S, w2};

  std::vector<VecPoly> ctcols(s);
  for (int j = 0; j < s; ++j) {
    std::vector<MTerm> ts;
    for (int c = 0; c < c2; ++c)
      for (const auto& tm : C.at(j, c).terms()) ts.push_back({tm.c, tm.m, c});
    ctcols[j] = VecPoly::from_terms(S, std::move(ts), plain);
  }

  auto iblock_for = [&](const FreeMod& W) {
    std::pair<std::vector<VecPoly>, std::vector<int>> out2;
    for (const auto& g : R->defining().g) {
      int gd = *g.homogeneous_degree();
      for (int t = 0; t < W.rank(); ++t) {
        out2.first.push_back(VecPoly::embed(g, t, plain));
        out2.second.push_back(gd + W.shifts[t]);
      }
    }
    return out2;
  };

  auto [i2, i2d] = iblock_for(W2);
  auto [i1, i1d] = iblock_for(W1);
  std::vector<VecPoly> ddcols = preimage(W1, W2, ctcols, i2, i2d);  // generators of M**

  // evaluation map M -> M**: generator t goes to row t of B
  std::vector<VecPoly> ecols(r0);
  for (int t = 0; t < r0; ++t) {
    std::vector<MTerm> ts;
    for (int j = 0; j < s; ++j)
      for (const auto& tm : d1.B.at(t, j).terms()) ts.push_back({tm.c, tm.m, j});
    ecols[t] = VecPoly::from_terms(S, std::move(ts), plain);
  }

  // kernel: preimages of I*W1 under ev must die in M
  FreeMod F0{S, A->row_degs()};
  std::vector<VecPoly> K = preimage(F0, W1, ecols, i1, i1d);
  out.ker_zero = true;
  const GBasis& relgb = A->relation_gb();
  for (const auto& k : K)
    if (!in_span(k, relgb)) {
      out.ker_zero = false;
      break;
    }

  // cokernel: every generator of M** must be hit by ev modulo I
  std::vector<VecPoly> span = ecols;
  span.insert(span.end(), i1.begin(), i1.end());
  GBasis egb = module_gb(W1, span, -1);
  out.coker_zero = true;
  for (const auto& dcol : ddcols)
    if (!in_span(dcol, egb)) {
      out.coker_zero = false;
      break;
    }
  return out;
}

}  // namespace cmw

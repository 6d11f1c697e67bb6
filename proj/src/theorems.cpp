#include "cmw/theorems.hpp"

#include <algorithm>
#include <sstream>

#include "cmw/localize.hpp"

namespace cmw {

namespace {
struct StmtInfo {
  StmtId id;
  const char* name;
  bool needs_n_module;
  bool needs_param;
};
const StmtInfo kStatements[] = {
    {StmtId::t1, "T1", false, false},
    {StmtId::t2, "T2", true, false},
    {StmtId::t3, "T3", true, false},
    {StmtId::prop12a, "prop1.2a", true, false},
    {StmtId::prop12b, "prop1.2b", true, false},
    {StmtId::prop14a, "prop1.4a", true, false},
    {StmtId::prop14b, "prop1.4b", true, false},
    {StmtId::cor15, "cor1.5", true, false},
    {StmtId::cor16, "cor1.6", true, false},
    {StmtId::thm18, "thm1.8", true, false},
    {StmtId::lem110a, "lem1.10a", false, false},
    {StmtId::lem110b, "lem1.10b", false, false},
    {StmtId::lem110c, "lem1.10c", true, false},
    {StmtId::thm111, "thm1.11", false, false},
    {StmtId::thm21, "thm2.1", true, true},
    {StmtId::cor22, "cor2.2", false, true},
    {StmtId::thm23, "thm2.3", true, false},
    {StmtId::thm24, "thm2.4", true, true},
    {StmtId::def11equiv, "def1.1-equiv", true, false},
};

const StmtInfo& info_of(StmtId id) {
  for (const auto& s : kStatements)
    if (s.id == id) return s;
  fail_internal("unknown statement id");
}
}  // namespace

const char* stmt_name(StmtId id) { return info_of(id).name; }

std::optional<StmtId> stmt_from_name(const std::string& name) {
  for (const auto& s : kStatements)
    if (name == s.name) return s.id;
  return std::nullopt;
}

const std::vector<StmtId>& all_statements() {
  static const std::vector<StmtId> all = [] {
    std::vector<StmtId> v;
    for (const auto& s : kStatements) v.push_back(s.id);
    return v;
  }();
  return all;
}

bool stmt_needs_second_module(StmtId id) { return info_of(id).needs_n_module; }
bool stmt_needs_param_n(StmtId id) { return info_of(id).needs_param; }

const char* hyp_status_name(HypStatus s) {
  switch (s) {
    case HypStatus::holds: return "holds";
    case HypStatus::fails: return "fails";
    case HypStatus::not_established: return "not-established";
  }
  return "?";
}

namespace {

class Check {
 public:
  Check(StmtId id, const ModulePtr& M, const ModulePtr& N, const CheckOptions& opt)
      : M_(M), N_(N), opt_(opt) {
    v_.id = id;
    bound_ = opt.bound > 0 ? opt.bound : default_bound(M->ring());
  }

  void hyp(const std::string& name, HypStatus st, std::string witness = "") {
    v_.hyps.push_back({name, st, std::move(witness)});
  }
  void hyp_bool(const std::string& name, bool ok, std::string witness = "") {
    hyp(name, ok ? HypStatus::holds : HypStatus::fails, std::move(witness));
  }

  // pd_R M must be exact; records the hypothesis and returns the value.
  std::optional<int> hyp_pd_exact(const ModulePtr& X, const std::string& label) {
    PdResult pd = projective_dimension(X, false, bound_);
    if (pd.exact) {
      hyp(label, HypStatus::holds, "pd = " + std::to_string(pd.value));
      return pd.value;
    }
    hyp(label, HypStatus::not_established, "pd " + pd.str());
    return std::nullopt;
  }

  bool hyp_tor_vanishing(const ModulePtr& A, const ModulePtr& B) {
    TorVanish tv = tor_vanishes_positive(A, B, bound_);
    if (!tv.vanishes) {
      hyp("Tor_i(M,N) = 0 for i > 0", HypStatus::fails,
          "Tor_" + std::to_string(tv.witness) + " is nonzero");
      return false;
    }
    if (!tv.complete) {
      hyp("Tor_i(M,N) = 0 for i > 0", HypStatus::not_established,
          "vanishing verified only through index " + std::to_string(tv.checked_to));
      return false;
    }
    hyp("Tor_i(M,N) = 0 for i > 0", HypStatus::holds,
        "complete through pd = " + std::to_string(tv.checked_to));
    return true;
  }

  std::optional<CertifiedValue> hyp_gdim_certified(const ModulePtr& X) {
    CertifiedValue g = gdim(X, bound_);
    if (g.cert == CertifiedValue::Cert::unknown) {
      hyp("G-dim M is finite", HypStatus::not_established, "gdim " + g.str());
      return std::nullopt;
    }
    hyp("G-dim M is finite", HypStatus::holds, "gdim " + g.str());
    return g;
  }

  Verdict finish(bool conclusion_holds, std::string detail = "") {
    v_.detail = std::move(detail);
    v_.applicable = true;
    for (const auto& h : v_.hyps)
      if (h.status != HypStatus::holds) v_.applicable = false;
    if (!v_.applicable) {
      v_.conclusion = Verdict::Conclusion::skipped;
      v_.consistent = true;
    } else {
      v_.conclusion = conclusion_holds ? Verdict::Conclusion::holds : Verdict::Conclusion::fails;
      v_.consistent = conclusion_holds;
    }
    return v_;
  }

  // When hypotheses already failed, the conclusion is never evaluated.
  bool applicable_so_far() const {
    for (const auto& h : v_.hyps)
      if (h.status != HypStatus::holds) return false;
    return true;
  }
  Verdict finish_inapplicable() { return finish(false); }

  const ModulePtr& M_;
  const ModulePtr& N_;
  CheckOptions opt_;
  int bound_ = 0;
  Verdict v_;
};

std::string ii(int a) { return std::to_string(a); }

Verdict check_t1(const ModulePtr& M, const CheckOptions& opt) {
  Check c(StmtId::t1, M, nullptr, opt);
  const QRingPtr& R = M->ring();
  c.hyp_bool("R is Cohen-Macaulay", ring_depth(R) == R->dim(),
             "depth R = " + ii(ring_depth(R)) + ", dim R = " + ii(R->dim()));
  auto pd = c.hyp_pd_exact(M, "pd_R M is finite");
  if (!c.applicable_so_far()) return c.finish_inapplicable();
  int g = grade_mn(M, ring_as_module(R), c.bound_);
  bool cm = is_cohen_macaulay(M);
  return c.finish(cm == (g == *pd),
                  "CM = " + ii(cm) + ", grade M = " + ii(g) + ", pd = " + ii(*pd));
}

Verdict check_t2(const ModulePtr& M, const ModulePtr& N, const CheckOptions& opt) {
  Check c(StmtId::t2, M, N, opt);
  bool tor = c.hyp_tor_vanishing(M, N);
  auto pd = c.hyp_pd_exact(M, "pd_R M is finite");
  (void)tor;
  if (!c.applicable_so_far()) return c.finish_inapplicable();
  int lhs = module_depth(tensor(M, N));
  int rhs = module_depth(N) - *pd;
  return c.finish(lhs == rhs, "depth(M(x)N) = " + ii(lhs) + ", depth N - pd M = " + ii(rhs));
}

Verdict check_t3(const ModulePtr& M, const ModulePtr& N, const CheckOptions& opt) {
  Check c(StmtId::t3, M, N, opt);
  auto pd = c.hyp_pd_exact(M, "pd_R M is finite");
  if (!c.applicable_so_far()) return c.finish_inapplicable();
  int dn = module_dimension(N);
  int dt = module_dimension(tensor(M, N));
  return c.finish(dn <= *pd + dt,
                  "dim N = " + ii(dn) + ", pd M + dim(M(x)N) = " + ii(*pd + dt));
}

Verdict check_prop12a(const ModulePtr& M, const ModulePtr& N, const CheckOptions& opt) {
  Check c(StmtId::prop12a, M, N, opt);
  int lhs = module_depth(N) - module_dimension(M);
  int g = grade_mn(M, N, c.bound_);
  return c.finish(lhs <= g, "depth N - dim M = " + ii(lhs) + ", grade(M,N) = " + ii(g));
}

Verdict check_prop12b(const ModulePtr& M, const ModulePtr& N, const CheckOptions& opt) {
  Check c(StmtId::prop12b, M, N, opt);
  c.hyp_bool("Supp M inside Supp N", support_contains(M, N));
  if (!c.applicable_so_far()) return c.finish_inapplicable();
  int g = grade_mn(M, N, c.bound_);
  int rhs = module_dimension(N) - module_dimension(M);
  return c.finish(g <= rhs, "grade(M,N) = " + ii(g) + ", dim N - dim M = " + ii(rhs));
}

Verdict check_prop14a(const ModulePtr& M, const ModulePtr& N, const CheckOptions& opt) {
  Check c(StmtId::prop14a, M, N, opt);
  int imp = imperfection(M, N, c.bound_);
  int cmd = cm_defect(M);
  return c.finish(imp <= cmd, "imp(M,N) = " + ii(imp) + ", cmd M = " + ii(cmd));
}

Verdict check_prop14b(const ModulePtr& M, const ModulePtr& N, const CheckOptions& opt) {
  Check c(StmtId::prop14b, M, N, opt);
  c.hyp_bool("Supp M inside Supp N", support_contains(M, N));
  if (!c.applicable_so_far()) return c.finish_inapplicable();
  int cmdM = cm_defect(M);
  int rhs = imperfection(M, N, c.bound_) + cm_defect(N);
  return c.finish(cmdM <= rhs, "cmd M = " + ii(cmdM) + ", imp(M,N) + cmd N = " + ii(rhs));
}

Verdict check_cor15(const ModulePtr& M, const ModulePtr& N, const CheckOptions& opt) {
  Check c(StmtId::cor15, M, N, opt);
  c.hyp_bool("N is Cohen-Macaulay", is_cohen_macaulay(N));
  c.hyp_bool("Supp M inside Supp N", support_contains(M, N));
  if (!c.applicable_so_far()) return c.finish_inapplicable();
  int cmdM = cm_defect(M);
  int imp = imperfection(M, N, c.bound_);
  return c.finish(cmdM == imp, "cmd M = " + ii(cmdM) + ", imp(M,N) = " + ii(imp));
}

Verdict check_cor16(const ModulePtr& M, const ModulePtr& N, const CheckOptions& opt) {
  Check c(StmtId::cor16, M, N, opt);
  const QRingPtr& R = M->ring();
  c.hyp_bool("N is Cohen-Macaulay", is_cohen_macaulay(N));
  c.hyp_bool("depth N = depth R", module_depth(N) == ring_depth(R));
  auto pd = c.hyp_pd_exact(M, "pd_R M is finite");
  c.hyp_bool("Supp M inside Supp N", support_contains(M, N));
  if (!c.applicable_so_far()) return c.finish_inapplicable();
  bool vanish_away = true;
  int witness = -1;
  for (int i = 0; i < *pd; ++i)
    if (!ext_module(i, M, N, c.bound_).vanishes) {
      vanish_away = false;
      witness = i;
      break;
    }
  bool cm = is_cohen_macaulay(M);
  return c.finish(cm == vanish_away,
                  "CM = " + ii(cm) + ", Ext vanishing off pd = " + ii(vanish_away) +
                      (witness >= 0 ? " (nonzero at i = " + ii(witness) + ")" : ""));
}

Verdict check_thm18(const ModulePtr& M, const ModulePtr& N, const CheckOptions& opt) {
  Check c(StmtId::thm18, M, N, opt);
  c.hyp_bool("N is Cohen-Macaulay", is_cohen_macaulay(N));
  auto pd = c.hyp_pd_exact(M, "pd_R M is finite");
  c.hyp_tor_vanishing(M, N);
  if (!c.applicable_so_far()) return c.finish_inapplicable();
  ModulePtr T = tensor(M, N);
  int g = grade_mn(M, N, c.bound_);
  bool nperf = (*pd == g);
  bool cmT = is_cohen_macaulay(T);
  int gT = grade_mn(T, N, c.bound_);
  bool main = (cmT == nperf);
  bool identity = (gT == g);
  return c.finish(main && identity,
                  "CM(M(x)N) = " + ii(cmT) + ", N-perfect = " + ii(nperf) +
                      "; grade(M(x)N,N) = " + ii(gT) + ", grade(M,N) = " + ii(g));
}

Verdict check_lem110a(const ModulePtr& M, const CheckOptions& opt) {
  Check c(StmtId::lem110a, M, nullptr, opt);
  auto g = c.hyp_gdim_certified(M);
  if (!c.applicable_so_far()) return c.finish_inapplicable();
  int lhs = g->value + module_depth(M);
  int rhs = ring_depth(M->ring());
  return c.finish(lhs == rhs, "gdim + depth M = " + ii(lhs) + ", depth R = " + ii(rhs));
}

Verdict check_lem110b(const ModulePtr& M, const CheckOptions& opt) {
  Check c(StmtId::lem110b, M, nullptr, opt);
  auto g = c.hyp_gdim_certified(M);
  if (!c.applicable_so_far()) return c.finish_inapplicable();
  ModulePtr Rfree = ring_as_module(M->ring());
  int sup = -1;
  for (int t = 0; t <= c.bound_; ++t) {
    DerivedResult e = ext_module(t, M, Rfree, c.bound_ + 1);
    if (!e.vanishes) sup = t;
  }
  return c.finish(sup == g->value, "sup Ext^t(M,R) = " + ii(sup) + ", gdim = " + ii(g->value));
}

Verdict check_lem110c(const ModulePtr& M, const ModulePtr& P, const CheckOptions& opt) {
  Check c(StmtId::lem110c, M, P, opt);
  auto g = c.hyp_gdim_certified(M);
  auto pdP = c.hyp_pd_exact(P, "pd_R P is finite");
  if (!c.applicable_so_far()) return c.finish_inapplicable();
  // Tor_i(M,P) = 0 for i > gdim; indices above pd P vanish structurally.
  int bad = -1;
  for (int i = g->value + 1; i <= *pdP; ++i)
    if (!tor_module(i, P, M, c.bound_).vanishes) {
      bad = i;
      break;
    }
  return c.finish(bad < 0, bad < 0 ? "Tor_{>gdim}(M,P) = 0"
                                   : "Tor_" + ii(bad) + "(M,P) is nonzero");
}

Verdict check_thm111(const ModulePtr& M, const CheckOptions& opt) {
  Check c(StmtId::thm111, M, nullptr, opt);
  const QRingPtr& R = M->ring();
  bool rcm = ring_depth(R) == R->dim();
  c.hyp_bool("R is Cohen-Macaulay", rcm);
  auto g = c.hyp_gdim_certified(M);
  if (!c.applicable_so_far()) return c.finish_inapplicable();
  ModulePtr K = canonical_module(R);
  ModulePtr T = tensor(M, K);
  bool cmM = is_cohen_macaulay(M);
  bool cmT = is_cohen_macaulay(T);
  bool main = (cmM == cmT);

  // proof facts: Tor vanishing against K and the depth formula
  int badtor = -1;
  for (int i = 1; i < c.bound_; ++i)
    if (!tor_module(i, M, K, c.bound_).vanishes) {
      badtor = i;
      break;
    }
  int dT = module_depth(T);
  int rhs = module_depth(K) - g->value;
  bool depth_ok = (dT == rhs);
  return c.finish(main && badtor < 0 && depth_ok,
                  "CM(M) = " + ii(cmM) + ", CM(M(x)K) = " + ii(cmT) +
                      (badtor >= 0 ? ", Tor_" + ii(badtor) + "(M,K) nonzero" : "") +
                      ", depth M(x)K = " + ii(dT) + ", depth K - gdim M = " + ii(rhs));
}

Verdict check_thm21(const ModulePtr& M, const ModulePtr& N, const CheckOptions& opt) {
  Check c(StmtId::thm21, M, N, opt);
  if (!opt.n) fail_kernel("thm2.1 needs the parameter n");
  int n = *opt.n;
  c.hyp_bool("N satisfies (S_n)", satisfies_serre(N, n), "n = " + ii(n));
  auto pd = c.hyp_pd_exact(M, "pd_R M is finite");
  if (pd) {
    int g = grade_mn(M, N, c.bound_);
    c.hyp_bool("M is N-perfect", *pd == g, "pd = " + ii(*pd) + ", grade(M,N) = " + ii(g));
    c.hyp_bool("t = pd M <= n", *pd <= n);
  }
  c.hyp_tor_vanishing(M, N);
  if (!c.applicable_so_far()) return c.finish_inapplicable();
  bool concl = satisfies_serre(tensor(M, N), n - *pd);
  return c.finish(concl, "M(x)N satisfies (S_" + ii(n - *pd) + ") = " + ii(concl));
}

Verdict check_cor22(const ModulePtr& M, const CheckOptions& opt) {
  Check c(StmtId::cor22, M, nullptr, opt);
  if (!opt.n) fail_kernel("cor2.2 needs the parameter n");
  int n = *opt.n;
  const QRingPtr& R = M->ring();
  c.hyp_bool("R satisfies (S_n)", satisfies_serre(ring_as_module(R), n), "n = " + ii(n));
  auto pd = c.hyp_pd_exact(M, "pd_R M is finite");
  if (pd) {
    int g = grade_mn(M, ring_as_module(R), c.bound_);
    c.hyp_bool("M is perfect", *pd == g, "pd = " + ii(*pd) + ", grade M = " + ii(g));
    c.hyp_bool("t = pd M <= n", *pd <= n);
  }
  if (!c.applicable_so_far()) return c.finish_inapplicable();
  bool concl = satisfies_serre(M, n - *pd);
  return c.finish(concl, "M satisfies (S_" + ii(n - *pd) + ") = " + ii(concl));
}

Verdict check_thm23(const ModulePtr& M, const ModulePtr& N, const CheckOptions& opt) {
  Check c(StmtId::thm23, M, N, opt);
  c.hyp_tor_vanishing(M, N);
  c.hyp_pd_exact(M, "pd_R M is finite");
  if (!c.applicable_so_far()) return c.finish_inapplicable();
  bool cmT = is_cohen_macaulay(tensor(M, N));
  bool cmN = is_cohen_macaulay(N);
  return c.finish(!cmT || cmN, "CM(M(x)N) = " + ii(cmT) + ", CM(N) = " + ii(cmN));
}

Verdict check_thm24(const ModulePtr& M, const ModulePtr& N, const CheckOptions& opt) {
  Check c(StmtId::thm24, M, N, opt);
  if (!opt.n) fail_kernel("thm2.4 needs the parameter n");
  int n = *opt.n;
  c.hyp_tor_vanishing(M, N);
  c.hyp_pd_exact(M, "pd_R M is finite");
  if (!c.applicable_so_far()) return c.finish_inapplicable();
  bool sT = satisfies_serre(tensor(M, N), n);
  bool sN = satisfies_serre(N, n);
  return c.finish(!sT || sN,
                  "(S_" + ii(n) + ") of M(x)N = " + ii(sT) + ", of N = " + ii(sN));
}

Verdict check_def11equiv(const ModulePtr& M, const ModulePtr& N, const CheckOptions& opt) {
  Check c(StmtId::def11equiv, M, N, opt);
  const QRingPtr& R = M->ring();
  auto shapeN = monomial_shape(*N);
  auto primes = shapeN ? monomial_primes_over(R, M->annihilator_ideal()) : std::nullopt;
  if (!shapeN || !primes) {
    c.hyp("monomial localization oracle applies", HypStatus::not_established,
          "ring, module or annihilator is not monomial");
    return c.finish_inapplicable();
  }
  c.hyp("monomial localization oracle applies", HypStatus::holds);
  int best = -1;
  for (unsigned mask : *primes) {
    LocalInvariants loc = localize(R, *shapeN, mask);
    if (!loc.nonzero) continue;  // depth of the zero module counts as infinite
    if (best < 0 || loc.depth < best) best = loc.depth;
  }
  int g = grade_mn(M, N, c.bound_);
  return c.finish(best == g,
                  "min depth N_p over monomial Supp M = " + ii(best) + ", grade(M,N) = " + ii(g));
}

}  // namespace

Verdict check_statement(StmtId id, const ModulePtr& M, const ModulePtr& N,
                        const CheckOptions& opt) {
  if (!M) fail_kernel("check: missing module M");
  require_nonzero(*M, "check");
  if (stmt_needs_second_module(id)) {
    if (!N) fail_kernel(std::string("check ") + stmt_name(id) + ": missing second module");
    require_nonzero(*N, "check");
    require_same_ring(*M, *N);
  }
  if (stmt_needs_param_n(id) && !opt.n)
    fail_kernel(std::string("check ") + stmt_name(id) + ": missing parameter n");

  switch (id) {
    case StmtId::t1: return check_t1(M, opt);
    case StmtId::t2: return check_t2(M, N, opt);
    case StmtId::t3: return check_t3(M, N, opt);
    case StmtId::prop12a: return check_prop12a(M, N, opt);
    case StmtId::prop12b: return check_prop12b(M, N, opt);
    case StmtId::prop14a: return check_prop14a(M, N, opt);
    case StmtId::prop14b: return check_prop14b(M, N, opt);
    case StmtId::cor15: return check_cor15(M, N, opt);
    case StmtId::cor16: return check_cor16(M, N, opt);
    case StmtId::thm18: return check_thm18(M, N, opt);
    case StmtId::lem110a: return check_lem110a(M, opt);
    case StmtId::lem110b: return check_lem110b(M, opt);
    case StmtId::lem110c: return check_lem110c(M, N, opt);
    case StmtId::thm111: return check_thm111(M, opt);
    case StmtId::thm21: return check_thm21(M, N, opt);
    case StmtId::cor22: return check_cor22(M, opt);
    case StmtId::thm23: return check_thm23(M, N, opt);
    case StmtId::thm24: return check_thm24(M, N, opt);
    case StmtId::def11equiv: return check_def11equiv(M, N, opt);
  }
  fail_internal("unhandled statement id");
}

}  // namespace cmw

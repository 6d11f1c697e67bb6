#ifndef CMW_INVARIANTS_HPP
#define CMW_INVARIANTS_HPP

#include <map>

#include "cmw/homalg.hpp"

namespace cmw {

// depth at the irrelevant maximal ideal, through the Auslander-Buchsbaum
// equality over the ambient polynomial ring (always terminates).
int module_depth(const ModulePtr& M);
// Independent route: least i with Ext^i_R(k, M) nonzero. Used as an oracle.
int depth_ext_route(const ModulePtr& M, int bound = -1);

int module_dimension(const ModulePtr& M);  // dim R/ann M
int ring_depth(const QRingPtr& R);         // cached on the ring

// least i with Ext^i_R(M,N) nonzero; finite since graded supports meet.
int grade_mn(const ModulePtr& M, const ModulePtr& N, int bound = -1);
// Classical equivalent: the length of a maximal N-regular sequence inside
// ann M, grown greedily by nonzerodivisor tests. Must agree with grade_mn.
int grade_oracle(const ModulePtr& M, const ModulePtr& N);

int imperfection(const ModulePtr& M, const ModulePtr& N, int bound = -1);
int cm_defect(const ModulePtr& M);
bool is_cohen_macaulay(const ModulePtr& M);
bool is_maximal_cm(const ModulePtr& M);

struct CertBool {
  bool established = false;
  bool value = false;
};
CertBool is_perfect(const ModulePtr& M, int bound = -1);
CertBool is_n_perfect(const ModulePtr& M, const ModulePtr& N, int bound = -1);

// Serre condition (S_k) via the Ext-codimension criterion over the ambient
// regular ring: codim Ext^i_S(M,S) >= i + k for every i above the codimension.
bool satisfies_serre(const ModulePtr& M, int k);

struct CertifiedValue {
  int value = 0;
  enum class Cert { proved, bounded, unknown } cert = Cert::unknown;
  int bound = 0;

  std::string str() const;
};

// Total reflexivity test: Ext^i(M,R) and Ext^i(M*,R) vanish through the
// bound and the biduality map is an isomorphism. value is 1 or 0.
CertifiedValue gdim_zero(const ModulePtr& M, int bound = -1);
// Gorenstein dimension: sup of nonvanishing Ext^t(M,R), certified when it
// matches depth R - depth M and the tail vanishes through the bound.
CertifiedValue gdim(const ModulePtr& M, int bound = -1);

// K = Ext^{n-d}_S(R,S), degree-normalized; requires R Cohen-Macaulay.
ModulePtr canonical_module(const QRingPtr& R);

struct InvariantReport {
  int depth = 0;
  int dim = 0;
  int cmd = 0;
  PdResult pd;  // over R
  bool is_cm = false;
  bool is_max_cm = false;
  std::map<int, bool> serre;
  CertifiedValue gdim;
  CertBool perfect;
  bool with_n = false;
  int grade_vs = 0;
  int imp_vs = 0;
  CertBool n_perfect;
};
InvariantReport invariant_report(const ModulePtr& M, const ModulePtr& N = nullptr, int bound = -1,
                                 const std::vector<int>& serre_ks = {0, 1, 2});

}  // namespace cmw

#endif

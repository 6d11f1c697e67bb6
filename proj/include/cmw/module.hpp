#ifndef CMW_MODULE_HPP
#define CMW_MODULE_HPP

#include <mutex>
#include <optional>

#include "cmw/qring.hpp"
#include "cmw/syzygy.hpp"

namespace cmw {

struct PolyMatrix {
  int rows = 0, cols = 0;
  std::vector<Poly> a;  // row-major

  static PolyMatrix zero(int r, int c) { return PolyMatrix{r, c, std::vector<Poly>(size_t(r) * c)}; }
  Poly& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Poly& at(int i, int j) const { return a[size_t(i) * cols + j]; }
};

PolyMatrix matrix_from_cols(const RingPtr& ring, int rows, const std::vector<VecPoly>& cols);

class Module;
using ModulePtr = std::shared_ptr<const Module>;

// Finitely generated graded module over R = S/I, presented as the cokernel
// of a homogeneous matrix between graded free modules. Entries are kept as
// normal forms modulo the defining ideal. Immutable; lazy caches are locked.
class Module : public std::enable_shared_from_this<Module> {
 public:
  static ModulePtr make(QRingPtr R, std::vector<int> row_degs, PolyMatrix rel,
                        std::optional<std::vector<int>> col_degs = std::nullopt,
                        bool assume_minimal = false);

  const QRingPtr& ring() const { return R_; }
  int ngens() const { return rel_.rows; }
  int nrels() const { return rel_.cols; }
  const std::vector<int>& row_degs() const { return row_degs_; }
  const std::vector<int>& col_degs() const { return col_degs_; }
  const PolyMatrix& rel() const { return rel_; }
  bool minimal_flag() const { return minimal_flag_; }

  FreeMod target() const { return FreeMod{R_->poly_ring(), row_degs_}; }
  std::vector<VecPoly> rel_cols() const;
  // relation columns together with the I-block (I * e_t for every t)
  std::vector<VecPoly> rel_cols_aug(std::vector<int>* degs = nullptr) const;

  // Groebner basis over S of im(rel) + I*F0 — the full relation submodule.
  const GBasis& relation_gb() const;
  ModulePtr minimal() const;
  bool is_zero() const;
  // Preimage in S of ann_R(M); contains the defining ideal. Rejects M = 0.
  const IdealGB& annihilator_ideal() const;
  uint64_t fingerprint() const;
  int hilbert(int d) const;

  std::string str() const;
  void serialize(Fnv1a& h) const;

 private:
  Module() = default;
  QRingPtr R_;
  std::vector<int> row_degs_, col_degs_;
  PolyMatrix rel_;
  bool minimal_flag_ = false;

  mutable std::mutex mu_;
  mutable std::optional<GBasis> relgb_;
  mutable ModulePtr minimal_;
  mutable std::optional<IdealGB> ann_;
  mutable std::optional<uint64_t> fpr_;
};

ModulePtr free_module(QRingPtr R, std::vector<int> shifts);
ModulePtr ring_as_module(const QRingPtr& R);
// R/(gens) with the generator sitting in degree `shift`.
ModulePtr cyclic_module(QRingPtr R, const std::vector<Poly>& ideal_gens, int shift = 0);
ModulePtr residue_field(const QRingPtr& R);

ModulePtr tensor(const ModulePtr& M, const ModulePtr& N);
ModulePtr direct_sum(const ModulePtr& M, const ModulePtr& N);
ModulePtr shift_module(const ModulePtr& M, int d);
// Same module regarded over the ambient polynomial ring (valid since I
// annihilates it); the defining ideal becomes explicit relation columns.
ModulePtr lift_to_ambient(const ModulePtr& M);

struct SupportRelation {
  bool contained;                  // Supp M inside Supp N
  bool disjoint_up_to_irrelevant;  // supports meet at most at the irrelevant ideal
};
bool support_contains(const ModulePtr& M, const ModulePtr& N);
SupportRelation support_relation(const ModulePtr& M, const ModulePtr& N);

bool hilbert_agree(const ModulePtr& M, const ModulePtr& N, int window);
void require_same_ring(const Module& M, const Module& N);
void require_nonzero(const Module& M, const char* who);

// Greedy graded minimal-generator selection: indices of a minimal subset of
// cols spanning the same submodule modulo span(context).
std::vector<int> minimal_generator_indices(const FreeMod& target, const std::vector<VecPoly>& cols,
                                           const std::vector<int>& coldegs,
                                           const std::vector<VecPoly>& context,
                                           const GBOptions& opt = {});

}  // namespace cmw

#endif

#include "cmw/module.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cmw {

PolyMatrix matrix_from_cols(const RingPtr& ring, int rows, const std::vector<VecPoly>& cols) {
  PolyMatrix m = PolyMatrix::zero(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols; ++j)
    for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j].component(i);
  for (auto& p : m.a)
    if (p.terms().empty() && !p.ring()) p = Poly(ring);
  return m;
}

void require_same_ring(const Module& M, const Module& N) {
  if (!M.ring()->same(*N.ring())) fail_kernel("modules live over different rings");
}

void require_nonzero(const Module& M, const char* who) {
  if (M.is_zero()) fail_kernel(std::string(who) + ": the zero module is rejected");
}

ModulePtr Module::make(QRingPtr R, std::vector<int> row_degs, PolyMatrix rel,
                       std::optional<std::vector<int>> col_degs, bool assume_minimal) {
  CMW_CHECK(R != nullptr, "module without a ring");
  if (rel.rows != static_cast<int>(row_degs.size()))
    fail_kernel("row degree list does not match the matrix");
  if (static_cast<int>(rel.a.size()) != rel.rows * rel.cols)
    fail_kernel("matrix storage is inconsistent");

  auto M = std::shared_ptr<Module>(new Module());
  const RingPtr& S = R->poly_ring();

  // Entries live in R: reduce to normal form mod I, then audit the grading.
  for (auto& p : rel.a) {
    if (p.ring() == nullptr) p = Poly(S);
    if (!p.ring()->same_ring(*S)) fail_kernel("matrix entry over a foreign ring");
    p = R->nf(p);
  }

  std::vector<int> cd;
  if (col_degs) {
    cd = *col_degs;
    if (static_cast<int>(cd.size()) != rel.cols) fail_kernel("column degree list does not match");
  } else {
    cd.assign(rel.cols, 0);
    for (int j = 0; j < rel.cols; ++j) {
      for (int i = 0; i < rel.rows; ++i) {
        if (!rel.at(i, j).is_zero()) {
          auto d = rel.at(i, j).homogeneous_degree();
          if (!d) fail_kernel("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ") is not homogeneous");
          cd[j] = row_degs[i] + *d;
          break;
        }
      }
    }
  }
  for (int j = 0; j < rel.cols; ++j)
    for (int i = 0; i < rel.rows; ++i) {
      const Poly& p = rel.at(i, j);
      if (p.is_zero()) continue;
      auto d = p.homogeneous_degree();
      if (!d || *d != cd[j] - row_degs[i])
        fail_kernel("degree-inconsistent matrix at entry (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
    }

  M->R_ = std::move(R);
  M->row_degs_ = std::move(row_degs);
  M->col_degs_ = std::move(cd);
  M->rel_ = std::move(rel);
  M->minimal_flag_ = assume_minimal;
  return M;
}

std::vector<VecPoly> Module::rel_cols() const {
  const RingPtr& S = R_->poly_ring();
  ModOrder plain{S.get(), -1};
  std::vector<VecPoly> cols;
  cols.reserve(rel_.cols);
  for (int j = 0; j < rel_.cols; ++j) {
    std::vector<MTerm> ts;
    for (int i = 0; i < rel_.rows; ++i)
      for (const auto& t : rel_.at(i, j).terms()) ts.push_back({t.c, t.m, i});
    cols.push_back(VecPoly::from_terms(S, std::move(ts), plain));
  }
  return cols;
}

std::vector<VecPoly> Module::rel_cols_aug(std::vector<int>* degs) const {
  std::vector<VecPoly> cols = rel_cols();
  if (degs) *degs = col_degs_;
  const RingPtr& S = R_->poly_ring();
  ModOrder plain{S.get(), -1};
  for (const auto& g : R_->defining().g) {
    int gd = *g.homogeneous_degree();
    for (int t = 0; t < ngens(); ++t) {
      cols.push_back(VecPoly::embed(g, t, plain));
      if (degs) degs->push_back(gd + row_degs_[t]);
    }
  }
  return cols;
}

const GBasis& Module::relation_gb() const {
  std::lock_guard<std::mutex> lk(mu_);
  if (!relgb_) relgb_ = module_gb(target(), rel_cols_aug(), -1);
  return *relgb_;
}

namespace {

// One unit-pivot elimination pass on a presentation matrix. Returns the
// minimal data (no unit entries, no redundant columns).
struct Presentation {
  std::vector<int> rowdeg, coldeg;
  PolyMatrix m;
};

Presentation prune_units(const QRing& R, Presentation p) {
  const RingPtr& S = R.poly_ring();
  const Field& F = S->field();
  for (;;) {
    int pr = -1, pc = -1;
    for (int i = 0; i < p.m.rows && pr < 0; ++i)
      for (int j = 0; j < p.m.cols; ++j) {
        const Poly& e = p.m.at(i, j);
        if (!e.is_zero() && e.lead().m.is_one()) {
          pr = i;
          pc = j;
          break;
        }
      }
    if (pr < 0) return p;

    Poly u = p.m.at(pr, pc);
    Coeff uinv = F.inv(u.lead().c);
    // clear row pr across the other columns (change of relations)
    for (int j = 0; j < p.m.cols; ++j) {
      if (j == pc || p.m.at(pr, j).is_zero()) continue;
      Poly lam = p.m.at(pr, j).scale(uinv);
      for (int i = 0; i < p.m.rows; ++i)
        p.m.at(i, j) = R.nf(p.m.at(i, j) - lam * p.m.at(i, pc));
    }
    // clear column pc across the other rows (change of generators); the row
    // being subtracted is now u*e_pc, so only column pc changes
    for (int i = 0; i < p.m.rows; ++i) {
      if (i == pr) continue;
      p.m.at(i, pc) = Poly(S);
    }

    Presentation q;
    q.m = PolyMatrix::zero(p.m.rows - 1, p.m.cols - 1);
    for (int i = 0, qi = 0; i < p.m.rows; ++i) {
      if (i == pr) continue;
      for (int j = 0, qj = 0; j < p.m.cols; ++j) {
        if (j == pc) continue;
        q.m.at(qi, qj) = std::move(p.m.at(i, j));
        ++qj;
      }
      q.rowdeg.push_back(p.rowdeg[i]);
      ++qi;
    }
    for (int j = 0; j < p.m.cols; ++j)
      if (j != pc) q.coldeg.push_back(p.coldeg[j]);
    p = std::move(q);
  }
}

}  // namespace

std::vector<int> minimal_generator_indices(const FreeMod& target, const std::vector<VecPoly>& cols,
                                           const std::vector<int>& coldegs,
                                           const std::vector<VecPoly>& context,
                                           const GBOptions& opt) {
  std::vector<int> order(cols.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return coldegs[a] < coldegs[b]; });

  std::vector<int> kept;
  std::vector<VecPoly> span = context;
  for (int idx : order) {
    if (cols[idx].is_zero()) continue;
    GBasis gb = module_gb(target, span, -1, opt);
    if (!in_span(cols[idx], gb)) {
      kept.push_back(idx);
      span.push_back(cols[idx]);
    }
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

ModulePtr Module::minimal() const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    if (minimal_) return minimal_;
    if (minimal_flag_) {
      minimal_ = shared_from_this();
      return minimal_;
    }
  }

  Presentation p{row_degs_, col_degs_, rel_};
  p = prune_units(*R_, p);

  // minimal generating set of the relation columns over R
  FreeMod tgt{R_->poly_ring(), p.rowdeg};
  ModOrder plain{R_->poly_ring().get(), -1};
  std::vector<VecPoly> cols;
  for (int j = 0; j < p.m.cols; ++j) {
    std::vector<MTerm> ts;
    for (int i = 0; i < p.m.rows; ++i)
      for (const auto& t : p.m.at(i, j).terms()) ts.push_back({t.c, t.m, i});
    cols.push_back(VecPoly::from_terms(R_->poly_ring(), std::move(ts), plain));
  }
  std::vector<VecPoly> iblock;
  for (const auto& g : R_->defining().g)
    for (int t = 0; t < p.m.rows; ++t) iblock.push_back(VecPoly::embed(g, t, plain));

  std::vector<int> kept = minimal_generator_indices(tgt, cols, p.coldeg, iblock);
  PolyMatrix mm = PolyMatrix::zero(p.m.rows, static_cast<int>(kept.size()));
  std::vector<int> cd;
  for (size_t k = 0; k < kept.size(); ++k) {
    for (int i = 0; i < p.m.rows; ++i) mm.at(i, static_cast<int>(k)) = p.m.at(i, kept[k]);
    cd.push_back(p.coldeg[kept[k]]);
  }

  ModulePtr result = Module::make(R_, p.rowdeg, std::move(mm), cd, /*assume_minimal=*/true);
  std::lock_guard<std::mutex> lk(mu_);
  if (!minimal_) minimal_ = result;
  return minimal_;
}

bool Module::is_zero() const { return minimal()->ngens() == 0; }

const IdealGB& Module::annihilator_ideal() const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    if (ann_) return *ann_;
  }
  require_nonzero(*this, "annihilator");
  ModulePtr m = minimal();
  const RingPtr& S = R_->poly_ring();
  ModOrder plain{S.get(), -1};
  const GBasis& U = m->relation_gb();

  std::vector<VecPoly> ucols = U.g;
  std::vector<int> udegs;
  for (const auto& u : ucols) udegs.push_back(*u.homogeneous_degree(U.target));

  std::vector<std::vector<Poly>> quotients;
  for (int t = 0; t < m->ngens(); ++t) {
    std::vector<VecPoly> cols;
    cols.push_back(VecPoly::unit(S, t));
    cols.insert(cols.end(), ucols.begin(), ucols.end());
    std::vector<int> degs;
    degs.push_back(m->row_degs()[t]);
    degs.insert(degs.end(), udegs.begin(), udegs.end());
    std::vector<VecPoly> syz = syzygies(U.target, cols, degs);
    std::vector<Poly> q;
    for (const auto& s : syz) {
      Poly a = s.component(0);
      if (!a.is_zero()) q.push_back(std::move(a));
    }
    quotients.push_back(std::move(q));
  }

  IdealGB ann = ideal_gb(S, ideal_intersection(S, quotients));
  std::lock_guard<std::mutex> lk(mu_);
  if (!ann_) ann_ = std::move(ann);
  return *ann_;
}

void Module::serialize(Fnv1a& h) const {
  R_->poly_ring()->fingerprint(h);
  h.feed("/I");
  for (const auto& g : R_->defining().g) g.fingerprint(h);
  h.feed("rows");
  for (int d : row_degs_) h.feed_int(d);
  h.feed("cols");
  for (int d : col_degs_) h.feed_int(d);
  for (const auto& p : rel_.a) p.fingerprint(h);
}

uint64_t Module::fingerprint() const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    if (fpr_) return *fpr_;
  }
  Fnv1a h;
  minimal()->serialize(h);
  uint64_t v = h.value();
  std::lock_guard<std::mutex> lk(mu_);
  fpr_ = v;
  return v;
}

int Module::hilbert(int d) const { return std_monomial_count(minimal()->relation_gb(), d); }

std::string Module::str() const {
  std::ostringstream os;
  os << "coker[" << rel_.rows << "x" << rel_.cols << "; degrees (";
  for (size_t i = 0; i < row_degs_.size(); ++i) os << (i ? "," : "") << row_degs_[i];
  os << ")](";
  for (int i = 0; i < rel_.rows; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < rel_.cols; ++j) os << (j ? ", " : "") << rel_.at(i, j).str();
  }
  os << ") over " << R_->describe();
  return os.str();
}

// ===== constructors and operations =====

ModulePtr free_module(QRingPtr R, std::vector<int> shifts) {
  const int r = static_cast<int>(shifts.size());
  return Module::make(std::move(R), std::move(shifts), PolyMatrix::zero(r, 0), std::vector<int>{},
                      true);
}

ModulePtr ring_as_module(const QRingPtr& R) { return free_module(R, {0}); }

ModulePtr cyclic_module(QRingPtr R, const std::vector<Poly>& ideal_gens, int shift) {
  PolyMatrix m = PolyMatrix::zero(1, static_cast<int>(ideal_gens.size()));
  for (int j = 0; j < m.cols; ++j) m.at(0, j) = ideal_gens[j];
  return Module::make(std::move(R), {shift}, std::move(m));
}

ModulePtr residue_field(const QRingPtr& R) {
  const RingPtr& S = R->poly_ring();
  std::vector<Poly> vars;
  for (int i = 0; i < S->nvars(); ++i) vars.push_back(var_poly(S, i));
  return cyclic_module(R, vars);
}

ModulePtr tensor(const ModulePtr& M, const ModulePtr& N) {
  require_same_ring(*M, *N);
  ModulePtr A = M->minimal(), B = N->minimal();
  const int a0 = A->ngens(), b0 = B->ngens();
  const int a1 = A->nrels(), b1 = B->nrels();
  std::vector<int> rd(size_t(a0) * b0);
  for (int i = 0; i < a0; ++i)
    for (int j = 0; j < b0; ++j) rd[size_t(i) * b0 + j] = A->row_degs()[i] + B->row_degs()[j];

  PolyMatrix m = PolyMatrix::zero(a0 * b0, a1 * b0 + a0 * b1);
  std::vector<int> cd(m.cols);
  // A (x) id
  for (int c = 0; c < a1; ++c)
    for (int j = 0; j < b0; ++j) {
      int col = c * b0 + j;
      cd[col] = A->col_degs()[c] + B->row_degs()[j];
      for (int i = 0; i < a0; ++i) m.at(i * b0 + j, col) = A->rel().at(i, c);
    }
  // id (x) B
  for (int i = 0; i < a0; ++i)
    for (int d = 0; d < b1; ++d) {
      int col = a1 * b0 + i * b1 + d;
      cd[col] = A->row_degs()[i] + B->col_degs()[d];
      for (int j = 0; j < b0; ++j) m.at(i * b0 + j, col) = B->rel().at(j, d);
    }
  return Module::make(M->ring(), std::move(rd), std::move(m), cd)->minimal();
}

ModulePtr direct_sum(const ModulePtr& M, const ModulePtr& N) {
  require_same_ring(*M, *N);
  std::vector<int> rd = M->row_degs();
  rd.insert(rd.end(), N->row_degs().begin(), N->row_degs().end());
  std::vector<int> cd = M->col_degs();
  cd.insert(cd.end(), N->col_degs().begin(), N->col_degs().end());
  PolyMatrix m = PolyMatrix::zero(M->ngens() + N->ngens(), M->nrels() + N->nrels());
  for (int i = 0; i < M->ngens(); ++i)
    for (int j = 0; j < M->nrels(); ++j) m.at(i, j) = M->rel().at(i, j);
  for (int i = 0; i < N->ngens(); ++i)
    for (int j = 0; j < N->nrels(); ++j) m.at(M->ngens() + i, M->nrels() + j) = N->rel().at(i, j);
  return Module::make(M->ring(), std::move(rd), std::move(m), cd);
}

ModulePtr shift_module(const ModulePtr& M, int d) {
  std::vector<int> rd = M->row_degs(), cd = M->col_degs();
  for (int& v : rd) v += d;
  for (int& v : cd) v += d;
  return Module::make(M->ring(), std::move(rd), M->rel(), cd, M->minimal_flag());
}

ModulePtr lift_to_ambient(const ModulePtr& M) {
  const QRingPtr& R = M->ring();
  if (R->is_ambient()) return M;
  QRingPtr S0 = R->ambient();
  const auto& ig = R->defining().g;
  PolyMatrix m = PolyMatrix::zero(M->ngens(), M->nrels() + M->ngens() * (int)ig.size());
  std::vector<int> cd = M->col_degs();
  for (int i = 0; i < M->ngens(); ++i)
    for (int j = 0; j < M->nrels(); ++j) m.at(i, j) = M->rel().at(i, j);
  int col = M->nrels();
  for (const auto& g : ig) {
    int gd = *g.homogeneous_degree();
    for (int t = 0; t < M->ngens(); ++t, ++col) {
      m.at(t, col) = g;
      cd.push_back(gd + M->row_degs()[t]);
    }
  }
  return Module::make(S0, M->row_degs(), std::move(m), cd);
}

namespace {
// 0th Fitting ideal generators (maximal minors), used only as a membership
// pre-filter; skipped when the matrix is too wide to enumerate cheaply.
std::optional<std::vector<Poly>> fitting0(const Module& m) {
  const int r = m.ngens(), c = m.nrels();
  if (r == 0 || r > 3 || c < r || c > 8) return std::nullopt;
  std::vector<Poly> out;
  auto det = [&](auto&& self, std::vector<int> rows, std::vector<int> cols) -> Poly {
    if (rows.size() == 1) return m.rel().at(rows[0], cols[0]);
    Poly acc(m.ring()->poly_ring());
    for (size_t k = 0; k < cols.size(); ++k) {
      std::vector<int> subr(rows.begin() + 1, rows.end());
      std::vector<int> subc = cols;
      subc.erase(subc.begin() + k);
      Poly sub = self(self, subr, subc);
      Poly term = m.rel().at(rows[0], cols[k]) * sub;
      acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  std::vector<int> allr(r);
  std::iota(allr.begin(), allr.end(), 0);
  std::vector<int> comb(r);
  std::iota(comb.begin(), comb.end(), 0);
  for (;;) {
    out.push_back(det(det, allr, comb));
    int i = r - 1;
    while (i >= 0 && comb[i] == c - r + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
  }
  return out;
}
}  // namespace

bool support_contains(const ModulePtr& M, const ModulePtr& N) {
  require_same_ring(*M, *N);
  require_nonzero(*M, "support_contains");
  require_nonzero(*N, "support_contains");
  const auto& annN = N->annihilator_ideal();

  // Fitting pre-filter: rad(Fitt_0 M) = rad(ann M), membership there suffices.
  if (auto fit = fitting0(*M->minimal())) {
    std::vector<Poly> gens = *fit;
    for (const auto& g : M->ring()->defining().g) gens.push_back(g);
    bool all = true;
    for (const auto& g : annN.g)
      if (!radical_membership(g, gens)) {
        all = false;
        break;
      }
    if (all) return true;
  }

  const auto& annM = M->annihilator_ideal();
  for (const auto& g : annN.g)
    if (!radical_membership(g, annM.g)) return false;
  return true;
}

SupportRelation support_relation(const ModulePtr& M, const ModulePtr& N) {
  SupportRelation r{};
  r.contained = support_contains(M, N);
  std::vector<Poly> sum = M->annihilator_ideal().g;
  const auto& b = N->annihilator_ideal().g;
  sum.insert(sum.end(), b.begin(), b.end());
  r.disjoint_up_to_irrelevant = krull_dimension(ideal_gb(M->ring()->poly_ring(), sum)) <= 0;
  return r;
}

bool hilbert_agree(const ModulePtr& M, const ModulePtr& N, int window) {
  int lo = 0;
  for (int d : M->row_degs()) lo = std::min(lo, d);
  for (int d : N->row_degs()) lo = std::min(lo, d);
  for (int d = lo; d <= window; ++d)
    if (M->hilbert(d) != N->hilbert(d)) return false;
  return true;
}

}  // namespace cmw

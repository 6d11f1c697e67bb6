#include "cmw/resolution.hpp"

#include <algorithm>
#include <sstream>

namespace cmw {

int default_bound(const QRingPtr& R) { return 2 * R->nvars() + 4; }

namespace {

std::vector<VecPoly> matrix_cols(const RingPtr& S, const PolyMatrix& m) {
  ModOrder plain{S.get(), -1};
  std::vector<VecPoly> cols;
  cols.reserve(m.cols);
  for (int j = 0; j < m.cols; ++j) {
    std::vector<MTerm> ts;
    for (int i = 0; i < m.rows; ++i)
      for (const auto& t : m.at(i, j).terms()) ts.push_back({t.c, t.m, i});
    cols.push_back(VecPoly::from_terms(S, std::move(ts), plain));
  }
  return cols;
}

std::vector<VecPoly> iblock(const QRing& R, int rank) {
  ModOrder plain{R.poly_ring().get(), -1};
  std::vector<VecPoly> out;
  for (const auto& g : R.defining().g)
    for (int t = 0; t < rank; ++t) out.push_back(VecPoly::embed(g, t, plain));
  return out;
}

// Syzygies over R of the columns of `m` sitting in the free module with
// `level_shifts`: representatives reduced mod I, zero classes dropped.
std::vector<VecPoly> syz_over(const QRing& R, const std::vector<int>& level_shifts,
                              const PolyMatrix& m, const std::vector<int>& coldegs) {
  const RingPtr& S = R.poly_ring();
  FreeMod tgt{S, level_shifts};
  std::vector<VecPoly> cols = matrix_cols(S, m);
  std::vector<int> degs = coldegs;
  for (const auto& g : R.defining().g) {
    int gd = *g.homogeneous_degree();
    ModOrder plain{S.get(), -1};
    for (int t = 0; t < tgt.rank(); ++t) {
      cols.push_back(VecPoly::embed(g, t, plain));
      degs.push_back(gd + level_shifts[t]);
    }
  }
  std::vector<VecPoly> syz = syzygies(tgt, cols, degs);

  const int keep = m.cols;
  ModOrder plain{S.get(), -1};
  std::vector<VecPoly> out;
  for (const auto& s : syz) {
    std::vector<MTerm> ts;
    for (const auto& t : s.terms())
      if (t.comp < keep) {
        // reduce the coefficient mod I componentwise below
        ts.push_back(t);
      }
    VecPoly v = VecPoly::from_terms(S, std::move(ts), plain);
    if (v.is_zero()) continue;
    // normal form mod I in every coordinate
    std::vector<MTerm> nfts;
    for (int c = 0; c < keep; ++c) {
      Poly p = R.nf(v.component(c));
      for (const auto& t : p.terms()) nfts.push_back({t.c, t.m, c});
    }
    VecPoly w = VecPoly::from_terms(S, std::move(nfts), plain);
    if (!w.is_zero()) out.push_back(std::move(w));
  }
  return out;
}

struct StepResult {
  PolyMatrix m;
  std::vector<int> degs;
};

// One resolution step: minimal generators of the syzygies of diff's columns.
StepResult syzygy_step(const QRing& R, const std::vector<int>& level_shifts, const PolyMatrix& m,
                       const std::vector<int>& coldegs, bool minimal_select) {
  const RingPtr& S = R.poly_ring();
  std::vector<VecPoly> syz = syz_over(R, level_shifts, m, coldegs);
  FreeMod tgt{S, coldegs};
  std::vector<int> degs;
  for (const auto& s : syz) degs.push_back(*s.homogeneous_degree(tgt));

  std::vector<VecPoly> chosen;
  std::vector<int> chosen_degs;
  if (minimal_select) {
    std::vector<int> kept = minimal_generator_indices(tgt, syz, degs, iblock(R, tgt.rank()));
    for (int k : kept) {
      chosen.push_back(syz[k]);
      chosen_degs.push_back(degs[k]);
    }
  } else {
    chosen = std::move(syz);
    chosen_degs = std::move(degs);
  }

  StepResult out;
  out.m = matrix_from_cols(S, tgt.rank(), chosen);
  out.degs = std::move(chosen_degs);
  return out;
}

Resolution compute_resolution(const ModulePtr& M, bool over_ambient, int bound, bool minimal) {
  ModulePtr base = over_ambient ? lift_to_ambient(M)->minimal() : M->minimal();
  const QRingPtr& R = base->ring();
  if (over_ambient) bound = std::max(bound, R->nvars() + 1);

  Resolution res;
  res.over = R;
  res.minimal = minimal;
  res.shifts.push_back(base->row_degs());
  if (base->nrels() > 0) {
    res.diff.push_back(base->rel());
    res.shifts.push_back(base->col_degs());
  } else {
    res.terminated = true;
    return res;
  }

  while (!res.terminated && res.length() < bound) {
    int L = res.length();
    StepResult next = syzygy_step(*R, res.shifts[L - 1], res.diff[L - 1], res.shifts[L], minimal);
    if (next.m.cols == 0) {
      res.terminated = true;
      break;
    }
    res.diff.push_back(std::move(next.m));
    res.shifts.push_back(std::move(next.degs));
    if (over_ambient && res.length() > R->nvars())
      fail_internal("ambient resolution exceeds the variable count");
  }
  return res;
}

Resolution extend_resolution(Resolution res, int bound) {
  const QRingPtr& R = res.over;
  while (!res.terminated && res.length() < bound) {
    int L = res.length();
    StepResult next =
        syzygy_step(*R, res.shifts[L - 1], res.diff[L - 1], res.shifts[L], res.minimal);
    if (next.m.cols == 0) {
      res.terminated = true;
      break;
    }
    res.diff.push_back(std::move(next.m));
    res.shifts.push_back(std::move(next.degs));
  }
  return res;
}

}  // namespace

Resolution resolve_raw(const ModulePtr& M, bool over_ambient, int bound) {
  Resolution r = compute_resolution(M, over_ambient, bound, /*minimal=*/false);
  r.minimal = false;
  return r;
}

ResolutionCache& ResolutionCache::instance() {
  static ResolutionCache c;
  return c;
}

void ResolutionCache::clear() {
  std::lock_guard<std::mutex> lk(mu_);
  map_.clear();
}

ResolutionPtr ResolutionCache::get(const ModulePtr& M, bool over_ambient, int bound) {
  const std::pair<uint64_t, bool> key{M->fingerprint(), over_ambient};
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = map_.find(key);
    if (it != map_.end() && (it->second->terminated || it->second->length() >= bound))
      return it->second;
  }

  std::string disk_key = hex64(key.first) + (over_ambient ? "_S" : "_R");
  ResolutionPtr computed;
  if (load_hook) {
    if (auto blob = load_hook(disk_key)) {
      QRingPtr over = over_ambient ? M->ring()->ambient() : M->ring();
      if (auto res = Resolution::deserialize(over, *blob)) {
        if (res->terminated || res->length() >= bound)
          computed = std::make_shared<Resolution>(std::move(*res));
        else
          computed = std::make_shared<Resolution>(extend_resolution(std::move(*res), bound));
      }
    }
  }
  if (!computed)
    computed = std::make_shared<Resolution>(
        compute_resolution(M, over_ambient, bound, /*minimal=*/true));

  if (store_hook) store_hook(disk_key, computed->serialize());
  std::lock_guard<std::mutex> lk(mu_);
  auto it = map_.find(key);
  if (it == map_.end() || (!it->second->terminated && it->second->length() < computed->length()))
    map_[key] = computed;
  return map_[key];
}

ResolutionPtr resolve(const ModulePtr& M, bool over_ambient, int bound) {
  return ResolutionCache::instance().get(M, over_ambient, bound);
}

PdResult projective_dimension(const ModulePtr& M, bool over_ambient, int bound) {
  require_nonzero(*M, "projective_dimension");
  ResolutionPtr res = resolve(M, over_ambient, bound);
  PdResult out;
  out.exact = res->terminated;
  out.value = res->length();
  if (!out.exact) out.value = std::max(out.value, bound);
  return out;
}

std::string PdResult::str() const {
  return exact ? std::to_string(value) : ("greater-than(" + std::to_string(value) + ")");
}

BettiTable betti_of(const Resolution& res) {
  CMW_CHECK(res.minimal, "Betti numbers need a minimal resolution");
  BettiTable t;
  for (size_t i = 0; i < res.shifts.size(); ++i)
    for (int d : res.shifts[i]) t.ranks[{static_cast<int>(i), d}]++;
  return t;
}

BettiTable betti(const ModulePtr& M, bool over_ambient, int bound) {
  return betti_of(*resolve(M, over_ambient, bound));
}

std::vector<int> BettiTable::total() const {
  std::vector<int> out;
  for (const auto& [k, v] : ranks) {
    if (static_cast<int>(out.size()) <= k.first) out.resize(k.first + 1, 0);
    out[k.first] += v;
  }
  return out;
}

std::string BettiTable::str() const {
  std::ostringstream os;
  for (const auto& [k, v] : ranks) os << "b(" << k.first << "," << k.second << ")=" << v << " ";
  return os.str();
}

bool verify_complex(const Resolution& res) {
  const QRing& R = *res.over;
  for (int k = 0; k + 1 < res.length(); ++k) {
    const PolyMatrix& A = res.diff[k];
    const PolyMatrix& B = res.diff[k + 1];
    for (int i = 0; i < A.rows; ++i)
      for (int j = 0; j < B.cols; ++j) {
        Poly acc(R.poly_ring());
        for (int t = 0; t < A.cols; ++t) acc = acc + A.at(i, t) * B.at(t, j);
        if (!R.nf(acc).is_zero()) return false;
      }
  }
  return true;
}

bool verify_exactness(const Resolution& res) {
  const QRing& R = *res.over;
  const RingPtr& S = R.poly_ring();
  // the kernel at the last computed level is known only for terminated chains
  const int last = res.terminated ? res.length() - 1 : res.length() - 2;
  for (int k = 0; k <= last; ++k) {
    // kernel of diff[k] vs image of diff[k+1] inside F_{k+1}
    std::vector<VecPoly> ker = syz_over(R, res.shifts[k], res.diff[k],
                                        res.shifts[k + 1]);
    std::vector<VecPoly> im =
        (k + 1 < res.length()) ? matrix_cols(S, res.diff[k + 1]) : std::vector<VecPoly>{};
    FreeMod tgt{S, res.shifts[k + 1]};
    std::vector<VecPoly> a = im, b = ker;
    auto ib = iblock(R, tgt.rank());
    a.insert(a.end(), ib.begin(), ib.end());
    b.insert(b.end(), ib.begin(), ib.end());
    GBasis ga = module_gb(tgt, a, -1);
    GBasis gbK = module_gb(tgt, b, -1);
    if (!ga.same_basis(gbK)) return false;
  }
  return true;
}

Resolution minimalize(Resolution res) {
  const QRing& R = *res.over;
  const RingPtr& S = R.poly_ring();
  const Field& F = S->field();

  bool changed = true;
  while (changed) {
    changed = false;
    for (int d = 0; d < res.length() && !changed; ++d) {
      PolyMatrix& m = res.diff[d];
      int pr = -1, pc = -1;
      for (int i = 0; i < m.rows && pr < 0; ++i)
        for (int j = 0; j < m.cols; ++j)
          if (!m.at(i, j).is_zero() && m.at(i, j).lead().m.is_one()) {
            pr = i;
            pc = j;
            break;
          }
      if (pr < 0) continue;
      changed = true;

      Coeff uinv = F.inv(m.at(pr, pc).lead().c);
      // column operations clearing row pr, propagated to diff[d+1] rows
      for (int b = 0; b < m.cols; ++b) {
        if (b == pc || m.at(pr, b).is_zero()) continue;
        Poly lam = m.at(pr, b).scale(uinv);
        for (int i = 0; i < m.rows; ++i) m.at(i, b) = R.nf(m.at(i, b) - lam * m.at(i, pc));
        if (d + 1 < res.length()) {
          PolyMatrix& nx = res.diff[d + 1];
          for (int j = 0; j < nx.cols; ++j)
            nx.at(pc, j) = R.nf(nx.at(pc, j) + lam * nx.at(b, j));
        }
      }
      // row operations clearing column pc, propagated to diff[d-1] columns
      for (int a = 0; a < m.rows; ++a) {
        if (a == pr || m.at(a, pc).is_zero()) continue;
        Poly mu = m.at(a, pc).scale(uinv);
        m.at(a, pc) = Poly(S);  // the pivot row has a single entry left
        if (d - 1 >= 0) {
          PolyMatrix& pv = res.diff[d - 1];
          for (int i = 0; i < pv.rows; ++i) pv.at(i, pr) = R.nf(pv.at(i, pr) + mu * pv.at(i, a));
        }
      }

      // drop basis element pr of F_d and pc of F_{d+1}
      auto drop_row = [&](PolyMatrix& mm, int r) {
        PolyMatrix q = PolyMatrix::zero(mm.rows - 1, mm.cols);
        for (int i = 0, qi = 0; i < mm.rows; ++i) {
          if (i == r) continue;
          for (int j = 0; j < mm.cols; ++j) q.at(qi, j) = std::move(mm.at(i, j));
          ++qi;
        }
        mm = std::move(q);
      };
      auto drop_col = [&](PolyMatrix& mm, int c) {
        PolyMatrix q = PolyMatrix::zero(mm.rows, mm.cols - 1);
        for (int i = 0; i < mm.rows; ++i)
          for (int j = 0, qj = 0; j < mm.cols; ++j) {
            if (j == c) continue;
            q.at(i, qj++) = std::move(mm.at(i, j));
          }
        mm = std::move(q);
      };

      if (d + 1 < res.length()) {
        PolyMatrix& nx = res.diff[d + 1];
        for (int j = 0; j < nx.cols; ++j)
          CMW_CHECK(R.nf(nx.at(pc, j)).is_zero(), "minimalize: stale row after cancellation");
        drop_row(nx, pc);
      }
      if (d - 1 >= 0) {
        PolyMatrix& pv = res.diff[d - 1];
        for (int i = 0; i < pv.rows; ++i)
          CMW_CHECK(R.nf(pv.at(i, pr)).is_zero(), "minimalize: stale column after cancellation");
        drop_col(pv, pr);
      }
      drop_row(m, pr);
      drop_col(m, pc);
      res.shifts[d].erase(res.shifts[d].begin() + pr);
      res.shifts[d + 1].erase(res.shifts[d + 1].begin() + pc);
    }
  }

  // trailing zero differentials disappear from the reported complex
  while (res.length() > 0 && res.shifts.back().empty()) {
    res.diff.pop_back();
    res.shifts.pop_back();
    res.terminated = true;
  }
  res.minimal = true;
  CMW_CHECK(verify_complex(res), "minimalize broke the complex");
  return res;
}

// ===== serialization (cache files) =====

std::string Resolution::serialize() const {
  std::ostringstream os;
  os << "cmwres 1\n";
  os << "flags " << (minimal ? 1 : 0) << " " << (terminated ? 1 : 0) << "\n";
  os << "levels " << shifts.size() << "\n";
  for (const auto& sh : shifts) {
    os << "shift " << sh.size();
    for (int d : sh) os << " " << d;
    os << "\n";
  }
  for (const auto& m : diff) {
    os << "diff " << m.rows << " " << m.cols << "\n";
    for (const auto& p : m.a) {
      os << p.terms().size();
      for (const auto& t : p.terms()) {
        os << " " << t.c.get_str();
        for (int i = 0; i < kMaxVars; ++i) os << " " << t.m.e[i];
      }
      os << "\n";
    }
  }
  return os.str();
}

std::optional<Resolution> Resolution::deserialize(QRingPtr over, const std::string& blob) {
  std::istringstream is(blob);
  std::string tag;
  int version = 0;
  if (!(is >> tag >> version) || tag != "cmwres" || version != 1) return std::nullopt;
  Resolution res;
  res.over = over;
  int mn = 0, tm = 0;
  size_t levels = 0;
  if (!(is >> tag >> mn >> tm) || tag != "flags") return std::nullopt;
  if (!(is >> tag >> levels) || tag != "levels") return std::nullopt;
  res.minimal = mn != 0;
  res.terminated = tm != 0;
  for (size_t k = 0; k < levels; ++k) {
    size_t cnt = 0;
    if (!(is >> tag >> cnt) || tag != "shift") return std::nullopt;
    std::vector<int> sh(cnt);
    for (auto& d : sh)
      if (!(is >> d)) return std::nullopt;
    res.shifts.push_back(std::move(sh));
  }
  const RingPtr& S = over->poly_ring();
  for (size_t k = 0; k + 1 < levels; ++k) {
    int rows = 0, cols = 0;
    if (!(is >> tag >> rows >> cols) || tag != "diff") return std::nullopt;
    PolyMatrix m = PolyMatrix::zero(rows, cols);
    for (auto& p : m.a) {
      size_t nt = 0;
      if (!(is >> nt)) return std::nullopt;
      std::vector<Term> ts;
      for (size_t t = 0; t < nt; ++t) {
        std::string cs;
        Expo e;
        if (!(is >> cs)) return std::nullopt;
        for (int i = 0; i < kMaxVars; ++i) {
          int v = 0;
          if (!(is >> v)) return std::nullopt;
          e.e[i] = static_cast<uint16_t>(v);
        }
        ts.push_back({Coeff(cs), e});
      }
      p = Poly::from_terms(S, std::move(ts));
    }
    res.diff.push_back(std::move(m));
  }
  if (res.diff.size() + 1 != res.shifts.size()) return std::nullopt;
  return res;
}

}  // namespace cmw

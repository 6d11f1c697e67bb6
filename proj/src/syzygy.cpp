#include "cmw/syzygy.hpp"

namespace cmw {

std::vector<VecPoly> syzygies(const FreeMod& target, const std::vector<VecPoly>& cols,
                              const std::vector<int>& coldegs, const GBOptions& opt) {
  CMW_CHECK(cols.size() == coldegs.size(), "syzygies: column/degree mismatch");
  const int r = target.rank();
  FreeMod big = stack(target, coldegs);
  ModOrder big_ord{target.ring.get(), r};

  std::vector<VecPoly> gens;
  gens.reserve(cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    std::vector<MTerm> ts = cols[j].terms();
    ts.push_back({target.ring->field().one(), Expo{}, r + static_cast<int>(j)});
    gens.push_back(VecPoly::from_terms(target.ring, std::move(ts), big_ord));
  }

  GBasis gb = module_gb(big, gens, r, opt);

  FreeMod syz_target{target.ring, coldegs};
  ModOrder plain{target.ring.get(), -1};
  std::vector<VecPoly> out;
  for (const auto& g : gb.g) {
    if (g.has_component_below(r)) continue;
    VecPoly s = VecPoly::from_terms(target.ring, g.strip_components(r).terms(), plain);
    CMW_CHECK(apply_columns(cols, s, plain).is_zero(), "syzygy does not annihilate the columns");
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<VecPoly> preimage(const FreeMod& w1, const FreeMod& w2,
                              const std::vector<VecPoly>& tcols,
                              const std::vector<VecPoly>& relations,
                              const std::vector<int>& reldegs, const GBOptions& opt) {
  CMW_CHECK(static_cast<int>(tcols.size()) == w1.rank(), "preimage: map has wrong rank");
  std::vector<VecPoly> cols = tcols;
  std::vector<int> degs = w1.shifts;  // column j = T(e_j) has degree shifts1[j]
  cols.insert(cols.end(), relations.begin(), relations.end());
  degs.insert(degs.end(), reldegs.begin(), reldegs.end());

  std::vector<VecPoly> syz = syzygies(w2, cols, degs, opt);

  ModOrder plain{w1.ring.get(), -1};
  std::vector<VecPoly> out;
  for (const auto& s : syz) {
    std::vector<MTerm> ts;
    for (const auto& t : s.terms())
      if (t.comp < w1.rank()) ts.push_back(t);
    VecPoly v = VecPoly::from_terms(w1.ring, std::move(ts), plain);
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace cmw

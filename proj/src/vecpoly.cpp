#include "cmw/vecpoly.hpp"

#include <algorithm>
#include <sstream>

namespace cmw {

FreeMod stack(const FreeMod& a, const std::vector<int>& more_shifts) {
  FreeMod r = a;
  r.shifts.insert(r.shifts.end(), more_shifts.begin(), more_shifts.end());
  return r;
}

VecPoly VecPoly::from_terms(RingPtr ring, std::vector<MTerm> terms, const ModOrder& ord) {
  VecPoly v(ring);
  std::sort(terms.begin(), terms.end(),
            [&](const MTerm& a, const MTerm& b) { return ord.cmp(a, b) > 0; });
  const Field& F = ring->field();
  for (auto& t : terms) {
    Coeff c = F.reduce(t.c);
    if (F.is_zero(c)) continue;
    if (!v.t_.empty() && v.t_.back().m == t.m && v.t_.back().comp == t.comp) {
      v.t_.back().c = F.add(v.t_.back().c, c);
      if (F.is_zero(v.t_.back().c)) v.t_.pop_back();
    } else {
      v.t_.push_back({std::move(c), t.m, t.comp});
    }
  }
  return v;
}

VecPoly VecPoly::unit(RingPtr ring, int comp) {
  VecPoly v(ring);
  v.t_.push_back({ring->field().one(), Expo{}, comp});
  return v;
}

VecPoly VecPoly::embed(const Poly& p, int comp, const ModOrder& ord) {
  std::vector<MTerm> ts;
  ts.reserve(p.terms().size());
  for (const auto& t : p.terms()) ts.push_back({t.c, t.m, comp});
  return from_terms(p.ring(), std::move(ts), ord);
}

VecPoly VecPoly::add(const VecPoly& o, const ModOrder& ord) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  VecPoly r(ring_);
  const Field& F = ring_->field();
  size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    int c = ord.cmp(t_[i], o.t_[j]);
    if (c > 0) {
      r.t_.push_back(t_[i++]);
    } else if (c < 0) {
      r.t_.push_back(o.t_[j++]);
    } else {
      Coeff s = F.add(t_[i].c, o.t_[j].c);
      if (!F.is_zero(s)) r.t_.push_back({std::move(s), t_[i].m, t_[i].comp});
      ++i;
      ++j;
    }
  }
  while (i < t_.size()) r.t_.push_back(t_[i++]);
  while (j < o.t_.size()) r.t_.push_back(o.t_[j++]);
  return r;
}

VecPoly VecPoly::negate() const {
  if (is_zero()) return *this;
  VecPoly r(ring_);
  r.t_.reserve(t_.size());
  const Field& F = ring_->field();
  for (const auto& t : t_) r.t_.push_back({F.neg(t.c), t.m, t.comp});
  return r;
}

VecPoly VecPoly::sub(const VecPoly& o, const ModOrder& ord) const { return add(o.negate(), ord); }

VecPoly VecPoly::mul_term(const Coeff& c, const Expo& m) const {
  const Field& F = ring_->field();
  Coeff cc = F.reduce(c);
  if (F.is_zero(cc)) return VecPoly(ring_);
  VecPoly r(ring_);
  r.t_.reserve(t_.size());
  for (const auto& t : t_) r.t_.push_back({F.mul(t.c, cc), PolyRing::product(t.m, m), t.comp});
  return r;
}

VecPoly VecPoly::monic() const {
  if (is_zero()) return *this;
  const Field& F = ring_->field();
  Coeff inv = F.inv(t_.front().c);
  VecPoly r(ring_);
  r.t_.reserve(t_.size());
  for (const auto& t : t_) r.t_.push_back({F.mul(t.c, inv), t.m, t.comp});
  return r;
}

VecPoly VecPoly::drop_lead() const {
  VecPoly r(ring_);
  r.t_.assign(t_.begin() + 1, t_.end());
  return r;
}

std::optional<int> VecPoly::homogeneous_degree(const FreeMod& target) const {
  if (is_zero()) return std::nullopt;
  int d = ring_->wdeg(t_.front().m) + target.shifts.at(t_.front().comp);
  for (const auto& t : t_)
    if (ring_->wdeg(t.m) + target.shifts.at(t.comp) != d) return std::nullopt;
  return d;
}

Poly VecPoly::component(int t) const {
  std::vector<Term> ts;
  for (const auto& mt : t_)
    if (mt.comp == t) ts.push_back({mt.c, mt.m});
  return Poly::from_terms(ring_, std::move(ts));
}

VecPoly VecPoly::strip_components(int k) const {
  VecPoly r(ring_);
  for (const auto& t : t_) {
    CMW_CHECK(t.comp >= k, "strip_components: live major-block term");
    r.t_.push_back({t.c, t.m, t.comp - k});
  }
  return r;  // relative order of a fixed block is preserved
}

VecPoly VecPoly::lift_components(int k) const {
  VecPoly r(ring_);
  for (const auto& t : t_) r.t_.push_back({t.c, t.m, t.comp + k});
  return r;
}

bool VecPoly::has_component_below(int k) const {
  for (const auto& t : t_)
    if (t.comp < k) return true;
  return false;
}

bool VecPoly::operator==(const VecPoly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (!(t_[i].m == o.t_[i].m) || t_[i].comp != o.t_[i].comp || t_[i].c != o.t_[i].c) return false;
  return true;
}

void VecPoly::fingerprint(Fnv1a& h) const {
  h.feed_int(static_cast<int64_t>(t_.size()));
  for (const auto& t : t_) {
    h.feed(t.c.get_str());
    h.feed_int(t.comp);
    for (int i = 0; i < kMaxVars; ++i) h.feed_int(t.m.e[i]);
  }
}

std::string VecPoly::str(const FreeMod& target) const {
  std::ostringstream os;
  os << "(";
  for (int t = 0; t < target.rank(); ++t) {
    if (t) os << ", ";
    os << component(t).str();
  }
  os << ")";
  return os.str();
}

}  // namespace cmw

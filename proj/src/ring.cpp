#include "cmw/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cmw {

std::string order_name(TermOrder o) {
  switch (o) {
    case TermOrder::lex: return "lex";
    case TermOrder::grlex: return "grlex";
    case TermOrder::grevlex: return "grevlex";
  }
  return "?";
}

PolyRing::PolyRing(Field f, std::vector<std::string> vars, TermOrder order, std::vector<int> weights)
    : field_(f), vars_(std::move(vars)), weights_(std::move(weights)), order_(order) {
  standard_ = true;
  for (int w : weights_)
    if (w != 1) standard_ = false;
}

RingPtr PolyRing::make(Field field, std::vector<std::string> vars, TermOrder order,
                       std::vector<int> weights) {
  if (vars.size() > kMaxVars)
    fail_kernel("at most " + std::to_string(kMaxVars) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) fail_kernel("empty variable name");
    if (!seen.insert(v).second) fail_kernel("duplicate variable name: " + v);
  }
  if (weights.empty()) weights.assign(vars.size(), 1);
  if (weights.size() != vars.size()) fail_kernel("weight list does not match variable list");
  for (int w : weights)
    if (w <= 0) fail_kernel("variable weights must be positive");
  return RingPtr(new PolyRing(field, std::move(vars), order, std::move(weights)));
}

int PolyRing::cmp(const Expo& a, const Expo& b) const {
  const int n = nvars();
  switch (order_) {
    case TermOrder::lex: {
      for (int i = 0; i < n; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
      return 0;
    }
    case TermOrder::grlex: {
      int da = wdeg(a), db = wdeg(b);
      if (da != db) return da > db ? 1 : -1;
      for (int i = 0; i < n; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
      return 0;
    }
    case TermOrder::grevlex: {
      int da = wdeg(a), db = wdeg(b);
      if (da != db) return da > db ? 1 : -1;
      for (int i = n - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
      return 0;
    }
  }
  return 0;
}

Expo PolyRing::product(const Expo& a, const Expo& b) {
  Expo r;
  for (int i = 0; i < kMaxVars; ++i) {
    uint32_t s = uint32_t(a.e[i]) + uint32_t(b.e[i]);
    if (s > 0xffff) fail_kernel("exponent overflow");
    r.e[i] = static_cast<uint16_t>(s);
  }
  return r;
}

std::optional<int> PolyRing::var_index(std::string_view name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

std::string PolyRing::monomial_str(const Expo& m) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < nvars(); ++i) {
    if (!m.e[i]) continue;
    if (!first) os << "*";
    os << vars_[i];
    if (m.e[i] > 1) os << "^" << m.e[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

std::string PolyRing::describe() const {
  std::ostringstream os;
  os << "poly(" << field_.describe() << "; ";
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (i) os << ", ";
    os << vars_[i];
    if (weights_[i] != 1) os << "=" << weights_[i];
  }
  os << ") order " << order_name(order_);
  return os.str();
}

void PolyRing::fingerprint(Fnv1a& h) const {
  h.feed(field_.describe());
  h.feed_int(static_cast<int>(order_));
  for (size_t i = 0; i < vars_.size(); ++i) {
    h.feed(vars_[i]);
    h.feed_int(weights_[i]);
  }
}

bool PolyRing::same_ring(const PolyRing& o) const {
  return field_ == o.field_ && vars_ == o.vars_ && weights_ == o.weights_ && order_ == o.order_;
}

std::vector<Expo> PolyRing::monomials_of_degree(int d) const {
  std::vector<Expo> out;
  if (d < 0) return out;
  Expo cur;
  // Depth-first over variables; exponent of each variable bounded by d/w.
  auto rec = [&](auto&& self, int var, int rem) -> void {
    if (var == nvars() - 1) {
      if (rem % weights_[var] == 0) {
        cur.e[var] = static_cast<uint16_t>(rem / weights_[var]);
        out.push_back(cur);
        cur.e[var] = 0;
      }
      return;
    }
    for (int k = rem / weights_[var]; k >= 0; --k) {
      cur.e[var] = static_cast<uint16_t>(k);
      self(self, var + 1, rem - k * weights_[var]);
    }
    cur.e[var] = 0;
  };
  if (nvars() == 0) {
    if (d == 0) out.push_back(Expo{});
    return out;
  }
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [&](const Expo& a, const Expo& b) { return cmp(a, b) > 0; });
  return out;
}

// ===== Poly =====

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  Poly p(ring);
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ring->cmp(a.m, b.m) > 0; });
  const Field& F = ring->field();
  for (auto& t : terms) {
    Coeff c = F.reduce(t.c);
    if (F.is_zero(c)) continue;
    if (!p.t_.empty() && p.t_.back().m == t.m) {
      p.t_.back().c = F.add(p.t_.back().c, c);
      if (F.is_zero(p.t_.back().c)) p.t_.pop_back();
    } else {
      p.t_.push_back({std::move(c), t.m});
    }
  }
  return p;
}

Poly Poly::constant(RingPtr ring, const Coeff& c) {
  return from_terms(std::move(ring), {Term{c, Expo{}}});
}

Poly Poly::monomial(RingPtr ring, const Coeff& c, const Expo& m) {
  return from_terms(std::move(ring), {Term{c, m}});
}

std::optional<int> Poly::homogeneous_degree() const {
  if (is_zero()) return std::nullopt;
  int d = ring_->wdeg(t_.front().m);
  for (const auto& t : t_)
    if (ring_->wdeg(t.m) != d) return std::nullopt;
  return d;
}

Poly Poly::operator+(const Poly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  Poly r(ring_);
  const Field& F = ring_->field();
  size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    int c = ring_->cmp(t_[i].m, o.t_[j].m);
    if (c > 0) {
      r.t_.push_back(t_[i++]);
    } else if (c < 0) {
      r.t_.push_back(o.t_[j++]);
    } else {
      Coeff s = F.add(t_[i].c, o.t_[j].c);
      if (!F.is_zero(s)) r.t_.push_back({std::move(s), t_[i].m});
      ++i;
      ++j;
    }
  }
  while (i < t_.size()) r.t_.push_back(t_[i++]);
  while (j < o.t_.size()) r.t_.push_back(o.t_[j++]);
  return r;
}

Poly Poly::negate() const {
  if (is_zero()) return *this;
  Poly r(ring_);
  r.t_.reserve(t_.size());
  const Field& F = ring_->field();
  for (const auto& t : t_) r.t_.push_back({F.neg(t.c), t.m});
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + o.negate(); }

Poly Poly::scale(const Coeff& c) const {
  const Field& F = ring_->field();
  if (F.is_zero(F.reduce(c))) return Poly(ring_);
  Poly r(ring_);
  r.t_.reserve(t_.size());
  for (const auto& t : t_) r.t_.push_back({F.mul(t.c, c), t.m});
  return r;
}

Poly Poly::mul_term(const Coeff& c, const Expo& m) const {
  const Field& F = ring_->field();
  Coeff cc = F.reduce(c);
  if (F.is_zero(cc)) return Poly(ring_);
  Poly r(ring_);
  r.t_.reserve(t_.size());
  for (const auto& t : t_) r.t_.push_back({F.mul(t.c, cc), PolyRing::product(t.m, m)});
  return r;  // multiplying by a monomial preserves strict ordering
}

Poly Poly::operator*(const Poly& o) const {
  Poly acc(ring_);
  for (const auto& t : o.t_) acc = acc + mul_term(t.c, t.m);
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(ring_->field().inv(t_.front().c));
}

bool Poly::operator==(const Poly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (!(t_[i].m == o.t_[i].m) || t_[i].c != o.t_[i].c) return false;
  return true;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  const Field& F = ring_->field();
  bool first = true;
  for (const auto& t : t_) {
    Coeff c = t.c;
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (neg) c = -c;
    bool unit_coeff = (c == 1);
    if (!unit_coeff || t.m.is_one()) os << F.to_string(c);
    if (!t.m.is_one()) {
      if (!unit_coeff) os << "*";
      os << ring_->monomial_str(t.m);
    }
    first = false;
  }
  return os.str();
}

void Poly::fingerprint(Fnv1a& h) const {
  h.feed_int(static_cast<int64_t>(t_.size()));
  for (const auto& t : t_) {
    h.feed(t.c.get_str());
    for (int i = 0; i < kMaxVars; ++i) h.feed_int(t.m.e[i]);
  }
}

Poly var_poly(const RingPtr& ring, int i) {
  return Poly::monomial(ring, ring->field().one(), ring->var_expo(i));
}

}  // namespace cmw

#ifndef CMW_RING_HPP
#define CMW_RING_HPP

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cmw/field.hpp"

namespace cmw {

inline constexpr int kMaxVars = 8;

// Packed exponent vector. The ring knows how many slots are live.
struct Expo {
  std::array<uint16_t, kMaxVars> e{};

  bool operator==(const Expo& o) const { return e == o.e; }
  bool is_one() const {
    for (auto v : e)
      if (v) return false;
    return true;
  }
};

enum class TermOrder { lex, grlex, grevlex };

std::string order_name(TermOrder o);

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// Graded polynomial ring: field, named variables with positive weights, and a
// global monomial order. Degree-first orders compare the weighted degree.
class PolyRing {
 public:
  static RingPtr make(Field field, std::vector<std::string> vars, TermOrder order,
                      std::vector<int> weights = {});

  const Field& field() const { return field_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<int>& weights() const { return weights_; }
  TermOrder order() const { return order_; }
  bool standard_graded() const { return standard_; }

  int wdeg(const Expo& m) const {
    int d = 0;
    for (int i = 0; i < nvars(); ++i) d += weights_[i] * m.e[i];
    return d;
  }

  // Trichotomy: +1 if a > b in the ring order, 0 if equal, -1 otherwise.
  int cmp(const Expo& a, const Expo& b) const;

  static bool divides(const Expo& a, const Expo& b) {  // a | b
    for (int i = 0; i < kMaxVars; ++i)
      if (a.e[i] > b.e[i]) return false;
    return true;
  }
  static Expo quotient(const Expo& b, const Expo& a) {  // b / a
    Expo q;
    for (int i = 0; i < kMaxVars; ++i) q.e[i] = static_cast<uint16_t>(b.e[i] - a.e[i]);
    return q;
  }
  static Expo product(const Expo& a, const Expo& b);
  static Expo lcm(const Expo& a, const Expo& b) {
    Expo l;
    for (int i = 0; i < kMaxVars; ++i) l.e[i] = std::max(a.e[i], b.e[i]);
    return l;
  }
  static bool coprime(const Expo& a, const Expo& b) {
    for (int i = 0; i < kMaxVars; ++i)
      if (a.e[i] && b.e[i]) return false;
    return true;
  }

  Expo var_expo(int i) const {
    Expo m;
    m.e[i] = 1;
    return m;
  }
  std::optional<int> var_index(std::string_view name) const;

  std::string monomial_str(const Expo& m) const;
  std::string describe() const;
  void fingerprint(Fnv1a& h) const;
  bool same_ring(const PolyRing& o) const;

  // All monomials of exact weighted degree d, in descending ring order.
  std::vector<Expo> monomials_of_degree(int d) const;

 private:
  PolyRing(Field f, std::vector<std::string> vars, TermOrder order, std::vector<int> weights);
  Field field_;
  std::vector<std::string> vars_;
  std::vector<int> weights_;
  TermOrder order_;
  bool standard_;
};

struct Term {
  Coeff c;
  Expo m;
};

// Sparse polynomial: terms strictly descending in the ring order, no zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);  // normalizes
  static Poly constant(RingPtr ring, const Coeff& c);
  static Poly monomial(RingPtr ring, const Coeff& c, const Expo& m);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  const Term& lead() const { return t_.front(); }

  // Homogeneous weighted degree; kernels require homogeneity everywhere.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly negate() const;
  Poly scale(const Coeff& c) const;
  Poly mul_term(const Coeff& c, const Expo& m) const;
  Poly monic() const;

  bool operator==(const Poly& o) const;
  std::string str() const;
  void fingerprint(Fnv1a& h) const;

 private:
  RingPtr ring_;
  std::vector<Term> t_;
};

Poly var_poly(const RingPtr& ring, int i);

}  // namespace cmw

#endif

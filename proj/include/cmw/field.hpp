#ifndef CMW_FIELD_HPP
#define CMW_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "cmw/basics.hpp"

namespace cmw {

enum class FieldKind { rationals, prime };

// Coefficient values are always carried as canonical mpq; for F_p they are
// integers in [0, p). All arithmetic goes through Field so the two cases
// share one polynomial stack.
using Coeff = mpq_class;

class Field {
 public:
  static Field rationals() { return Field(FieldKind::rationals, 0); }
  static Field prime(uint32_t p);

  FieldKind kind() const { return kind_; }
  uint32_t characteristic() const { return p_; }

  Coeff zero() const { return Coeff(0); }
  Coeff one() const { return Coeff(1); }
  bool is_zero(const Coeff& a) const { return sgn(a) == 0; }

  Coeff add(const Coeff& a, const Coeff& b) const { return reduce(a + b); }
  Coeff sub(const Coeff& a, const Coeff& b) const { return reduce(a - b); }
  Coeff mul(const Coeff& a, const Coeff& b) const { return reduce(a * b); }
  Coeff neg(const Coeff& a) const { return reduce(-a); }
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

  // Canonicalizes an arbitrary rational into the field (mod p for F_p).
  Coeff reduce(const Coeff& a) const;
  Coeff from_int(long v) const { return reduce(Coeff(v)); }

  std::string to_string(const Coeff& a) const { return a.get_str(); }
  std::string describe() const;
  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }

 private:
  Field(FieldKind k, uint32_t p) : kind_(k), p_(p) {}
  FieldKind kind_;
  uint32_t p_;
};

}  // namespace cmw

#endif

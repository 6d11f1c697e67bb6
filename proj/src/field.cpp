#include "cmw/field.hpp"

#include <sstream>

namespace cmw {

std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

namespace {
bool is_prime_u32(uint32_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}
}  // namespace

Field Field::prime(uint32_t p) {
  if (p < 2 || p >= (1u << 31) || !is_prime_u32(p))
    fail_kernel("prime field characteristic must be a prime in [2, 2^31): got " + std::to_string(p));
  return Field(FieldKind::prime, p);
}

Coeff Field::reduce(const Coeff& a) const {
  if (kind_ == FieldKind::rationals) {
    Coeff r = a;
    r.canonicalize();
    return r;
  }
  // F_p: a = num/den with den invertible mod p.
  mpz_class p(p_);
  mpz_class num = a.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = a.get_den() % p;
  if (den < 0) den += p;
  if (den == 0) fail_kernel("division by p in F_" + std::to_string(p_));
  if (den != 1) {
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      fail_kernel("non-invertible denominator in F_" + std::to_string(p_));
    num = (num * dinv) % p;
  }
  return Coeff(num);
}

Coeff Field::inv(const Coeff& a) const {
  if (is_zero(a)) fail_kernel("division by zero coefficient");
  if (kind_ == FieldKind::rationals) {
    Coeff r = 1 / a;
    r.canonicalize();
    return r;
  }
  mpz_class p(p_), num = a.get_num() % p;
  if (num < 0) num += p;
  mpz_class v;
  if (mpz_invert(v.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
    fail_kernel("division by zero in F_" + std::to_string(p_));
  return Coeff(v);
}

std::string Field::describe() const {
  if (kind_ == FieldKind::rationals) return "Q";
  std::ostringstream os;
  os << "Fp(" << p_ << ")";
  return os.str();
}

}  // namespace cmw

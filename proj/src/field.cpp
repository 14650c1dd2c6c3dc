#include "linkage/field.hpp"

namespace linkage {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw StructuralError("characteristic " + std::to_string(p) + " is not a prime below 2^31");
  return Field(p);
}

void Field::reduce_mod(Scalar& a) const {
  // a is an integer here
  mpz_class r = a.get_num() % p_;
  if (r < 0) r += p_;
  a = r;
}

Scalar Field::from_int(long v) const {
  Scalar a(v);
  if (p_ != 0) reduce_mod(a);
  return a;
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (p_ == 0) return q;
  Scalar num(q.get_num());
  Scalar den(q.get_den());
  reduce_mod(num);
  reduce_mod(den);
  if (is_zero(den)) throw StructuralError("denominator vanishes modulo " + std::to_string(p_));
  return div(num, den);
}

Scalar Field::normalize(Scalar a) const {
  if (p_ == 0) return a;
  return from_rational(a);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  Scalar r = a + b;
  if (p_ != 0 && r >= p_) r -= p_;
  return r;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  Scalar r = a - b;
  if (p_ != 0 && r < 0) r += p_;
  return r;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  Scalar r = a * b;
  if (p_ != 0) reduce_mod(r);
  return r;
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0) return -a;
  if (is_zero(a)) return a;
  return Scalar(p_) - a;
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw StructuralError("division by zero");
  if (p_ == 0) return 1 / a;
  mpz_class r;
  mpz_class m(p_);
  mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), m.get_mpz_t());
  return Scalar(r);
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) {
    if (is_zero(b)) throw StructuralError("division by zero");
    return a / b;
  }
  return mul(a, inv(b));
}

std::string Field::name() const {
  if (p_ == 0) return "QQ";
  return "ZZ/" + std::to_string(p_);
}

std::string scalar_to_string(const Scalar& a) {
  return a.get_str();
}

}  // namespace linkage

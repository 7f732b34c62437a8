#include "padiccf/digit_floors.hpp"

namespace padiccf {
namespace {

// Sum of the digits of alpha at indices v_p(alpha), ..., last.
Rational truncate_at(const QuadIrr& alpha, long last, DigitSet set) {
  if (alpha.is_zero()) throw DomainError("floor of zero undefined");
  const long v = valuation(alpha);
  if (v > last) return Rational(0);
  return from_digits(digits_of(alpha, static_cast<std::size_t>(last - v + 1), set));
}

}  // namespace

Rational s_floor(const QuadIrr& alpha, DigitSet set) { return truncate_at(alpha, 0, set); }

Rational t_floor(const QuadIrr& alpha, DigitSet set) { return truncate_at(alpha, -1, set); }

int u_sign(const QuadIrr& alpha) {
  if (alpha.is_zero() || valuation(alpha) != 0) throw DomainError("u defined only on units");
  const long a0 = digits_of(alpha, 1).digits.front();
  return (a0 == -1 || a0 >= 2) ? +1 : -1;
}

Rational s_floor(const Rational& q, Prime p, DigitSet set) {
  return s_floor(QuadIrr::from_rational(q, p), set);
}

Rational t_floor(const Rational& q, Prime p, DigitSet set) {
  return t_floor(QuadIrr::from_rational(q, p), set);
}

int u_sign(const Rational& q, Prime p) { return u_sign(QuadIrr::from_rational(q, p)); }

int real_sign(const Rational& q) {
  if (q.is_zero()) throw DomainError("sign of zero undefined");
  return q.sign();
}

}  // namespace padiccf

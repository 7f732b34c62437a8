#include "padiccf/exact_arith.hpp"

namespace padiccf {

long valuation(const BigInt& value, Prime p) {
  if (value == 0) throw DomainError("valuation of zero undefined");
  BigInt rest;
  const BigInt prime = p.big();
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), value.get_mpz_t(), prime.get_mpz_t()));
}

long valuation(const Rational& q, Prime p) {
  if (q.is_zero()) throw DomainError("valuation of zero undefined");
  const BigInt num = q.num();
  const BigInt den = q.den();
  return valuation(num, p) - valuation(den, p);
}

BigInt power(Prime p, unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), p.value(), e);
  return out;
}

Rational scale_by_power(const Rational& q, Prime p, long e) {
  if (e >= 0) return q * Rational(power(p, static_cast<unsigned long>(e)));
  return q / Rational(power(p, static_cast<unsigned long>(-e)));
}

long residue_digit(const BigInt& x, Prime p, DigitSet set) {
  const long r = static_cast<long>(mpz_fdiv_ui(x.get_mpz_t(), p.value()));
  if (set == DigitSet::standard) return r;
  return r > p.half() ? r - static_cast<long>(p.value()) : r;
}

BigInt inverse_mod(const BigInt& a, const BigInt& m) {
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw DomainError("not invertible modulo " + to_string(m));
  }
  return inv;
}

DigitWindow unit_digits(BigInt num, const BigInt& den, Prime p, long start, std::size_t count,
                        DigitSet set) {
  DigitWindow window{p, start, {}, set};
  window.digits.reserve(count);
  const BigInt prime = p.big();
  const long den_inv = static_cast<long>(mpz_get_ui(BigInt(inverse_mod(den, prime)).get_mpz_t()));
  for (std::size_t i = 0; i < count; ++i) {
    // digit = num * den^-1 (mod p); then num <- (num - digit * den) / p.
    const BigInt scaled = num * den_inv;
    const long digit = residue_digit(scaled, p, set);
    window.digits.push_back(digit);
    num -= den * digit;
    mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), p.value());
  }
  return window;
}

DigitWindow expand_digits(const Rational& q, Prime p, std::size_t count, DigitSet set) {
  if (q.is_zero()) throw DomainError("zero has no leading digit");
  BigInt num = q.num();
  BigInt den = q.den();
  const BigInt prime = p.big();
  const long vnum = static_cast<long>(mpz_remove(num.get_mpz_t(), num.get_mpz_t(), prime.get_mpz_t()));
  const long vden = static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), prime.get_mpz_t()));
  return unit_digits(std::move(num), den, p, vnum - vden, count, set);
}

Rational from_digits(const DigitWindow& window) {
  if (window.empty()) return Rational(0);
  // Horner from the top digit down, then shift by p^start.
  BigInt acc = 0;
  for (auto it = window.digits.rbegin(); it != window.digits.rend(); ++it) {
    acc *= window.p.value();
    acc += *it;
  }
  return scale_by_power(Rational(acc), window.p, window.start);
}

}  // namespace padiccf

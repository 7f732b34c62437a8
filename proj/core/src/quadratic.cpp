#include "padiccf/quadratic.hpp"

#include <algorithm>
#include <utility>

namespace padiccf {
namespace {

// Square root of a quadratic residue a modulo the odd prime p (Tonelli-Shanks).
BigInt sqrt_mod_prime(const BigInt& a, const BigInt& p) {
  BigInt q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  BigInt result;
  if (s == 1) {
    const BigInt e = (p + 1) / 4;
    mpz_powm(result.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return result;
  }
  BigInt z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;

  BigInt c, t, e;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  e = (q + 1) / 2;
  mpz_powm(result.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    BigInt t2 = t;
    while (t2 != 1) {
      t2 = t2 * t2 % p;
      ++i;
    }
    BigInt b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
    result = result * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  return result;
}

BigInt floor_mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Normalizes so that R > 0 and gcd(P, Q, R) = 1.
void normalize(BigInt& P, BigInt& Q, BigInt& R) {
  if (R == 0) throw DomainError("zero denominator in quadratic element");
  if (P == 0 && Q == 0) {
    R = 1;
    return;
  }
  if (R < 0) {
    P = -P;
    Q = -Q;
    R = -R;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), P.get_mpz_t(), Q.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), R.get_mpz_t());
  if (g != 1) {
    mpz_divexact(P.get_mpz_t(), P.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(Q.get_mpz_t(), Q.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(R.get_mpz_t(), R.get_mpz_t(), g.get_mpz_t());
  }
}

// D = p^(2e) * unit; returns (e, unit).
std::pair<unsigned long, BigInt> split_square_power(const BigInt& D, Prime p) {
  BigInt unit;
  const BigInt prime = p.big();
  const unsigned long v = mpz_remove(unit.get_mpz_t(), D.get_mpz_t(), prime.get_mpz_t());
  if (v % 2 != 0) throw DomainError("no square root in Q_p");
  return {v / 2, unit};
}

}  // namespace

void require_padic_square(const BigInt& D, Prime p) {
  if (D == 0) throw DomainError("D must be nonzero");
  if (D > 0 && mpz_perfect_square_p(D.get_mpz_t())) {
    throw DomainError("D = " + to_string(D) + " is a perfect square");
  }
  const auto [e, unit] = split_square_power(D, p);
  const BigInt prime = p.big();
  if (mpz_kronecker(unit.get_mpz_t(), prime.get_mpz_t()) != 1) {
    throw DomainError("no square root in Q_p");
  }
}

QuadIrr::QuadIrr(BigInt P, BigInt Q, BigInt D, BigInt R, Prime p)
    : P_(std::move(P)), Q_(std::move(Q)), D_(std::move(D)), R_(std::move(R)), p_(p) {
  normalize(P_, Q_, R_);
}

QuadIrr QuadIrr::make(BigInt P, BigInt Q, BigInt D, BigInt R, Prime p) {
  if (Q != 0) require_padic_square(D, p);
  return QuadIrr(std::move(P), std::move(Q), std::move(D), std::move(R), p);
}

QuadIrr QuadIrr::from_rational(const Rational& q, Prime p, BigInt D) {
  return QuadIrr(q.num(), 0, std::move(D), q.den(), p);
}

Rational QuadIrr::rational() const {
  if (Q_ != 0) throw DomainError("quadratic element is irrational");
  return Rational(P_, R_);
}

std::string QuadIrr::str() const {
  if (Q_ == 0) return rational().str();
  return "(" + to_string(P_) + (Q_ < 0 ? " - " : " + ") + to_string(abs(Q_)) + "*sqrt(" +
         to_string(D_) + "))/" + to_string(R_);
}

BigInt hensel_sqrt(const BigInt& D, Prime p, unsigned long k) {
  if (k == 0) throw DomainError("precision must be positive");
  const BigInt prime = p.big();
  if (D == 0 || mpz_divisible_p(D.get_mpz_t(), prime.get_mpz_t())) {
    throw DomainError("strip even p-power first");
  }
  if (mpz_kronecker(D.get_mpz_t(), prime.get_mpz_t()) != 1) {
    throw DomainError("no square root in Q_p");
  }
  BigInt x = sqrt_mod_prime(floor_mod(D, prime), prime);
  if (residue_digit(x, p) < 0) x = prime - x;

  // Newton lift x <- x - (x^2 - D) / (2x), doubling the precision each pass.
  unsigned long precision = 1;
  while (precision < k) {
    precision = std::min(2 * precision, k);
    const BigInt modulus = power(p, precision);
    const BigInt f = x * x - D;
    const BigInt inv = inverse_mod(floor_mod(2 * x, modulus), modulus);
    x = floor_mod(x - f * inv, modulus);
  }
  return x;
}

QuadIrr quad_sub_rational(const QuadIrr& alpha, const Rational& b) {
  const BigInt bn = b.num();
  const BigInt bd = b.den();
  return QuadIrr(alpha.P_ * bd - bn * alpha.R_, alpha.Q_ * bd, alpha.D_, alpha.R_ * bd, alpha.p_);
}

QuadIrr quad_invert(const QuadIrr& alpha) {
  if (alpha.is_zero()) throw DomainError("division by zero complete quotient");
  // R / (P + Q sqrt D) = R (P - Q sqrt D) / (P^2 - Q^2 D).
  BigInt norm = alpha.P_ * alpha.P_ - alpha.Q_ * alpha.Q_ * alpha.D_;
  return QuadIrr(alpha.R_ * alpha.P_, -alpha.R_ * alpha.Q_, alpha.D_, std::move(norm), alpha.p_);
}

DigitWindow digits_of(const QuadIrr& alpha, std::size_t count, DigitSet set) {
  if (alpha.is_zero()) throw DomainError("zero has no leading digit");
  if (alpha.is_rational()) return expand_digits(alpha.rational(), alpha.p(), count, set);

  const Prime p = alpha.p();
  const BigInt prime = p.big();
  const auto [e, unit] = split_square_power(alpha.D(), p);
  const long vQ = valuation(alpha.Q(), p);
  BigInt den = alpha.R();
  const long vR = static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), prime.get_mpz_t()));

  // With x = sqrt(unit) mod p^m, N = P + Q p^e x agrees with P + Q sqrt(D)
  // modulo p^(m + e + vQ); once v_p(N) is below that bound both the valuation
  // and the next (bound - v_p(N)) digits of N / R are exact.
  unsigned long m = static_cast<unsigned long>(count) + 8;
  for (;;) {
    const long exact_bound = static_cast<long>(m) + static_cast<long>(e) + vQ;
    const BigInt x = hensel_sqrt(unit, p, m);
    BigInt N = alpha.P() + alpha.Q() * power(p, e) * x;
    if (N != 0) {
      const long vN = static_cast<long>(mpz_remove(N.get_mpz_t(), N.get_mpz_t(), prime.get_mpz_t()));
      if (vN < exact_bound && exact_bound - vN >= static_cast<long>(count)) {
        return unit_digits(std::move(N), den, p, vN - vR, count, set);
      }
    }
    if (m >= kMaxWorkingPrecision) {
      throw PrecisionError("digits of " + alpha.str() + " not certified within " +
                           std::to_string(kMaxWorkingPrecision) + " digits");
    }
    m = std::min(2 * m, kMaxWorkingPrecision);
  }
}

long valuation(const QuadIrr& alpha) {
  if (alpha.is_zero()) throw DomainError("valuation of zero undefined");
  if (alpha.is_rational()) return valuation(alpha.rational(), alpha.p());
  return digits_of(alpha, 1).start;
}

}  // namespace padiccf

std::size_t std::hash<padiccf::QuadIrr>::operator()(const padiccf::QuadIrr& a) const noexcept {
  std::size_t seed = padiccf::hash_value(a.P());
  padiccf::hash_combine(seed, padiccf::hash_value(a.Q()));
  padiccf::hash_combine(seed, padiccf::hash_value(a.D()));
  padiccf::hash_combine(seed, padiccf::hash_value(a.R()));
  padiccf::hash_combine(seed, a.p().value());
  return seed;
}

#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "padiccf/exact_arith.hpp"

namespace padiccf {

// Exact element (P + Q*sqrt(D)) / R of Q_p.
//
// Invariants: R > 0, gcd(P, Q, R) = 1, and zero is (0 + 0*sqrt(D)) / 1.
// When Q != 0, D is a non-square integer that is a square in Q_p; sqrt(D)
// denotes the canonical root: writing D = p^(2e) * D', it is p^e times the
// root of D' whose constant balanced digit lies in {1, ..., (p-1)/2}.
// When Q = 0 the value is the rational P/R and D only rides along.
class QuadIrr {
 public:
  // Validates D against p when Q != 0, then normalizes.
  static QuadIrr make(BigInt P, BigInt Q, BigInt D, BigInt R, Prime p);
  static QuadIrr from_rational(const Rational& q, Prime p, BigInt D = 0);

  const BigInt& P() const noexcept { return P_; }
  const BigInt& Q() const noexcept { return Q_; }
  const BigInt& D() const noexcept { return D_; }
  const BigInt& R() const noexcept { return R_; }
  Prime p() const noexcept { return p_; }

  bool is_zero() const { return P_ == 0 && Q_ == 0; }
  bool is_rational() const { return Q_ == 0; }
  // Value as a Rational; throws DomainError when Q != 0.
  Rational rational() const;

  // "(P + Q*sqrt(D))/R", or the fraction when rational.
  std::string str() const;

  friend bool operator==(const QuadIrr& a, const QuadIrr& b) {
    return a.p_ == b.p_ && a.P_ == b.P_ && a.Q_ == b.Q_ && a.D_ == b.D_ && a.R_ == b.R_;
  }

 private:
  QuadIrr(BigInt P, BigInt Q, BigInt D, BigInt R, Prime p);
  friend QuadIrr quad_sub_rational(const QuadIrr&, const Rational&);
  friend QuadIrr quad_invert(const QuadIrr&);

  BigInt P_;
  BigInt Q_;
  BigInt D_;
  BigInt R_;
  Prime p_;
};

// Throws DomainError unless D is a non-square integer with a square root in Q_p.
void require_padic_square(const BigInt& D, Prime p);

// Canonical x with 0 < x < p^k, x^2 = D (mod p^k), balanced residue of x mod p
// in {1, ..., (p-1)/2}. Requires v_p(D) = 0 and D a residue mod p.
BigInt hensel_sqrt(const BigInt& D, Prime p, unsigned long k);

// Exact alpha - b.
QuadIrr quad_sub_rational(const QuadIrr& alpha, const Rational& b);

// Exact 1/alpha. Throws DomainError("division by zero complete quotient") for 0.
QuadIrr quad_invert(const QuadIrr& alpha);

// Maximum working precision, in p-adic digits, used by digits_of.
inline constexpr unsigned long kMaxWorkingPrecision = 4096;

// First `count` digits of alpha starting at index v_p(alpha). Irrational
// inputs are evaluated against Hensel lifts of sqrt(D) whose precision is
// raised until every returned digit is certified.
DigitWindow digits_of(const QuadIrr& alpha, std::size_t count, DigitSet set = DigitSet::balanced);

// v_p(alpha) for alpha != 0.
long valuation(const QuadIrr& alpha);

}  // namespace padiccf

template <>
struct std::hash<padiccf::QuadIrr> {
  std::size_t operator()(const padiccf::QuadIrr& a) const noexcept;
};

#pragma once

// p-adic analogues of the floor function. For alpha = sum_{n >= -r} a_n p^n:
//
//   s(alpha) = sum_{n=-r}^{0}  a_n p^n
//   t(alpha) = sum_{n=-r}^{-1} a_n p^n
//   u(alpha) = +1 if a_0 in {2, ..., (p-1)/2} or a_0 = -1
//              -1 if a_0 in {-(p-1)/2, ..., -2} or a_0 = +1   (v_p(alpha) = 0)
//
// Empty sums are zero, so s vanishes when v_p(alpha) >= 1 and t when
// v_p(alpha) >= 0.

#include "padiccf/quadratic.hpp"

namespace padiccf {

Rational s_floor(const QuadIrr& alpha, DigitSet set = DigitSet::balanced);
Rational t_floor(const QuadIrr& alpha, DigitSet set = DigitSet::balanced);
int u_sign(const QuadIrr& alpha);

Rational s_floor(const Rational& q, Prime p, DigitSet set = DigitSet::balanced);
Rational t_floor(const Rational& q, Prime p, DigitSet set = DigitSet::balanced);
int u_sign(const Rational& q, Prime p);

// Sign of a nonzero rational as a real number.
int real_sign(const Rational& q);

}  // namespace padiccf

#pragma once

#include <cstddef>
#include <vector>

#include "padiccf/rational.hpp"

namespace padiccf {

// Representative set used for p-adic digits.
enum class DigitSet {
  balanced,  // {-(p-1)/2, ..., (p-1)/2}
  standard,  // {0, ..., p-1}
};

// A finite slice of a p-adic digit expansion: digits[i] is the coefficient
// of p^(start + i).
struct DigitWindow {
  Prime p;
  long start = 0;
  std::vector<long> digits;
  DigitSet set = DigitSet::balanced;

  bool empty() const noexcept { return digits.empty(); }
  long end() const noexcept { return start + static_cast<long>(digits.size()); }

  // Digit at absolute index n; zero outside the window.
  long at(long n) const noexcept {
    if (n < start || n >= end()) return 0;
    return digits[static_cast<std::size_t>(n - start)];
  }
};

// Multiplicity of p in a nonzero integer.
long valuation(const BigInt& value, Prime p);

// v_p(q) for q != 0. Throws DomainError("valuation of zero undefined").
long valuation(const Rational& q, Prime p);

// p^e for e >= 0.
BigInt power(Prime p, unsigned long e);

// q * p^e for any integer e.
Rational scale_by_power(const Rational& q, Prime p, long e);

// Representative of x mod p in the requested digit set.
long residue_digit(const BigInt& x, Prime p, DigitSet set = DigitSet::balanced);

// Inverse of a unit modulo m (m > 1). Throws DomainError if not invertible.
BigInt inverse_mod(const BigInt& a, const BigInt& m);

// Digits of the p-adic unit num/den (both coprime to p, den > 0) placed at
// indices start, start+1, ...; this is the shared extraction loop.
DigitWindow unit_digits(BigInt num, const BigInt& den, Prime p, long start, std::size_t count,
                        DigitSet set = DigitSet::balanced);

// First `count` digits of q starting at index v_p(q). The leading digit is
// nonzero. Throws DomainError("zero has no leading digit") for q = 0.
DigitWindow expand_digits(const Rational& q, Prime p, std::size_t count, DigitSet set);

inline DigitWindow balanced_digits(const Rational& q, Prime p, std::size_t count) {
  return expand_digits(q, p, count, DigitSet::balanced);
}

// Exact sum of digits[i] * p^(start + i); zero for an empty window.
Rational from_digits(const DigitWindow& window);

}  // namespace padiccf

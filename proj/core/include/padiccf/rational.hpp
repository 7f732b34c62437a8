#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "padiccf/error.hpp"

namespace padiccf {

using BigInt = mpz_class;

std::string to_string(const BigInt& value);

// Hash over the limbs and sign of an integer.
std::size_t hash_value(const BigInt& value) noexcept;

inline void hash_combine(std::size_t& seed, std::size_t h) noexcept {
  seed ^= h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

// Parses an optionally signed decimal integer. Throws DomainError otherwise.
BigInt parse_bigint(std::string_view text);

// An odd prime. Construction validates primality, so every function that
// takes a Prime can assume p >= 3 and p prime.
class Prime {
 public:
  explicit Prime(unsigned long value);

  unsigned long value() const noexcept { return value_; }
  operator unsigned long() const noexcept { return value_; }
  BigInt big() const { return BigInt(value_); }

  // Largest balanced digit, (p - 1) / 2.
  long half() const noexcept { return static_cast<long>(value_ / 2); }

  static bool is_odd_prime(const BigInt& candidate);

  friend bool operator==(Prime, Prime) = default;

 private:
  unsigned long value_;
};

// Exact fraction num/den kept in lowest terms with den > 0; zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  // Accepts "a", "a/b" with optional sign; throws DomainError on malformed
  // input or zero denominator.
  static Rational parse(std::string_view text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  const mpq_class& raw() const noexcept { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational abs() const;
  Rational reciprocal() const;

  // "num/den", or just "num" when den = 1.
  std::string str() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace padiccf

template <>
struct std::hash<padiccf::Rational> {
  std::size_t operator()(const padiccf::Rational& q) const noexcept;
};

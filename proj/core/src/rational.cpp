#include "padiccf/rational.hpp"

#include <cctype>
#include <ostream>

namespace padiccf {

std::string to_string(const BigInt& value) { return value.get_str(10); }

std::size_t hash_value(const BigInt& value) noexcept {
  const mpz_srcptr z = value.get_mpz_t();
  std::size_t seed = static_cast<std::size_t>(mpz_sgn(z) + 1);
  const std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs; ++i) {
    hash_combine(seed, std::hash<mp_limb_t>{}(mpz_getlimbn(z, static_cast<mp_size_t>(i))));
  }
  return seed;
}

BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw DomainError("malformed integer '" + std::string(text) + "'");
  }
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw DomainError("malformed integer '" + std::string(text) + "'");
    }
  }
  // mpz_class rejects a leading '+'.
  std::string normalized(text.front() == '+' ? text.substr(1) : text);
  return BigInt(normalized, 10);
}

Prime::Prime(unsigned long value) : value_(value) {
  if (!is_odd_prime(BigInt(value))) {
    throw DomainError(std::to_string(value) + " is not an odd prime");
  }
}

bool Prime::is_odd_prime(const BigInt& candidate) {
  if (candidate < 3 || mpz_even_p(candidate.get_mpz_t())) return false;
  return mpz_probab_prime_p(candidate.get_mpz_t(), 40) != 0;
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  const BigInt num = parse_bigint(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw DomainError("malformed fraction '" + std::string(text) + "'");
  }
  return Rational(num, parse_bigint(den_text));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  return Rational(mpq_class(1 / value_));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str(10);
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace padiccf

std::size_t std::hash<padiccf::Rational>::operator()(const padiccf::Rational& q) const noexcept {
  std::size_t seed = padiccf::hash_value(q.raw().get_num());
  padiccf::hash_combine(seed, padiccf::hash_value(q.raw().get_den()));
  return seed;
}

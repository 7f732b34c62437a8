#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "padiccf/convergence.hpp"

namespace padiccf {

// Seeded generator of partial-quotient sequences b_n = u * p^v with v drawn
// from {-2, -1, 0} and u a nonzero balanced residue. A valuation pattern can
// be prescribed per index (negative or zero); unconstrained indices draw
// freely.
class SequenceSampler {
 public:
  enum class Constraint { any, negative, zero };

  SequenceSampler(Prime p, std::uint64_t seed) : p_(p), seed_(seed), rng_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  Prime p() const noexcept { return p_; }

  Rational quotient(Constraint c = Constraint::any);

  // b_0 is drawn with Constraint::any; constraint(n) governs n >= 1.
  template <typename ConstraintFn>
  std::vector<Rational> quotients(std::size_t length, ConstraintFn constraint) {
    std::vector<Rational> b;
    b.reserve(length);
    for (std::size_t n = 0; n < length; ++n) b.push_back(quotient(n == 0 ? Constraint::any : constraint(n)));
    return b;
  }

  // A sequence of the given length whose denominators B_n are all nonzero;
  // redraws until one is found.
  template <typename ConstraintFn>
  PQSequence sequence(std::size_t length, ConstraintFn constraint) {
    for (;;) {
      PQSequence seq(p_, quotients(length, constraint));
      bool nonzero = true;
      for (const auto& c : convergents(seq)) nonzero = nonzero && !c.B.is_zero();
      if (nonzero) return seq;
    }
  }

  PQSequence sequence(std::size_t length) {
    return sequence(length, [](std::size_t) { return Constraint::any; });
  }

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  Prime p_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

}  // namespace padiccf

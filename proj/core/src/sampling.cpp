#include "padiccf/sampling.hpp"

namespace padiccf {

Rational SequenceSampler::quotient(Constraint c) {
  const long half = p_.half();
  std::uniform_int_distribution<long> unit_dist(1, half);
  std::bernoulli_distribution negate(0.5);
  long unit = unit_dist(rng_);
  if (negate(rng_)) unit = -unit;

  long v = 0;
  switch (c) {
    case Constraint::any: v = std::uniform_int_distribution<long>(-2, 0)(rng_); break;
    case Constraint::negative: v = std::uniform_int_distribution<long>(-2, -1)(rng_); break;
    case Constraint::zero: v = 0; break;
  }
  return scale_by_power(Rational(unit), p_, v);
}

}  // namespace padiccf

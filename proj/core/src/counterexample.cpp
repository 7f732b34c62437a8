#include "padiccf/counterexample.hpp"

#include <algorithm>
#include <utility>

namespace padiccf {
namespace {

// p * B as an integer; B is in Z[1/p] with v_p(B) >= -1 along the construction.
BigInt times_p(const Rational& B, Prime p) {
  const Rational scaled = B * Rational(static_cast<long>(p.value()));
  if (!scaled.is_integer()) throw DomainError("counterexample denominator left Z[1/p]");
  return scaled.num();
}

}  // namespace

PQSequence build_counterexample(Prime p, std::size_t n_blocks) {
  if (n_blocks == 0) throw DomainError("need at least one block");
  const long P = static_cast<long>(p.value());
  const Rational inv_p(BigInt(1), BigInt(P));

  std::vector<Rational> b{Rational(0), inv_p, Rational(2), Rational(p.half())};
  b.reserve(3 * n_blocks + 1);
  // Denominators B_{n-1}, B_n of the prefix built so far.
  Rational B_prev = Rational(2) * inv_p + Rational(1);
  Rational B_last = Rational(p.half()) * B_prev + inv_p;

  auto push = [&](Rational q) {
    Rational B = q * B_last + B_prev;
    B_prev = std::exchange(B_last, std::move(B));
    b.push_back(std::move(q));
  };

  const BigInt prime = p.big();
  for (std::size_t block = 1; block < n_blocks; ++block) {
    const BigInt a2 = times_p(B_prev, p);
    const Rational& B3 = B_last;
    if (!B3.is_integer()) throw DomainError("counterexample B_{3n+3} is not integral");
    const BigInt a3 = B3.num();
    const BigInt sum = a3 + a2;
    const bool unit_sum = mpz_divisible_p(sum.get_mpz_t(), prime.get_mpz_t()) == 0;
    push(unit_sum ? inv_p : Rational(BigInt(2), BigInt(P)));
    push(Rational(1));
    const BigInt a4 = times_p(B_prev, p);
    const BigInt a5 = times_p(B_last, p);
    const BigInt target = -a4 * inverse_mod(a5, prime);
    push(Rational(residue_digit(target, p)));
  }
  return PQSequence(p, std::move(b));
}

bool certify_bounded(const PQSequence& seq, long bound) {
  const ValuationTrace vt = valuation_trace(seq);
  return std::all_of(vt.vB.begin(), vt.vB.end(), [bound](long v) { return v >= bound; });
}

}  // namespace padiccf

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "padiccf/quadratic.hpp"

namespace padiccf {

// Partial quotients b_0, b_1, ... over Q_p. b_0 is unrestricted; every later
// term must be nonzero so that its valuation is defined.
class PQSequence {
 public:
  PQSequence(Prime p, std::vector<Rational> b);

  Prime p() const noexcept { return p_; }
  const std::vector<Rational>& b() const noexcept { return b_; }
  std::size_t size() const noexcept { return b_.size(); }
  const Rational& operator[](std::size_t n) const { return b_[n]; }

 private:
  Prime p_;
  std::vector<Rational> b_;
};

// Raised when some B_n vanishes: the continued fraction is not expandable.
class ZeroDenominatorError : public DomainError {
 public:
  explicit ZeroDenominatorError(std::size_t n);
  std::size_t index() const noexcept { return n_; }

 private:
  std::size_t n_;
};

struct Convergent {
  Rational A;
  Rational B;
};

// A_0 = b_0, A_1 = b_1 b_0 + 1, B_0 = 1, B_1 = b_1, and
// X_n = b_n X_{n-1} + X_{n-2} for n >= 2.
std::vector<Convergent> convergents(const PQSequence& seq);

struct ValuationTrace {
  std::vector<long> vB;   // v_p(B_n), n = 0 .. len-1
  std::vector<long> vBB;  // v_p(B_n B_{n+1}) = vB[n] + vB[n+1], n = 0 .. len-2
};

// Throws ZeroDenominatorError naming the first n with B_n = 0.
ValuationTrace valuation_trace(const PQSequence& seq);

struct PairConditionReport {
  bool holds = true;
  std::optional<std::size_t> first_violation;  // n with v_p(b_n b_{n+1}) >= 0
};

// v_p(b_n b_{n+1}) < 0 for all 1 <= n < len-1.
PairConditionReport check_pair_condition(const PQSequence& seq);

// Both sides of the characterization of strictly decreasing v_p(B_n B_{n+1}),
// each evaluated on its own data.
struct DescentEquivalenceReport {
  bool condition_i = true;   // v_p(b_{n+1} B_n) < v_p(B_{n-1}), from convergents
  bool condition_ii = true;  // v_p(b_n b_{n+1}) < 0, from quotients alone
  bool agree = true;
  std::optional<std::size_t> first_violation_i;
  std::optional<std::size_t> first_violation_ii;
  // Pointwise: v_p(b_{n+1} B_n) < v_p(B_{n-1}) iff v_p(B_{n+1}) < v_p(B_{n-1}).
  bool restatement_agrees = true;
  // Pointwise: v_p(B_{n+1}) < v_p(B_{n-1}) and v_p(b_{n+1}) <= 0 imply
  // v_p(B_{n+1}) <= v_p(B_n).
  bool monotone_consequence_holds = true;
  // v_p(B_n B_{n+1}) strictly decreasing over the whole range, and whether
  // that agrees with condition_ii.
  bool strictly_decreasing = true;
  bool strict_decrease_agrees = true;
};

DescentEquivalenceReport check_descent_equivalence(const PQSequence& seq);

// Verdict of a block-pattern checker (3-step or r-step). Block n covers the
// quotients b_{rn+1}, ..., b_{rn+r}. "For all n" is read as "for every block
// whose referenced terms exist"; the rest is reported as the ignored tail.
struct BlockReport {
  long r = 0;
  bool pattern_holds = true;         // v_p(b_{rn+1}) < 0, v_p(b_{rn+i}) = 0 for i = 2..r
  bool side_conditions_hold = true;  // unit conditions on each complete block
  bool hypotheses_hold = true;
  std::optional<std::size_t> first_violation_index;  // quotient index
  std::optional<std::size_t> first_violation_block;
  std::string violation;

  std::size_t complete_blocks = 0;
  std::size_t ignored_tail = 0;

  // v_p(B_{rn+1}) = ... = v_p(B_{rn+r}) > v_p(B_{rn+r+1}) on every block where
  // B_{rn+r+1} exists.
  bool conclusion_holds = true;
  std::size_t conclusion_blocks_checked = 0;
  std::optional<std::size_t> first_conclusion_failure_block;
  // v_p(B_n B_{n+1}) non-increasing, strictly dropping at k = 0 and k = r-1 (mod r).
  bool divergent_profile_holds = true;

  bool holds() const noexcept { return hypotheses_hold && conclusion_holds; }
};

// Pattern (one negative-valuation quotient then two units) plus
// v_p(b_{3n+2} b_{3n+3} + 1) = 0, checked directly on the quotients.
BlockReport check_3step_hypotheses(const PQSequence& seq);

// U_m^(0) = 1, U_m^(1) = b_m, U_m^(n+1) = b_{m+n} U_m^(n) + U_m^(n-1).
struct USequence {
  std::size_t m = 2;
  std::vector<Rational> values;  // U_m^(0) .. U_m^(n_max)
};

// Requires m >= 2 and m + n_max - 1 < len (all referenced b exist).
USequence u_sequence(const PQSequence& seq, std::size_t m, std::size_t n_max);

// B_{k+n} = U_{k+2}^(n-1) B_{k+1} + U_{k+3}^(n-2) B_k, evaluated with the
// supplied U sequences (starting at m = k+2 and m = k+3).
bool seqden_identity(const std::vector<Convergent>& conv, const USequence& first,
                     const USequence& second, std::size_t k, std::size_t n);

// The identity above with the U sequences built from seq. Requires n >= 2
// and k + n < len.
bool verify_seqden(const PQSequence& seq, std::size_t k, std::size_t n);

// Pattern v_p(b_{rn+1}) < 0, v_p(b_{rn+i}) = 0 (i = 2..r), plus
// v_p(U_{rn+2}^(i)) = 0 for i = 2..r-1 (r >= 3) and v_p(U_{rn+3}^(i)) = 0 for
// i = 2..r-2 (r >= 4).
BlockReport check_rstep_hypotheses(const PQSequence& seq, long r);

// v_p(alpha - A_n/B_n); empty means the difference is exactly zero (+inf).
std::optional<long> approximation_valuation(const QuadIrr& alpha, const PQSequence& seq,
                                            std::size_t n);

}  // namespace padiccf

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "padiccf/digit_floors.hpp"

namespace padiccf {

enum class SchemeTag { browkin1, browkin2, new1, new2, ruban };

// A p-adic continued fraction algorithm. The partial quotient at step n is
// chosen by the rule for phase n mod period_length():
//
//   browkin1  s(alpha)
//   ruban     s(alpha) with digits in {0, ..., p-1}
//   browkin2  s | t-branch
//   new1      s | t-branch | u(alpha)
//   new2      s | t-branch | s(alpha) - u(alpha)
//
// where the t-branch takes t(alpha) when v_p(alpha - t(alpha)) = 0 and
// t(alpha) - sign(t(alpha)) otherwise (alpha = t(alpha) counts as +inf).
class Scheme {
 public:
  constexpr explicit Scheme(SchemeTag tag) noexcept : tag_(tag) {}

  // Accepts "browkin1", "browkin2", "new1", "new2", "ruban".
  static Scheme parse(std::string_view name);

  constexpr SchemeTag tag() const noexcept { return tag_; }
  constexpr int period_length() const noexcept {
    switch (tag_) {
      case SchemeTag::browkin2: return 2;
      case SchemeTag::new1:
      case SchemeTag::new2: return 3;
      default: return 1;
    }
  }
  std::string_view name() const noexcept;

  // new1/new2 need p >= 5; the others accept any odd prime.
  void require_prime(Prime p) const;

  friend constexpr bool operator==(Scheme, Scheme) = default;

 private:
  SchemeTag tag_;
};

// A scheme's phase precondition failed at step n; always an internal bug.
class StepError : public Error {
 public:
  StepError(long n, const QuadIrr& alpha, const std::string& what);
  long step() const noexcept { return n_; }

 private:
  long n_;
};

struct StepResult {
  Rational b;
  std::optional<QuadIrr> next;  // empty when alpha = b exactly (expansion finished)
};

StepResult step(const QuadIrr& alpha, long n, Scheme scheme);

struct ExpansionRecord {
  long n = 0;
  Rational b;
  std::optional<long> vp_b;  // empty when b = 0
  QuadIrr alpha;
  Rational A;
  Rational B;
  std::optional<long> vp_B;  // empty when B = 0
};

enum class ExpansionKind { finite, periodic, truncated };

struct ExpansionStatus {
  ExpansionKind kind = ExpansionKind::truncated;
  long preperiod = 0;  // periodic only
  long period = 0;     // periodic only

  friend bool operator==(const ExpansionStatus&, const ExpansionStatus&) = default;
};

std::string_view to_string(ExpansionKind kind) noexcept;

struct ExpansionTrace {
  Scheme scheme;
  QuadIrr input;
  std::vector<ExpansionRecord> steps;
  ExpansionStatus status;

  Prime p() const noexcept { return input.p(); }
  std::vector<Rational> partial_quotients() const;
};

inline constexpr std::size_t kDefaultMaxSteps = 200;

// Runs the scheme until alpha_n = b_n (finite), the complete quotient at the
// start of a scheme cycle repeats an earlier cycle start (periodic), or
// max_steps quotients were produced. Periodic(l, t) means alpha_{l+t} = alpha_l
// with both l and t multiples of the scheme's period length.
ExpansionTrace expand(const QuadIrr& input, Scheme scheme, std::size_t max_steps = kDefaultMaxSteps);

// Re-derives every complete quotient, partial quotient, convergent and
// valuation in the trace and checks the scheme's valuation pattern for
// n >= 1. Returns human-readable violations, each naming its step.
std::vector<std::string> verify_trace(const ExpansionTrace& trace);

// |N| + |D| for alpha_3, alpha_6, ... with alpha_{3k} = N / (D p^l) and
// (N, D) p-free and coprime. Rational traces only. alpha_0 is skipped since it
// need not be reduced by the first block.
std::vector<BigInt> descent_quantities(const ExpansionTrace& trace);

// Bottom-up exact evaluation of [b_0; b_1, ..., b_N]. Throws DomainError on
// a zero intermediate.
Rational evaluate_continued_fraction(const std::vector<Rational>& quotients);

}  // namespace padiccf

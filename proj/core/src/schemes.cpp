#include "padiccf/schemes.hpp"

#include <unordered_map>

namespace padiccf {
namespace {

std::optional<long> valuation_or_empty(const Rational& q, Prime p) {
  if (q.is_zero()) return std::nullopt;
  return valuation(q, p);
}

Rational t_branch(const QuadIrr& alpha, long n) {
  const Rational t = t_floor(alpha);
  if (t.is_zero()) throw StepError(n, alpha, "t-branch needs v_p(alpha) < 0");
  const QuadIrr rest = quad_sub_rational(alpha, t);
  if (rest.is_zero() || valuation(rest) != 0) return t - Rational(real_sign(t));
  return t;
}

int unit_sign(const QuadIrr& alpha, long n) {
  try {
    return u_sign(alpha);
  } catch (const DomainError& e) {
    throw StepError(n, alpha, e.what());
  }
}

// Expected valuation pattern at step n >= 1: -1 means "negative", 0 "zero".
int expected_sign_of_valuation(Scheme scheme, long n) {
  switch (scheme.tag()) {
    case SchemeTag::browkin2: return n % 2 == 1 ? -1 : 0;
    case SchemeTag::new1:
    case SchemeTag::new2: return n % 3 == 1 ? -1 : 0;
    default: return -1;
  }
}

bool is_power_of(const BigInt& value, Prime p) {
  BigInt rest;
  const BigInt prime = p.big();
  mpz_remove(rest.get_mpz_t(), value.get_mpz_t(), prime.get_mpz_t());
  return rest == 1;
}

std::string at_step(long n) { return "step " + std::to_string(n) + ": "; }

}  // namespace

Scheme Scheme::parse(std::string_view name) {
  if (name == "browkin1") return Scheme(SchemeTag::browkin1);
  if (name == "browkin2") return Scheme(SchemeTag::browkin2);
  if (name == "new1") return Scheme(SchemeTag::new1);
  if (name == "new2") return Scheme(SchemeTag::new2);
  if (name == "ruban") return Scheme(SchemeTag::ruban);
  throw DomainError("unknown algorithm '" + std::string(name) + "'");
}

std::string_view Scheme::name() const noexcept {
  switch (tag_) {
    case SchemeTag::browkin1: return "browkin1";
    case SchemeTag::browkin2: return "browkin2";
    case SchemeTag::new1: return "new1";
    case SchemeTag::new2: return "new2";
    case SchemeTag::ruban: return "ruban";
  }
  return "?";
}

void Scheme::require_prime(Prime p) const {
  if ((tag_ == SchemeTag::new1 || tag_ == SchemeTag::new2) && p.value() < 5) {
    throw DomainError(std::string(name()) + " requires p >= 5");
  }
}

StepError::StepError(long n, const QuadIrr& alpha, const std::string& what)
    : Error("step " + std::to_string(n) + " at alpha = " + alpha.str() + ": " + what), n_(n) {}

std::string_view to_string(ExpansionKind kind) noexcept {
  switch (kind) {
    case ExpansionKind::finite: return "finite";
    case ExpansionKind::periodic: return "periodic";
    case ExpansionKind::truncated: return "truncated";
  }
  return "?";
}

StepResult step(const QuadIrr& alpha, long n, Scheme scheme) {
  if (alpha.is_zero()) throw StepError(n, alpha, "zero complete quotient");
  scheme.require_prime(alpha.p());
  const long phase = n % scheme.period_length();

  Rational b;
  switch (scheme.tag()) {
    case SchemeTag::browkin1:
      b = s_floor(alpha);
      break;
    case SchemeTag::ruban:
      b = s_floor(alpha, DigitSet::standard);
      break;
    case SchemeTag::browkin2:
      b = phase == 0 ? s_floor(alpha) : t_branch(alpha, n);
      break;
    case SchemeTag::new1:
    case SchemeTag::new2:
      if (phase == 0) {
        b = s_floor(alpha);
      } else if (phase == 1) {
        b = t_branch(alpha, n);
      } else {
        const int u = unit_sign(alpha, n);
        b = scheme.tag() == SchemeTag::new1 ? Rational(u) : s_floor(alpha) - Rational(u);
      }
      break;
  }

  const QuadIrr rest = quad_sub_rational(alpha, b);
  if (rest.is_zero()) return {std::move(b), std::nullopt};
  return {std::move(b), quad_invert(rest)};
}

std::vector<Rational> ExpansionTrace::partial_quotients() const {
  std::vector<Rational> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.b);
  return out;
}

ExpansionTrace expand(const QuadIrr& input, Scheme scheme, std::size_t max_steps) {
  if (max_steps == 0) throw DomainError("max_steps must be positive");
  scheme.require_prime(input.p());
  if (input.is_zero()) throw DomainError("cannot expand zero");

  ExpansionTrace trace{scheme, input, {}, {}};
  const Prime p = input.p();
  const long period = scheme.period_length();

  // Complete quotients at the start of each scheme cycle (n = 0 mod period),
  // keyed to the first step they appeared at. Only cycle starts are compared,
  // so the reported preperiod is a whole number of cycles.
  std::unordered_map<QuadIrr, long> seen;
  auto check_repeat = [&](const QuadIrr& alpha, long n) -> bool {
    if (n % period != 0) return false;
    auto [it, inserted] = seen.try_emplace(alpha, n);
    if (inserted) return false;
    trace.status = {ExpansionKind::periodic, it->second, n - it->second};
    return true;
  };

  Rational A_prev2(0), A_prev(1), B_prev2(1), B_prev(0);
  QuadIrr alpha = input;
  for (long n = 0;; ++n) {
    if (check_repeat(alpha, n)) return trace;
    if (static_cast<std::size_t>(n) == max_steps) break;

    StepResult r = step(alpha, n, scheme);
    Rational A = r.b * A_prev + A_prev2;
    Rational B = r.b * B_prev + B_prev2;
    trace.steps.push_back(ExpansionRecord{n, r.b, valuation_or_empty(r.b, p), alpha, A, B,
                                          valuation_or_empty(B, p)});
    A_prev2 = std::move(A_prev);
    A_prev = std::move(A);
    B_prev2 = std::move(B_prev);
    B_prev = std::move(B);
    if (!r.next) {
      trace.status = {ExpansionKind::finite, 0, 0};
      return trace;
    }
    alpha = std::move(*r.next);
  }
  trace.status = {ExpansionKind::truncated, 0, 0};
  return trace;
}

Rational evaluate_continued_fraction(const std::vector<Rational>& quotients) {
  if (quotients.empty()) throw DomainError("empty continued fraction");
  Rational value = quotients.back();
  for (auto it = quotients.rbegin() + 1; it != quotients.rend(); ++it) {
    value = *it + value.reciprocal();
  }
  return value;
}

std::vector<std::string> verify_trace(const ExpansionTrace& trace) {
  std::vector<std::string> violations;
  auto fail = [&](long n, const std::string& what) { violations.push_back(at_step(n) + what); };
  const Prime p = trace.p();
  const auto& steps = trace.steps;

  if (steps.empty()) {
    if (trace.status.kind == ExpansionKind::finite) {
      violations.emplace_back("finite status with no steps");
    }
    return violations;
  }
  if (!(steps.front().alpha == trace.input)) fail(0, "alpha_0 differs from the input");

  Rational A_prev2(0), A_prev(1), B_prev2(1), B_prev(0);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    const long n = static_cast<long>(i);
    if (s.n != n) fail(n, "index field is " + std::to_string(s.n));
    if (!(s.alpha.p() == p)) fail(n, "complete quotient uses a different prime");

    std::optional<StepResult> redo;
    try {
      redo = step(s.alpha, n, trace.scheme);
    } catch (const Error& e) {
      fail(n, std::string("scheme step failed: ") + e.what());
    }
    if (redo && !(redo->b == s.b)) {
      fail(n, "partial quotient " + s.b.str() + " but the scheme chooses " + redo->b.str());
    }

    const bool last = i + 1 == steps.size();
    const QuadIrr rest = quad_sub_rational(s.alpha, s.b);
    if (!last) {
      if (rest.is_zero()) {
        fail(n, "alpha_n = b_n but the expansion continues");
      } else if (!(quad_invert(rest) == steps[i + 1].alpha)) {
        fail(n + 1, "alpha_{n+1} != 1/(alpha_n - b_n)");
      }
    } else if (trace.status.kind == ExpansionKind::finite && !rest.is_zero()) {
      fail(n, "finite status but alpha_N != b_N");
    } else if (trace.status.kind != ExpansionKind::finite && rest.is_zero()) {
      fail(n, "alpha_N = b_N but status is not finite");
    }

    if (s.vp_b != valuation_or_empty(s.b, p)) fail(n, "stored v_p(b_n) is wrong");
    const Rational A = s.b * A_prev + A_prev2;
    const Rational B = s.b * B_prev + B_prev2;
    if (!(A == s.A)) fail(n, "A_n does not satisfy the recurrence");
    if (!(B == s.B)) fail(n, "B_n does not satisfy the recurrence");
    if (s.vp_B != valuation_or_empty(s.B, p)) fail(n, "stored v_p(B_n) is wrong");
    if (i > 0) {
      const Rational det = s.A * steps[i - 1].B - steps[i - 1].A * s.B;
      const Rational expected((n - 1) % 2 == 0 ? 1 : -1);
      if (!(det == expected)) fail(n, "A_n B_{n-1} - A_{n-1} B_n != (-1)^(n-1)");
    }
    A_prev2 = A_prev;
    A_prev = A;
    B_prev2 = B_prev;
    B_prev = B;

    if (n >= 1) {
      if (s.b.is_zero()) {
        fail(n, "zero partial quotient");
        continue;
      }
      const long v = valuation(s.b, p);
      const int want = expected_sign_of_valuation(trace.scheme, n);
      if (want < 0 && v >= 0) fail(n, "expected v_p(b_n) < 0, got " + std::to_string(v));
      if (want == 0 && v != 0) fail(n, "expected v_p(b_n) = 0, got " + std::to_string(v));
      if (trace.scheme.tag() == SchemeTag::ruban && (s.b.sign() < 0 || !is_power_of(s.b.den(), p))) {
        fail(n, "Ruban quotient is not a non-negative element of Z[1/p]");
      }
    }
  }

  const int period = trace.scheme.period_length();
  if (period == 3) {
    for (std::size_t k = 2; k + 1 < steps.size(); k += 3) {
      const Rational side = steps[k].b * steps[k + 1].b + Rational(1);
      if (side.is_zero() || valuation(side, p) != 0) {
        fail(static_cast<long>(k), "v_p(b_{3n+2} b_{3n+3} + 1) != 0");
      }
    }
  }

  switch (trace.status.kind) {
    case ExpansionKind::finite:
      if (trace.input.is_rational()) {
        try {
          if (!(evaluate_continued_fraction(trace.partial_quotients()) == trace.input.rational())) {
            violations.emplace_back("finite expansion does not evaluate back to the input");
          }
        } catch (const DomainError& e) {
          violations.emplace_back(std::string("finite expansion cannot be evaluated: ") + e.what());
        }
      }
      break;
    case ExpansionKind::periodic: {
      const auto& st = trace.status;
      const long end = st.preperiod + st.period;
      if (st.period <= 0 || st.period % period != 0 || st.preperiod < 0 ||
          st.preperiod % period != 0 ||
          end != static_cast<long>(steps.size())) {
        violations.emplace_back("inconsistent periodic status");
        break;
      }
      const QuadIrr tail = quad_sub_rational(steps.back().alpha, steps.back().b);
      if (tail.is_zero() ||
          !(quad_invert(tail) == steps[static_cast<std::size_t>(st.preperiod)].alpha)) {
        violations.emplace_back("complete quotient after the period does not repeat alpha_" +
                                std::to_string(st.preperiod));
      }
      break;
    }
    case ExpansionKind::truncated:
      break;
  }
  return violations;
}

std::vector<BigInt> descent_quantities(const ExpansionTrace& trace) {
  std::vector<BigInt> out;
  const BigInt prime = trace.p().big();
  for (std::size_t k = 3; k < trace.steps.size(); k += 3) {
    const QuadIrr& alpha = trace.steps[k].alpha;
    if (!alpha.is_rational()) throw DomainError("descent quantity needs a rational trace");
    BigInt N = abs(alpha.P());
    BigInt D = alpha.R();
    mpz_remove(N.get_mpz_t(), N.get_mpz_t(), prime.get_mpz_t());
    mpz_remove(D.get_mpz_t(), D.get_mpz_t(), prime.get_mpz_t());
    out.push_back(N + D);
  }
  return out;
}

}  // namespace padiccf

#include "padiccf/convergence.hpp"

#include <functional>
#include <utility>

namespace padiccf {
namespace {

long val(const Rational& q, Prime p) { return valuation(q, p); }

// v_p(B_n) for every n, empty where B_n = 0.
std::vector<std::optional<long>> denominator_valuations(const std::vector<Convergent>& conv,
                                                        Prime p) {
  std::vector<std::optional<long>> out;
  out.reserve(conv.size());
  for (const auto& c : conv) {
    out.push_back(c.B.is_zero() ? std::nullopt : std::optional<long>(val(c.B, p)));
  }
  return out;
}

void record_violation(BlockReport& report, std::size_t index, std::size_t block, std::string what) {
  if (report.first_violation_index) return;
  report.first_violation_index = index;
  report.first_violation_block = block;
  report.violation = std::move(what);
}

// Checks everything except the block side conditions, which `side` supplies:
// it returns an empty string when block n passes.
BlockReport run_block_checker(const PQSequence& seq, long r,
                              const std::function<std::string(std::size_t)>& side) {
  if (r < 1) throw DomainError("block length r must be positive");
  const auto ur = static_cast<std::size_t>(r);
  const Prime p = seq.p();
  const std::size_t len = seq.size();
  const std::size_t last = len == 0 ? 0 : len - 1;

  BlockReport report;
  report.r = r;

  for (std::size_t i = 1; i < len; ++i) {
    const long v = val(seq[i], p);
    const bool leading = (i - 1) % ur == 0;
    if (leading ? v >= 0 : v != 0) {
      report.pattern_holds = false;
      record_violation(report, i, (i - 1) / ur,
                       "v_p(b_" + std::to_string(i) + ") = " + std::to_string(v) +
                           (leading ? ", expected < 0" : ", expected 0"));
    }
  }

  report.complete_blocks = len == 0 ? 0 : last / ur;
  report.ignored_tail = len == 0 ? 0 : last - report.complete_blocks * ur;
  for (std::size_t n = 0; n < report.complete_blocks; ++n) {
    std::string what = side(n);
    if (!what.empty()) {
      report.side_conditions_hold = false;
      record_violation(report, ur * n + 2, n, std::move(what));
    }
  }
  report.hypotheses_hold = report.pattern_holds && report.side_conditions_hold;

  const auto conv = convergents(seq);
  const auto vB = denominator_valuations(conv, p);
  auto fail_conclusion = [&](std::size_t n) {
    report.conclusion_holds = false;
    if (!report.first_conclusion_failure_block) report.first_conclusion_failure_block = n;
  };
  for (std::size_t n = 0; ur * n + ur + 1 <= last; ++n) {
    ++report.conclusion_blocks_checked;
    const std::size_t head = ur * n + 1;
    const std::size_t next = ur * n + ur + 1;
    bool ok = vB[head].has_value() && vB[next].has_value();
    for (std::size_t i = head + 1; ok && i < next; ++i) ok = vB[i] == vB[head];
    if (!ok || !(*vB[head] > *vB[next])) fail_conclusion(n);
  }

  for (std::size_t k = 0; k + 2 < len; ++k) {
    if (!vB[k] || !vB[k + 1] || !vB[k + 2]) {
      report.divergent_profile_holds = false;
      break;
    }
    const long here = *vB[k] + *vB[k + 1];
    const long there = *vB[k + 1] + *vB[k + 2];
    const bool strict = k % ur == 0 || k % ur == ur - 1;
    if (strict ? !(there < here) : there > here) {
      report.divergent_profile_holds = false;
      break;
    }
  }
  return report;
}

}  // namespace

PQSequence::PQSequence(Prime p, std::vector<Rational> b) : p_(p), b_(std::move(b)) {
  for (std::size_t n = 1; n < b_.size(); ++n) {
    if (b_[n].is_zero()) {
      throw DomainError("partial quotient b_" + std::to_string(n) + " is zero");
    }
  }
}

ZeroDenominatorError::ZeroDenominatorError(std::size_t n)
    : DomainError("continued fraction hits a zero denominator at B_" + std::to_string(n) +
                  " - not expandable"),
      n_(n) {}

std::vector<Convergent> convergents(const PQSequence& seq) {
  std::vector<Convergent> out;
  out.reserve(seq.size());
  Rational A_prev2(0), A_prev(1), B_prev2(1), B_prev(0);
  for (const auto& b : seq.b()) {
    Convergent c{b * A_prev + A_prev2, b * B_prev + B_prev2};
    A_prev2 = std::exchange(A_prev, c.A);
    B_prev2 = std::exchange(B_prev, c.B);
    out.push_back(std::move(c));
  }
  return out;
}

ValuationTrace valuation_trace(const PQSequence& seq) {
  ValuationTrace trace;
  const auto conv = convergents(seq);
  for (std::size_t n = 0; n < conv.size(); ++n) {
    if (conv[n].B.is_zero()) throw ZeroDenominatorError(n);
    trace.vB.push_back(val(conv[n].B, seq.p()));
  }
  for (std::size_t n = 0; n + 1 < trace.vB.size(); ++n) {
    trace.vBB.push_back(trace.vB[n] + trace.vB[n + 1]);
  }
  return trace;
}

PairConditionReport check_pair_condition(const PQSequence& seq) {
  PairConditionReport report;
  for (std::size_t n = 1; n + 1 < seq.size(); ++n) {
    if (val(seq[n], seq.p()) + val(seq[n + 1], seq.p()) >= 0) {
      report.holds = false;
      report.first_violation = n;
      break;
    }
  }
  return report;
}

DescentEquivalenceReport check_descent_equivalence(const PQSequence& seq) {
  const Prime p = seq.p();
  const ValuationTrace vt = valuation_trace(seq);
  const auto& vB = vt.vB;
  DescentEquivalenceReport report;

  for (std::size_t n = 1; n + 1 < seq.size(); ++n) {
    const long vnext = val(seq[n + 1], p);
    const bool cond_i = vnext + vB[n] < vB[n - 1];
    const bool cond_ii = val(seq[n], p) + vnext < 0;
    const bool restated = vB[n + 1] < vB[n - 1];
    if (!cond_i && report.condition_i) {
      report.condition_i = false;
      report.first_violation_i = n;
    }
    if (!cond_ii && report.condition_ii) {
      report.condition_ii = false;
      report.first_violation_ii = n;
    }
    if (cond_i != restated) report.restatement_agrees = false;
    if (restated && vnext <= 0 && !(vB[n + 1] <= vB[n])) report.monotone_consequence_holds = false;
  }
  report.agree = report.condition_i == report.condition_ii;

  for (std::size_t k = 0; k + 1 < vt.vBB.size(); ++k) {
    if (!(vt.vBB[k + 1] < vt.vBB[k])) {
      report.strictly_decreasing = false;
      break;
    }
  }
  report.strict_decrease_agrees = report.strictly_decreasing == report.condition_ii;
  return report;
}

BlockReport check_3step_hypotheses(const PQSequence& seq) {
  const Prime p = seq.p();
  return run_block_checker(seq, 3, [&](std::size_t n) -> std::string {
    const Rational side = seq[3 * n + 2] * seq[3 * n + 3] + Rational(1);
    if (!side.is_zero() && val(side, p) == 0) return {};
    return "v_p(b_" + std::to_string(3 * n + 3) + " b_" + std::to_string(3 * n + 2) +
           " + 1) != 0";
  });
}

USequence u_sequence(const PQSequence& seq, std::size_t m, std::size_t n_max) {
  if (m < 2) throw DomainError("U_m is defined for m >= 2");
  if (n_max >= 1 && m + n_max - 1 >= seq.size()) {
    throw DomainError("U_" + std::to_string(m) + "^(" + std::to_string(n_max) +
                      ") needs quotients beyond the sequence");
  }
  USequence u{m, {Rational(1)}};
  u.values.reserve(n_max + 1);
  if (n_max >= 1) u.values.push_back(seq[m]);
  for (std::size_t j = 1; j < n_max; ++j) {
    u.values.push_back(seq[m + j] * u.values[j] + u.values[j - 1]);
  }
  return u;
}

bool seqden_identity(const std::vector<Convergent>& conv, const USequence& first,
                     const USequence& second, std::size_t k, std::size_t n) {
  if (n < 2 || k + n >= conv.size()) throw DomainError("seqden index out of range");
  if (first.m != k + 2 || second.m != k + 3 || first.values.size() < n ||
      second.values.size() < n - 1) {
    throw DomainError("U sequences do not match the requested indices");
  }
  return conv[k + n].B == first.values[n - 1] * conv[k + 1].B + second.values[n - 2] * conv[k].B;
}

bool verify_seqden(const PQSequence& seq, std::size_t k, std::size_t n) {
  if (n < 2 || k + n >= seq.size()) throw DomainError("seqden index out of range");
  return seqden_identity(convergents(seq), u_sequence(seq, k + 2, n - 1),
                         u_sequence(seq, k + 3, n - 2), k, n);
}

BlockReport check_rstep_hypotheses(const PQSequence& seq, long r) {
  const Prime p = seq.p();
  const auto ur = static_cast<std::size_t>(r < 1 ? 1 : r);
  auto unit_run = [&](std::size_t m, std::size_t upto) -> std::string {
    const USequence u = u_sequence(seq, m, upto);
    for (std::size_t i = 2; i <= upto; ++i) {
      if (u.values[i].is_zero() || val(u.values[i], p) != 0) {
        return "v_p(U_" + std::to_string(m) + "^(" + std::to_string(i) + ")) != 0";
      }
    }
    return {};
  };
  return run_block_checker(seq, r, [&](std::size_t n) -> std::string {
    if (ur >= 3) {
      if (auto what = unit_run(ur * n + 2, ur - 1); !what.empty()) return what;
    }
    if (ur >= 4) return unit_run(ur * n + 3, ur - 2);
    return {};
  });
}

std::optional<long> approximation_valuation(const QuadIrr& alpha, const PQSequence& seq,
                                            std::size_t n) {
  if (n >= seq.size()) throw DomainError("convergent index out of range");
  const auto conv = convergents(seq);
  if (conv[n].B.is_zero()) throw ZeroDenominatorError(n);
  const QuadIrr diff = quad_sub_rational(alpha, conv[n].A / conv[n].B);
  if (diff.is_zero()) return std::nullopt;
  return valuation(diff);
}

}  // namespace padiccf

#pragma once

#include <cstddef>

#include "padiccf/convergence.hpp"

namespace padiccf {

// Partial quotients b_0 .. b_{3 n_blocks} following the one-negative, two-unit
// valuation pattern whose denominators never drop below v_p(B_n) = -1, so the
// continued fraction does not converge.
//
// b_0 = 0, b_1 = 1/p, b_2 = 2, b_3 = (p-1)/2 (so b_3 b_2 + 1 = p). Writing
// B_{3n+2} = a_2/p and B_{3n+3} = a_3, each further block takes
//   b_{3n+4} = 1/p if v_p(a_3 + a_2) = 0, else 2/p,
//   b_{3n+5} = 1,
//   b_{3n+6} = balanced residue of -a_4 a_5^{-1} mod p,
// where B_{3n+4} = a_4/p and B_{3n+5} = a_5/p.
PQSequence build_counterexample(Prime p, std::size_t n_blocks);

// v_p(B_n) >= bound for every n. Throws ZeroDenominatorError if some B_n = 0.
bool certify_bounded(const PQSequence& seq, long bound);

}  // namespace padiccf

// Generalized hypergeometric series evaluation.
//
// pfq_series sums pFq(a; b; z) by the term recurrence with a conservative
// stopping rule (three consecutive terms below tol * |partial sum|).
// gauss_2f1_at_1 handles the z = 1 boundary, where terms decay only like
// n^{-1-(c-a-b)}: the computed tail is completed with a fitted algebraic
// model summed by Hurwitz zeta values.  alternating_2f1_at_minus1 sums the
// conditionally convergent z = -1 series by iterated averaging of partial
// sums (Euler transform).
#pragma once

#include <vector>

#include "gl3/types.hpp"

namespace gl3 {

// Sum of pFq(a; b; z).  Requires p <= q+1 unless some a_i is a nonpositive
// integer (terminating case).  Throws DegenerateParameter if a b_j is within
// 1e-12 of a nonpositive integer, NonConvergent after 1e6 terms.
cx pfq_series(const std::vector<cx>& a, const std::vector<cx>& b, cx z, double tol);

// 2F1(a, b; c; 1).  Requires Re(c-a-b) > 0 (else NonConvergent): partial sum
// to N terms plus a fitted n^{-1-(c-a-b)}(1 + e1/n + e2/n^2) tail.
cx gauss_2f1_at_1(cx a, cx b, cx c, double tol);

// 3F2(u1, u2, u3; l1, l2; 1) by the same partial-sum-plus-fitted-tail scheme,
// with decay exponent 1 + (l1+l2-u1-u2-u3).  Requires a positive real excess
// unless some u_i is a nonpositive integer (terminating case).
cx pfq3_at_1(cx u1, cx u2, cx u3, cx l1, cx l2, double tol);

// 2F1(a, b; c; -1) by iterated pairwise averaging of the partial sums.
// Effective for Re(a+b-c) < 1 (terms eventually decay in magnitude).
cx alternating_2f1_at_minus1(cx a, cx b, cx c, double tol);

// Hurwitz zeta(s, a) = sum_{k>=0} (k+a)^{-s} for Re s > 1, a >= 2, via the
// Euler-Maclaurin expansion (used for series tail completion).
cx hurwitz_zeta(cx s, double a);

}  // namespace gl3

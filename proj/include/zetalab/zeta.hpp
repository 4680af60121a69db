#pragma once

#include "zetalab/bounded.hpp"

namespace zetalab {

// Truncation parameters for the Euler-Maclaurin evaluation of zeta(s):
// N is the summation cutoff, k the number of even-index correction terms.
struct ZetaParams {
    unsigned N = 20;
    unsigned k = 10;
};

// Heuristic defaults: N grows with |s| so the correction tail stays in its
// rapidly decreasing regime, k = 10 is plenty for double-or-better targets.
ZetaParams default_zeta_params(const Complex& s);

// sum_{n=1}^{N-1} n^{-s} + N^{1-s}/(s-1).  Requires N >= 2 and s != 1.
Complex partial_sum_S(const Complex& s, unsigned N);

// N^{-s}/2 + sum_{j=1}^{k} B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}.
// Requires N >= 2 and k >= 1.
Complex correction_B(const Complex& s, unsigned N, unsigned k);

// Evaluates zeta(s) for Re(s) >= 1, s != 1 as partial_sum_S + correction_B
// plus a remainder that is rigorously bounded by
//   |(s+2k+1)/(sigma+2k+1)| * |first omitted correction term|
// (sigma = Re(s)).  The returned bound adds a small cushion for arithmetic
// roundoff; internally everything is computed with 64 guard bits.
BoundedValue zeta_em(const Complex& s, const ZetaParams& params);
BoundedValue zeta_em(const Complex& s);

} // namespace zetalab

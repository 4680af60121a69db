#pragma once

#include "zetalab/bounded.hpp"

namespace zetalab {

// Real quadratic field Q(sqrt(D)) for squarefree D >= 2, carrying its
// discriminant (D when D = 1 mod 4, otherwise 4D).
struct QuadraticField {
    long d;
    long discriminant;

    static QuadraticField create(long D);
};

// Kronecker symbol (a/n) for n >= 0, fully multiplicative extension of the
// Jacobi symbol with the usual supplement at 2.
int kronecker_symbol(long long a, long long n);

// The quadratic character attached to the field: chi(n) = (discriminant/n).
int kronecker_chi(const QuadraticField& f, long long n);

// Exponential integral E(x) = int_x^inf e^-t / t dt for x > 0, with a
// rigorous absolute error bound no larger than tol.  Uses the enveloping
// asymptotic expansion when it reaches the target, otherwise the convergent
// series -gamma - ln x + sum (-1)^{k+1} x^k / (k k!) with guard precision
// covering the cancellation.  The value is returned at the internal working
// precision (at least the operand's), so the bound covers the stored number
// itself rather than a further-rounded copy.
BoundedValue exp_integral_E(const Real& x, const Real& tol);
BoundedValue exp_integral_E(const Real& x);

// Complementary error function erfc(x) = (2/sqrt(pi)) int_x^inf e^-t^2 dt
// for x > 0, same contract as exp_integral_E.
BoundedValue erfc_fn(const Real& x, const Real& tol);
BoundedValue erfc_fn(const Real& x);

// L(1, chi) via the rapidly converging split
//   (1/sqrt(Delta)) sum_{n<=m} chi(n) E(A n^2) + sum_{n<=m} (chi(n)/n) erfc(n sqrt(A))
// with A = pi/Delta.  The returned bound covers the series tail
// Delta^{3/2}/pi^2 * e^{-A m^2}/m^3, every special-function tolerance, and
// arithmetic roundoff; it decreases strictly as m grows.  The value keeps
// the internal precision, which is raised with m so the tail bound is never
// drowned by roundoff.
BoundedValue l_one_chi(const QuadraticField& f, unsigned m,
                       long prec = Real::kDefaultPrecision);

} // namespace zetalab

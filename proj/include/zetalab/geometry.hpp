#pragma once

#include <utility>

#include "zetalab/rational.hpp"

namespace zetalab {

// Point on the unit sphere with rational coordinates, invariant
// x1^2 + x2^2 + x3^2 = 1 enforced exactly on construction.
struct SpherePoint {
    BigRational x1, x2, x3;

    static SpherePoint create(const BigRational& x1, const BigRational& x2,
                              const BigRational& x3);
};

struct PlanePoint {
    BigRational u, v;
};

// Rational point obtained by pulling (u, v) back through the chart that
// projects from the north pole.  Total on the rational plane and never
// returns (0, 0, 1) itself.
SpherePoint rational_sphere_point(const BigRational& u, const BigRational& v);

// Projection charts from the poles: chart 1 omits (0,0,1) and maps
// p -> (x1, x2)/(1 - x3); chart 2 omits (0,0,-1) and divides by 1 + x3.
bool stereo_chart_contains(int chart, const SpherePoint& p);
PlanePoint stereo_forward(int chart, const SpherePoint& p);
SpherePoint stereo_inverse(int chart, const PlanePoint& q);
// Largest coordinate discrepancy after forward-then-inverse, exactly 0 when
// everything is consistent.
BigRational stereo_roundtrip_residual(int chart, const SpherePoint& p);

// Open half-sphere charts 1..6: chart i <= 3 covers x_i > 0 and drops the
// i-th coordinate, chart i+3 covers x_i < 0.
bool half_chart_contains(int chart, const SpherePoint& p);
PlanePoint half_forward(int chart, const SpherePoint& p);
// The inverse would need a square root, so the check squares instead:
// residual |(1 - u^2 - v^2) - x_i^2|, exactly 0 on the sphere.
BigRational half_roundtrip_residual(int chart, const SpherePoint& p);

struct Mat2 {
    BigRational a, b, c, d; // [[a, b], [c, d]]

    static Mat2 identity();
    BigRational det() const;
    friend Mat2 operator*(const Mat2& l, const Mat2& r);
    friend bool operator==(const Mat2& l, const Mat2& r);
    std::pair<BigRational, BigRational> apply(const std::pair<BigRational, BigRational>& f) const;
};

// Tangent-frame transition between the coordinate patches U_i = {|x_i| < 1},
// available for the pairs (to, from) in {(2,1), (3,2), (1,3)}:
//   g21 = -1/(x2^2+x3^2) [[x1 x2, x3], [-x3, x1 x2]]
//   g32 = -1/(x1^2+x3^2) [[x2 x3, x1], [-x1, x2 x3]]
//   g13 = -1/(x1^2+x2^2) [[x1 x3, x2], [-x2, x1 x3]]
// Requires p in both patches.
Mat2 transition_matrix(int to, int from, const SpherePoint& p);

// g13 g32 g21 on the triple overlap; the identity when the three transition
// maps are mutually consistent.
Mat2 cocycle_product(const SpherePoint& p);

// Tangent vector (u, v, w) at a point, <p, t> = 0.
struct TangentVector {
    BigRational u, v, w;
};

// Local trivialization of the tangent plane over U_i:
//   chart 1: (v x3 - w x2, u)
//   chart 2: (w x1 - u x3, v)
//   chart 3: (u x2 - v x1, w)
// The forward map only needs an exactly tangent vector; it degenerates on
// the boundary |x_i| = 1 but still evaluates.  The inverse solves a 2x2
// system with determinant +-(1 - x_i^2) and therefore requires |x_i| < 1.
std::pair<BigRational, BigRational> bundle_trivialization(int chart, const SpherePoint& p,
                                                          const TangentVector& t);
TangentVector bundle_trivialization_inverse(int chart, const SpherePoint& p,
                                            const std::pair<BigRational, BigRational>& fiber);

// Exact consistency of trivializations with the transition matrices at p:
// for each pair, pushing both basis fibers through chart `from`'s inverse
// and chart `to`'s forward must equal multiplication by the matrix.
bool bundle_consistent(const SpherePoint& p);

} // namespace zetalab

#include "zetalab/geometry.hpp"

#include "zetalab/errors.hpp"

namespace zetalab {

namespace {

const BigRational kOne(1);

BigRational sq(const BigRational& x) { return x * x; }

const BigRational& coord(const SpherePoint& p, int i) {
    switch (i) {
        case 1: return p.x1;
        case 2: return p.x2;
        case 3: return p.x3;
    }
    throw InternalError("coordinate index out of range");
}

int half_axis(int chart) {
    if (chart < 1 || chart > 6) throw DomainError("half-sphere chart index must be 1..6");
    return (chart - 1) % 3 + 1;
}

void require_patch(int i, const SpherePoint& p) {
    if (i < 1 || i > 3) throw DomainError("patch index must be 1..3");
    if (!(coord(p, i).abs() < kOne))
        throw DomainError("point is outside the coordinate patch");
}

// solves [[a, b], [c, d]] (x, y)^T = (r1, r2)^T with a nonzero determinant
std::pair<BigRational, BigRational> solve2(const BigRational& a, const BigRational& b,
                                           const BigRational& c, const BigRational& d,
                                           const BigRational& r1, const BigRational& r2) {
    BigRational det = a * d - b * c;
    if (det.is_zero()) throw InternalError("trivialization system is singular");
    return {(d * r1 - b * r2) / det, (a * r2 - c * r1) / det};
}

} // namespace

SpherePoint SpherePoint::create(const BigRational& x1, const BigRational& x2,
                                const BigRational& x3) {
    if (sq(x1) + sq(x2) + sq(x3) != kOne)
        throw DomainError("coordinates do not satisfy x1^2 + x2^2 + x3^2 = 1");
    return SpherePoint{x1, x2, x3};
}

SpherePoint rational_sphere_point(const BigRational& u, const BigRational& v) {
    BigRational s = sq(u) + sq(v);
    BigRational d = s + kOne;
    return SpherePoint::create(u * BigRational(2) / d, v * BigRational(2) / d,
                               (s - kOne) / d);
}

bool stereo_chart_contains(int chart, const SpherePoint& p) {
    if (chart == 1) return p.x3 != kOne;
    if (chart == 2) return p.x3 != -kOne;
    throw DomainError("projection chart index must be 1 or 2");
}

PlanePoint stereo_forward(int chart, const SpherePoint& p) {
    if (!stereo_chart_contains(chart, p))
        throw DomainError("point is the omitted pole of this chart");
    BigRational den = (chart == 1) ? kOne - p.x3 : kOne + p.x3;
    return PlanePoint{p.x1 / den, p.x2 / den};
}

SpherePoint stereo_inverse(int chart, const PlanePoint& q) {
    if (chart == 1) return rational_sphere_point(q.u, q.v);
    if (chart != 2) throw DomainError("projection chart index must be 1 or 2");
    BigRational s = sq(q.u) + sq(q.v);
    BigRational d = s + kOne;
    return SpherePoint::create(q.u * BigRational(2) / d, q.v * BigRational(2) / d,
                               (kOne - s) / d);
}

BigRational stereo_roundtrip_residual(int chart, const SpherePoint& p) {
    SpherePoint r = stereo_inverse(chart, stereo_forward(chart, p));
    BigRational out = (r.x1 - p.x1).abs();
    BigRational d2 = (r.x2 - p.x2).abs();
    if (out < d2) out = d2;
    BigRational d3 = (r.x3 - p.x3).abs();
    if (out < d3) out = d3;
    return out;
}

bool half_chart_contains(int chart, const SpherePoint& p) {
    int axis = half_axis(chart);
    const BigRational& x = coord(p, axis);
    return chart <= 3 ? x.sign() > 0 : x.sign() < 0;
}

PlanePoint half_forward(int chart, const SpherePoint& p) {
    if (!half_chart_contains(chart, p))
        throw DomainError("point is not in the open half-sphere of this chart");
    switch (half_axis(chart)) {
        case 1: return PlanePoint{p.x2, p.x3};
        case 2: return PlanePoint{p.x1, p.x3};
        default: return PlanePoint{p.x1, p.x2};
    }
}

BigRational half_roundtrip_residual(int chart, const SpherePoint& p) {
    PlanePoint q = half_forward(chart, p);
    BigRational recon = kOne - sq(q.u) - sq(q.v);
    return (recon - sq(coord(p, half_axis(chart)))).abs();
}

Mat2 Mat2::identity() { return Mat2{kOne, BigRational(0), BigRational(0), kOne}; }

BigRational Mat2::det() const { return a * d - b * c; }

Mat2 operator*(const Mat2& l, const Mat2& r) {
    return Mat2{l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c,
                l.c * r.b + l.d * r.d};
}

bool operator==(const Mat2& l, const Mat2& r) {
    return l.a == r.a && l.b == r.b && l.c == r.c && l.d == r.d;
}

std::pair<BigRational, BigRational> Mat2::apply(
    const std::pair<BigRational, BigRational>& f) const {
    return {a * f.first + b * f.second, c * f.first + d * f.second};
}

Mat2 transition_matrix(int to, int from, const SpherePoint& p) {
    require_patch(to, p);
    require_patch(from, p);
    if (to == 2 && from == 1) {
        BigRational den = sq(p.x2) + sq(p.x3);
        BigRational s = -kOne / den;
        return Mat2{s * p.x1 * p.x2, s * p.x3, s * (-p.x3), s * p.x1 * p.x2};
    }
    if (to == 3 && from == 2) {
        BigRational den = sq(p.x1) + sq(p.x3);
        BigRational s = -kOne / den;
        return Mat2{s * p.x2 * p.x3, s * p.x1, s * (-p.x1), s * p.x2 * p.x3};
    }
    if (to == 1 && from == 3) {
        BigRational den = sq(p.x1) + sq(p.x2);
        BigRational s = -kOne / den;
        return Mat2{s * p.x1 * p.x3, s * p.x2, s * (-p.x2), s * p.x1 * p.x3};
    }
    throw DomainError("transition matrix available for pairs (2,1), (3,2), (1,3)");
}

Mat2 cocycle_product(const SpherePoint& p) {
    return transition_matrix(1, 3, p) * transition_matrix(3, 2, p) * transition_matrix(2, 1, p);
}

std::pair<BigRational, BigRational> bundle_trivialization(int chart, const SpherePoint& p,
                                                          const TangentVector& t) {
    if (chart < 1 || chart > 3) throw DomainError("patch index must be 1..3");
    if (!(p.x1 * t.u + p.x2 * t.v + p.x3 * t.w).is_zero())
        throw DomainError("vector is not tangent at the point");
    switch (chart) {
        case 1: return {t.v * p.x3 - t.w * p.x2, t.u};
        case 2: return {t.w * p.x1 - t.u * p.x3, t.v};
        default: return {t.u * p.x2 - t.v * p.x1, t.w};
    }
}

TangentVector bundle_trivialization_inverse(int chart, const SpherePoint& p,
                                            const std::pair<BigRational, BigRational>& fiber) {
    require_patch(chart, p);
    const BigRational& f1 = fiber.first;
    const BigRational& f2 = fiber.second;
    if (chart == 1) {
        // v x3 - w x2 = f1, x2 v + x3 w = -x1 f2
        auto [v, w] = solve2(p.x3, -p.x2, p.x2, p.x3, f1, -(p.x1 * f2));
        return TangentVector{f2, v, w};
    }
    if (chart == 2) {
        // w x1 - u x3 = f1, x1 u + x3 w = -x2 f2
        auto [u, w] = solve2(-p.x3, p.x1, p.x1, p.x3, f1, -(p.x2 * f2));
        return TangentVector{u, f2, w};
    }
    // u x2 - v x1 = f1, x1 u + x2 v = -x3 f2
    auto [u, v] = solve2(p.x2, -p.x1, p.x1, p.x2, f1, -(p.x3 * f2));
    return TangentVector{u, v, f2};
}

bool bundle_consistent(const SpherePoint& p) {
    const int pairs[3][2] = {{2, 1}, {3, 2}, {1, 3}};
    const std::pair<BigRational, BigRational> basis[2] = {{kOne, BigRational(0)},
                                                          {BigRational(0), kOne}};
    for (const auto& pr : pairs) {
        Mat2 g = transition_matrix(pr[0], pr[1], p);
        for (const auto& f : basis) {
            TangentVector t = bundle_trivialization_inverse(pr[1], p, f);
            auto pushed = bundle_trivialization(pr[0], p, t);
            auto mapped = g.apply(f);
            if (!(pushed.first == mapped.first && pushed.second == mapped.second)) return false;
        }
    }
    return true;
}

} // namespace zetalab

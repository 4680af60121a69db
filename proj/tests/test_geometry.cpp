#include "doctest.h"

#include <random>
#include <utility>

#include "zetalab/errors.hpp"
#include "zetalab/geometry.hpp"

using namespace zetalab;

namespace {

SpherePoint seed_point() {
    // (u, v) = (3, 4): denominator 9 + 16 + 1 = 26, mapped to
    // (6/26, 8/26, 24/26) = (3/13, 4/13, 12/13).
    return rational_sphere_point(BigRational(3), BigRational(4));
}

BigRational rr(long n, long d) { return BigRational(n, d); }

} // namespace

TEST_CASE("sphere points require the exact unit norm") {
    CHECK_NOTHROW(SpherePoint::create(rr(3, 5), rr(4, 5), BigRational(0)));
    CHECK_NOTHROW(SpherePoint::create(BigRational(1), BigRational(0), BigRational(0)));
    CHECK_THROWS_AS(SpherePoint::create(rr(1, 2), rr(1, 2), rr(1, 2)), DomainError);
    CHECK_THROWS_AS(SpherePoint::create(BigRational(1), BigRational(1), BigRational(0)),
                    DomainError);
}

TEST_CASE("the rational parameterization lands on the sphere") {
    SpherePoint p = seed_point();
    CHECK(p.x1 == rr(3, 13));
    CHECK(p.x2 == rr(4, 13));
    CHECK(p.x3 == rr(12, 13));

    CHECK(rational_sphere_point(BigRational(0), BigRational(0)).x3 == BigRational(-1));
    SpherePoint q = rational_sphere_point(rr(-7, 3), rr(1, 2));
    CHECK(q.x1 * q.x1 + q.x2 * q.x2 + q.x3 * q.x3 == BigRational(1));
}

TEST_CASE("stereographic charts cover everything but their pole") {
    SpherePoint north = SpherePoint::create(BigRational(0), BigRational(0), BigRational(1));
    SpherePoint south = SpherePoint::create(BigRational(0), BigRational(0), BigRational(-1));
    CHECK(!stereo_chart_contains(1, north));
    CHECK(stereo_chart_contains(1, south));
    CHECK(stereo_chart_contains(2, north));
    CHECK(!stereo_chart_contains(2, south));

    CHECK_THROWS_AS(stereo_forward(1, north), DomainError);
    CHECK_THROWS_AS(stereo_forward(2, south), DomainError);
    CHECK_THROWS_AS(stereo_forward(3, north), DomainError); // no such chart
}

TEST_CASE("stereographic roundtrips are exact in rational arithmetic") {
    SpherePoint p = seed_point();
    for (int chart : {1, 2}) {
        CHECK(stereo_roundtrip_residual(chart, p) == BigRational(0));
        PlanePoint q = stereo_forward(chart, p);
        SpherePoint back = stereo_inverse(chart, q);
        CHECK(back.x1 == p.x1);
        CHECK(back.x2 == p.x2);
        CHECK(back.x3 == p.x3);
    }
    // chart 1 at the seed point: (3/13, 4/13) / (1/13) = (3, 4)
    PlanePoint q1 = stereo_forward(1, p);
    CHECK(q1.u == BigRational(3));
    CHECK(q1.v == BigRational(4));
}

TEST_CASE("stereographic inverse hits the sphere from any plane point") {
    for (long n = -4; n <= 4; ++n) {
        PlanePoint q{rr(n, 3), rr(2 - n, 5)};
        for (int chart : {1, 2}) {
            SpherePoint p = stereo_inverse(chart, q);
            CHECK(p.x1 * p.x1 + p.x2 * p.x2 + p.x3 * p.x3 == BigRational(1));
            PlanePoint back = stereo_forward(chart, p);
            CHECK(back.u == q.u);
            CHECK(back.v == q.v);
        }
    }
}

TEST_CASE("half-sphere charts test the sign of their coordinate") {
    SpherePoint p = seed_point(); // all coordinates positive
    CHECK(half_chart_contains(1, p));
    CHECK(half_chart_contains(2, p));
    CHECK(half_chart_contains(3, p));
    CHECK(!half_chart_contains(4, p));
    CHECK(!half_chart_contains(5, p));
    CHECK(!half_chart_contains(6, p));

    SpherePoint m = SpherePoint::create(rr(-3, 5), BigRational(0), rr(4, 5));
    CHECK(!half_chart_contains(1, m));
    CHECK(half_chart_contains(4, m));
    CHECK(!half_chart_contains(2, m)); // zero is on neither side
    CHECK(!half_chart_contains(5, m));

    CHECK_THROWS_AS(half_forward(2, m), DomainError);
    CHECK_THROWS_AS(half_forward(0, p), DomainError);
    CHECK_THROWS_AS(half_forward(7, p), DomainError);
}

TEST_CASE("half-sphere projections drop the right coordinate exactly") {
    SpherePoint p = seed_point();
    PlanePoint q3 = half_forward(3, p);
    CHECK(q3.u == p.x1);
    CHECK(q3.v == p.x2);
    for (int chart = 1; chart <= 3; ++chart)
        CHECK(half_roundtrip_residual(chart, p) == BigRational(0));
    SpherePoint m = SpherePoint::create(rr(-3, 5), BigRational(0), rr(4, 5));
    CHECK(half_roundtrip_residual(4, m) == BigRational(0));
}

TEST_CASE("transition matrices match the closed forms at the seed point") {
    SpherePoint p = seed_point();
    // x2^2 + x3^2 = 160/169, scale -169/160, x1 x2 = 12/169, x3 = 12/13:
    // g21 = [[-3/40, -39/40], [39/40, -3/40]]
    Mat2 g21 = transition_matrix(2, 1, p);
    CHECK(g21.a == rr(-3, 40));
    CHECK(g21.b == rr(-39, 40));
    CHECK(g21.c == rr(39, 40));
    CHECK(g21.d == rr(-3, 40));

    // determinant of each transition is det(scale * [[m, n], [-n, m]])
    // = scale^2 (m^2 + n^2) > 0
    CHECK(g21.det() > BigRational(0));
    CHECK(transition_matrix(3, 2, p).det() > BigRational(0));
    CHECK(transition_matrix(1, 3, p).det() > BigRational(0));
}

TEST_CASE("transitions exist only for the documented chart pairs") {
    SpherePoint p = seed_point();
    CHECK_THROWS_AS(transition_matrix(1, 2, p), DomainError);
    CHECK_THROWS_AS(transition_matrix(2, 3, p), DomainError);
    CHECK_THROWS_AS(transition_matrix(3, 1, p), DomainError);
    CHECK_THROWS_AS(transition_matrix(2, 2, p), DomainError);

    // (1, 0, 0) sits on the boundary |x1| = 1 of U_1
    SpherePoint e1 = SpherePoint::create(BigRational(1), BigRational(0), BigRational(0));
    CHECK_THROWS_AS(transition_matrix(2, 1, e1), DomainError);
    CHECK_THROWS_AS(transition_matrix(1, 3, e1), DomainError);
}

TEST_CASE("the three transitions compose to the identity") {
    SpherePoint p = seed_point();
    CHECK(cocycle_product(p) == Mat2::identity());

    std::mt19937 rng(5);
    std::uniform_int_distribution<long> num(-9, 9);
    int done = 0;
    while (done < 25) {
        BigRational u(num(rng), 1 + (num(rng) + 9) % 7);
        BigRational v(num(rng), 1 + (num(rng) + 9) % 5);
        SpherePoint q = rational_sphere_point(u, v);
        // the product needs every |x_i| < 1
        if (q.x1.abs() >= BigRational(1) || q.x2.abs() >= BigRational(1) ||
            q.x3.abs() >= BigRational(1))
            continue;
        CHECK(cocycle_product(q) == Mat2::identity());
        ++done;
    }
}

TEST_CASE("matrix algebra on exact rationals") {
    Mat2 i = Mat2::identity();
    CHECK(i.det() == BigRational(1));
    Mat2 m{rr(1, 2), rr(-1, 3), rr(1, 5), rr(2, 7)};
    CHECK(m * i == m);
    CHECK(i * m == m);
    CHECK(m.det() == rr(1, 7) + rr(1, 15));
    auto fiber = m.apply({BigRational(1), BigRational(0)});
    CHECK(fiber.first == rr(1, 2));
    CHECK(fiber.second == rr(1, 5));
}

TEST_CASE("trivializations require tangency but evaluate on chart boundaries") {
    SpherePoint p = seed_point();
    TangentVector t{rr(4, 13), rr(-3, 13), BigRational(0)}; // <p, t> = 0
    CHECK_NOTHROW(bundle_trivialization(1, p, t));

    TangentVector skew{BigRational(1), BigRational(0), BigRational(0)};
    CHECK_THROWS_AS(bundle_trivialization(1, p, skew), DomainError);
    CHECK_THROWS_AS(bundle_trivialization(0, p, t), DomainError);
    CHECK_THROWS_AS(bundle_trivialization(4, p, t), DomainError);

    // At (1,0,0) with tangent (0,1,0) the printed formulas give a degenerate
    // chart-1 fiber (0,0) and the faithful chart-2 fiber (0,1).
    SpherePoint e1 = SpherePoint::create(BigRational(1), BigRational(0), BigRational(0));
    TangentVector te{BigRational(0), BigRational(1), BigRational(0)};
    auto f1 = bundle_trivialization(1, e1, te);
    CHECK(f1.first == BigRational(0));
    CHECK(f1.second == BigRational(0));
    auto f2 = bundle_trivialization(2, e1, te);
    CHECK(f2.first == BigRational(0));
    CHECK(f2.second == BigRational(1));

    // The inverse solve is only defined strictly inside the patch.
    CHECK_THROWS_AS(bundle_trivialization_inverse(1, e1, f1), DomainError);
    TangentVector back = bundle_trivialization_inverse(2, e1, f2);
    CHECK(back.u == te.u);
    CHECK(back.v == te.v);
    CHECK(back.w == te.w);
}

TEST_CASE("trivializations invert exactly on their fibers") {
    SpherePoint p = seed_point();
    TangentVector t{rr(4, 13), rr(-3, 13), BigRational(0)};
    for (int chart = 1; chart <= 3; ++chart) {
        auto fiber = bundle_trivialization(chart, p, t);
        TangentVector back = bundle_trivialization_inverse(chart, p, fiber);
        CHECK(back.u == t.u);
        CHECK(back.v == t.v);
        CHECK(back.w == t.w);
    }
    // and the other way: fiber -> vector -> fiber
    std::pair<BigRational, BigRational> f{rr(2, 3), rr(-1, 4)};
    for (int chart = 1; chart <= 3; ++chart) {
        TangentVector v = bundle_trivialization_inverse(chart, p, f);
        CHECK(p.x1 * v.u + p.x2 * v.v + p.x3 * v.w == BigRational(0));
        auto back = bundle_trivialization(chart, p, v);
        CHECK(back.first == f.first);
        CHECK(back.second == f.second);
    }
}

TEST_CASE("trivializations and transitions agree on overlaps") {
    CHECK(bundle_consistent(seed_point()));
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> num(-8, 8);
    int done = 0;
    while (done < 25) {
        BigRational u(num(rng), 1 + (num(rng) + 8) % 6);
        BigRational v(num(rng), 1 + (num(rng) + 8) % 4);
        SpherePoint q = rational_sphere_point(u, v);
        if (q.x1.abs() >= BigRational(1) || q.x2.abs() >= BigRational(1) ||
            q.x3.abs() >= BigRational(1))
            continue;
        CHECK(bundle_consistent(q));
        ++done;
    }
}

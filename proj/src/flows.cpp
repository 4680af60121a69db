#include "zetalab/flows.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

namespace zetalab {

namespace {

constexpr std::size_t kMaxDim = 200;
constexpr long kMaxScalings = 40;

std::size_t checked_dim(std::size_t n) {
    if (n < 1 || n > kMaxDim) throw DomainError("matrix dimension out of range");
    return n;
}

// Pinned tail target for the scaled series; tightened automatically when
// the working precision can do better.
Real series_tail_target(long prec, long wp) {
    Real pinned(1e-14, wp);
    Real by_precision = Real::pow2(-(prec - 20), wp);
    return min(pinned, by_precision);
}

} // namespace

MatC::MatC(std::size_t n, long prec) : n_(checked_dim(n)), a_(n * n, Complex(prec)) {}

MatC MatC::identity(std::size_t n, long prec) {
    MatC m(n, prec);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Complex(Real(1.0, prec));
    return m;
}

long MatC::precision() const {
    long p = Real::kMinPrecision;
    for (const Complex& z : a_) p = std::max(p, z.precision());
    return p;
}

MatC operator+(const MatC& l, const MatC& r) {
    if (l.n_ != r.n_) throw DomainError("matrix dimensions differ");
    MatC out(l.n_, std::max(l.precision(), r.precision()));
    for (std::size_t i = 0; i < l.a_.size(); ++i) out.a_[i] = l.a_[i] + r.a_[i];
    return out;
}

MatC operator-(const MatC& l, const MatC& r) {
    if (l.n_ != r.n_) throw DomainError("matrix dimensions differ");
    MatC out(l.n_, std::max(l.precision(), r.precision()));
    for (std::size_t i = 0; i < l.a_.size(); ++i) out.a_[i] = l.a_[i] - r.a_[i];
    return out;
}

MatC operator*(const MatC& l, const MatC& r) {
    if (l.n_ != r.n_) throw DomainError("matrix dimensions differ");
    std::size_t n = l.n_;
    MatC out(n, std::max(l.precision(), r.precision()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex acc(out.precision());
            for (std::size_t k = 0; k < n; ++k) acc += l.at(i, k) * r.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

MatC MatC::scaled(const Real& f) const {
    MatC out(n_, std::max(precision(), f.precision()));
    Complex cf(f);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * cf;
    return out;
}

MatC MatC::scaled(const Complex& f) const {
    MatC out(n_, std::max(precision(), f.precision()));
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * f;
    return out;
}

MatC MatC::conj_transpose() const {
    MatC out(n_, precision());
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out.at(i, j) = at(j, i).conj();
    return out;
}

Real MatC::frobenius() const {
    Real acc(0.0, precision());
    for (const Complex& z : a_) acc += z.re() * z.re() + z.im() * z.im();
    return acc.sqrt();
}

Real MatC::max_abs_entry() const {
    Real out(0.0, precision());
    for (const Complex& z : a_) out = max(out, z.abs());
    return out;
}

MatrixExpResult matrix_exponential(const MatC& a) {
    long prec = a.precision();
    long wp = prec + 32;
    std::size_t n = a.size();

    Real norm = a.frobenius().with_precision(wp);
    if (!norm.is_finite() || norm > 1e12)
        throw DomainError("matrix norm too large for the exponential");

    long j = 0;
    Real scaled_norm = norm;
    while (scaled_norm > 0.5) {
        scaled_norm = scaled_norm / 2;
        if (++j > kMaxScalings) throw InternalError("scaling loop ran away");
    }

    MatC b = a.scaled(Real::pow2(-j, wp));

    // smallest degree m with ||B||^{m+1}/(m+1)! e^{||B||} below target
    Real target = series_tail_target(prec, wp);
    Real tail = scaled_norm * scaled_norm.exp();
    long m = 0;
    while (tail > target) {
        ++m;
        tail = tail * scaled_norm / (m + 1);
        if (m > 10000) throw InternalError("series degree selection ran away");
    }

    MatC sum = MatC::identity(n, wp);
    MatC term = MatC::identity(n, wp);
    for (long k = 1; k <= m; ++k) {
        term = (term * b).scaled(Real(1.0, wp) / k);
        sum = sum + term;
    }
    for (long i = 0; i < j; ++i) sum = sum * sum;

    // the series tail delta inflates to at most delta 2^j e^{||A||} 2 through
    // the squarings; roundoff rides on top of entry scales up to e^{||A||}
    Real grown = norm.exp();
    Real bound = tail * Real::pow2(j, wp) * grown * 2 +
                 Real::pow2(-wp + 48, wp) * (grown + 1) * (m + j * static_cast<long>(n) + 8);
    return MatrixExpResult{sum, bound.checked("matrix exponential bound")};
}

FlowResult linear_flow(const MatC& a, const Real& t, const std::vector<Complex>& x0) {
    if (x0.size() != a.size()) throw DomainError("state dimension does not match the matrix");
    MatrixExpResult e = matrix_exponential(a.scaled(t));

    long wp = e.value.precision();
    std::size_t n = a.size();
    FlowResult out{std::vector<Complex>(), Real(0.0, wp)};
    Real x0_norm(0.0, wp);
    for (const Complex& c : x0) x0_norm += c.re() * c.re() + c.im() * c.im();
    x0_norm = x0_norm.sqrt();
    for (std::size_t i = 0; i < n; ++i) {
        Complex acc(wp);
        for (std::size_t k = 0; k < n; ++k) acc += e.value.at(i, k) * x0[k];
        out.state.push_back(acc);
    }
    out.bound = e.bound * (x0_norm + 1) + Real::pow2(-wp + 48, wp) * (x0_norm + 1) *
                                              static_cast<long>(n + 2);
    return out;
}

OrbitStats kronecker_orbit(double theta, std::size_t n, double start) {
    if (n < 1) throw DomainError("orbit length must be >= 1");
    if (n > 50000000) throw DomainError("orbit length too large for desk scale");
    if (!std::isfinite(theta) || !std::isfinite(start))
        throw DomainError("orbit parameters must be finite");

    OrbitStats out;
    bool keep_points = n <= 10000;
    if (keep_points) out.points.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        double y = std::fmod(start + static_cast<double>(k) * theta, 1.0);
        if (y < 0) y += 1.0;
        if (y >= 1.0) y = 0.0;
        if (keep_points) out.points.push_back(y);
        auto bin = static_cast<std::size_t>(y * 100.0);
        if (bin > 99) bin = 99;
        ++out.histogram[bin];
    }
    double expected = static_cast<double>(n) / 100.0;
    for (long count : out.histogram)
        out.max_bin_deviation =
            std::max(out.max_bin_deviation, std::abs(static_cast<double>(count) - expected) / expected);
    return out;
}

ClockShiftPair clock_shift_pair(unsigned q, long p, long prec) {
    if (q < 2) throw DomainError("clock-shift pair needs q >= 2");
    if (q > 4096) throw DomainError("q too large for desk scale");
    if (std::gcd(static_cast<long>(q), std::labs(p)) != 1)
        throw DomainError("p and q must be coprime");

    Real theta = Real::pi(prec) * (2 * p) / static_cast<long>(q);
    auto unit = [&](long k) {
        auto [s, c] = (theta * k).sin_cos();
        return Complex(c, s);
    };
    Complex omega = unit(1);

    MatC u(q, prec), v(q, prec);
    for (unsigned k = 0; k < q; ++k) {
        u.at(k, k) = unit(static_cast<long>(k));
        v.at((k + 1) % q, k) = Complex(Real(1.0, prec));
    }

    MatC lhs = u * v;
    MatC rhs = (v * u).scaled(omega);
    MatC eye = MatC::identity(q, prec);
    Real unitary = max((u * u.conj_transpose() - eye).max_abs_entry(),
                       (v * v.conj_transpose() - eye).max_abs_entry());
    return ClockShiftPair{u, v, omega, (lhs - rhs).max_abs_entry(), unitary};
}

} // namespace zetalab

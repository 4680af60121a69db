#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "zetalab/real.hpp"

namespace zetalab {

// Dense square complex matrix, row-major.
class MatC {
  public:
    MatC(std::size_t n, long prec = Real::kDefaultPrecision);

    static MatC identity(std::size_t n, long prec = Real::kDefaultPrecision);

    std::size_t size() const { return n_; }
    Complex& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Complex& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    long precision() const;

    friend MatC operator+(const MatC& l, const MatC& r);
    friend MatC operator-(const MatC& l, const MatC& r);
    friend MatC operator*(const MatC& l, const MatC& r);
    MatC scaled(const Real& f) const;
    MatC scaled(const Complex& f) const;
    MatC conj_transpose() const;

    Real frobenius() const;
    Real max_abs_entry() const;

  private:
    std::size_t n_;
    std::vector<Complex> a_;
};

// e^A by scaling and squaring: A/2^j is fed to the Taylor series with the
// degree chosen so the series tail (in Frobenius norm) drops below the
// pinned target, then the result is squared j times.  bound dominates the
// entrywise error of value, combining the series tail amplified through the
// squarings with arithmetic roundoff.
struct MatrixExpResult {
    MatC value;
    Real bound;
};

MatrixExpResult matrix_exponential(const MatC& a);

// State of x' = A x at time t from x0, i.e. e^{tA} x0, with an entrywise
// error bound.
struct FlowResult {
    std::vector<Complex> state;
    Real bound;
};

FlowResult linear_flow(const MatC& a, const Real& t, const std::vector<Complex>& x0);

// Orbit y_k = start + k theta mod 1 for k < n, with a 100-bin occupancy
// histogram.  points is filled only for n <= 10000 to keep results
// desk-sized; max_bin_deviation is max_b |count_b - n/100| / (n/100).
struct OrbitStats {
    std::vector<double> points;
    std::array<long, 100> histogram{};
    double max_bin_deviation = 0.0;
};

OrbitStats kronecker_orbit(double theta, std::size_t n, double start);

// The q x q clock matrix U = diag(1, w, ..., w^{q-1}) and shift matrix
// V e_k = e_{k+1 mod q} for w = e^{2 pi i p / q}, gcd(p, q) = 1.  They obey
// U V = w V U; the residuals report how far the computed pair is from that
// relation and from unitarity, in max-abs entry norm.
struct ClockShiftPair {
    MatC u;
    MatC v;
    Complex omega;
    Real commutation_residual;
    Real unitarity_residual;
};

ClockShiftPair clock_shift_pair(unsigned q, long p, long prec = Real::kDefaultPrecision);

} // namespace zetalab

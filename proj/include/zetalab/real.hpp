#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "zetalab/errors.hpp"
#include "zetalab/rational.hpp"

namespace zetalab {

// Floating-point real with explicit mantissa precision, MPFR underneath.
// Precision is chosen when a value is constructed and travels with it;
// binary operations widen to the larger operand precision. Operations that
// produce NaN/Inf throw RangeError instead of letting the value escape.
class Real {
  public:
    static constexpr long kDefaultPrecision = 128; // bits of mantissa
    static constexpr long kMinPrecision = 64;
    static constexpr long kMaxPrecision = 1l << 22;

    explicit Real(long prec = kDefaultPrecision);
    Real(double v, long prec);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    static Real from_long(long v, long prec = kDefaultPrecision);
    // Decimal (or "1e-3" style) literal; rejects trailing garbage.
    static Real from_string(const std::string& s, long prec = kDefaultPrecision);
    static Real from_bigint(const BigInt& z, long prec = kDefaultPrecision);
    static Real from_rational(const BigRational& q, long prec = kDefaultPrecision);
    static Real pi(long prec = kDefaultPrecision);
    static Real euler_gamma(long prec = kDefaultPrecision);
    // 2^e exactly (e may be negative); handy for rigorous roundoff slack.
    static Real pow2(long e, long prec = kDefaultPrecision);

    long precision() const { return mpfr_get_prec(x_); }
    Real with_precision(long prec) const;

    Real operator-() const;
    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    Real& operator+=(const Real& b) { return *this = *this + b; }
    Real& operator-=(const Real& b) { return *this = *this - b; }
    Real& operator*=(const Real& b) { return *this = *this * b; }
    Real& operator/=(const Real& b) { return *this = *this / b; }

    friend Real operator*(const Real& a, long b);
    friend Real operator/(const Real& a, long b);
    friend Real operator+(const Real& a, long b);
    friend Real operator-(const Real& a, long b);

    int cmp(const Real& o) const { return mpfr_cmp(x_, o.x_); }
    friend bool operator<(const Real& a, const Real& b) { return a.cmp(b) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return a.cmp(b) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return a.cmp(b) > 0; }
    friend bool operator>=(const Real& a, const Real& b) { return a.cmp(b) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return a.cmp(b) == 0; }
    friend bool operator!=(const Real& a, const Real& b) { return a.cmp(b) != 0; }
    bool operator<(double d) const { return mpfr_cmp_d(x_, d) < 0; }
    bool operator<=(double d) const { return mpfr_cmp_d(x_, d) <= 0; }
    bool operator>(double d) const { return mpfr_cmp_d(x_, d) > 0; }
    bool operator>=(double d) const { return mpfr_cmp_d(x_, d) >= 0; }

    bool is_zero() const { return mpfr_zero_p(x_); }
    int sign() const { return mpfr_sgn(x_); }
    bool is_finite() const { return mpfr_number_p(x_) != 0; }

    Real abs() const;
    Real sqrt() const;
    Real exp() const;
    Real log() const;
    Real floor() const;
    Real ceil() const;
    long to_long() const { return mpfr_get_si(x_, MPFR_RNDN); }
    std::pair<Real, Real> sin_cos() const;
    friend Real hypot(const Real& a, const Real& b);
    friend Real pow_ui(const Real& a, unsigned long e);
    friend Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
    friend Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    // Decimal string with the given number of significant digits.
    std::string str(int sig_digits = 17) const;

    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }
    // Throws RangeError if the value is NaN or Inf.
    const Real& checked(const char* what) const;

  private:
    mpfr_t x_;
};

// Complex value built from two Reals sharing one precision.
class Complex {
  public:
    explicit Complex(long prec = Real::kDefaultPrecision) : re_(prec), im_(prec) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    Complex(double re, double im, long prec = Real::kDefaultPrecision)
        : re_(re, prec), im_(im, prec) {}
    explicit Complex(const Real& re) : re_(re), im_(Real(0.0, re.precision())) {}

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    long precision() const { return std::max(re_.precision(), im_.precision()); }
    bool is_real() const { return im_.is_zero(); }

    Complex operator-() const { return Complex(-re_, -im_); }
    friend Complex operator+(const Complex& a, const Complex& b);
    friend Complex operator-(const Complex& a, const Complex& b);
    friend Complex operator*(const Complex& a, const Complex& b);
    friend Complex operator/(const Complex& a, const Complex& b);
    Complex& operator+=(const Complex& b) { return *this = *this + b; }
    Complex& operator-=(const Complex& b) { return *this = *this - b; }
    Complex& operator*=(const Complex& b) { return *this = *this * b; }

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    Complex conj() const { return Complex(re_, -im_); }
    Real abs() const;
    Complex exp() const;

  private:
    Real re_, im_;
};

// base^s for a positive integer base, as exp(s * ln base).
Complex pow_ui(unsigned long base, const Complex& s);

// s (s+1) ... (s+terms-1); terms >= 1. Overflow surfaces as RangeError.
Complex rising_product(const Complex& s, unsigned terms);

} // namespace zetalab

#include "zetalab/real.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace zetalab {

namespace {

long clamp_prec(long prec) {
    if (prec < Real::kMinPrecision || prec > Real::kMaxPrecision)
        throw DomainError("precision out of range: " + std::to_string(prec));
    return prec;
}

} // namespace

Real::Real(long prec) { mpfr_init2(x_, clamp_prec(prec)); mpfr_set_zero(x_, 1); }

Real::Real(double v, long prec) {
    mpfr_init2(x_, clamp_prec(prec));
    mpfr_set_d(x_, v, MPFR_RNDN);
}

Real::Real(const Real& o) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_swap(x_, o.x_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(x_, o.x_);
    return *this;
}

Real::~Real() { mpfr_clear(x_); }

Real Real::from_long(long v, long prec) {
    Real r(prec);
    mpfr_set_si(r.x_, v, MPFR_RNDN);
    return r;
}

Real Real::from_bigint(const BigInt& z, long prec) {
    Real r(prec);
    mpfr_set_z(r.x_, z.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real Real::from_string(const std::string& s, long prec) {
    Real r(prec);
    char* end = nullptr;
    int rc = mpfr_strtofr(r.x_, s.c_str(), &end, 10, MPFR_RNDN);
    (void)rc;
    if (end == s.c_str() || *end != '\0' || !r.is_finite())
        throw ParseError("not a finite decimal number: '" + s + "'");
    return r;
}

Real Real::from_rational(const BigRational& q, long prec) {
    Real r(prec);
    mpfr_set_q(r.x_, q.raw().get_mpq_t(), MPFR_RNDN);
    return r;
}

Real Real::pi(long prec) {
    Real r(prec);
    mpfr_const_pi(r.x_, MPFR_RNDN);
    return r;
}

Real Real::euler_gamma(long prec) {
    Real r(prec);
    mpfr_const_euler(r.x_, MPFR_RNDN);
    return r;
}

Real Real::pow2(long e, long prec) {
    Real r(prec);
    mpfr_set_si(r.x_, 1, MPFR_RNDN);
    mpfr_mul_2si(r.x_, r.x_, e, MPFR_RNDN);
    return r;
}

Real Real::with_precision(long prec) const {
    Real r(prec);
    mpfr_set(r.x_, x_, MPFR_RNDN);
    return r;
}

const Real& Real::checked(const char* what) const {
    if (!is_finite()) throw RangeError(std::string(what) + " produced a non-finite value");
    return *this;
}

Real Real::operator-() const {
    Real r(precision());
    mpfr_neg(r.x_, x_, MPFR_RNDN);
    return r;
}

#define ZL_BINOP(op, fn)                                                    \
    Real operator op(const Real& a, const Real& b) {                        \
        Real r(std::max(a.precision(), b.precision()));                     \
        fn(r.x_, a.x_, b.x_, MPFR_RNDN);                                    \
        return r.checked(#fn), r;                                           \
    }

ZL_BINOP(+, mpfr_add)
ZL_BINOP(-, mpfr_sub)
ZL_BINOP(*, mpfr_mul)
#undef ZL_BINOP

Real operator/(const Real& a, const Real& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    Real r(std::max(a.precision(), b.precision()));
    mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r.checked("mpfr_div"), r;
}

Real operator*(const Real& a, long b) {
    Real r(a.precision());
    mpfr_mul_si(r.x_, a.x_, b, MPFR_RNDN);
    return r.checked("mpfr_mul_si"), r;
}

Real operator/(const Real& a, long b) {
    if (b == 0) throw DomainError("division by zero");
    Real r(a.precision());
    mpfr_div_si(r.x_, a.x_, b, MPFR_RNDN);
    return r;
}

Real operator+(const Real& a, long b) {
    Real r(a.precision());
    mpfr_add_si(r.x_, a.x_, b, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, long b) {
    Real r(a.precision());
    mpfr_sub_si(r.x_, a.x_, b, MPFR_RNDN);
    return r;
}

Real Real::abs() const {
    Real r(precision());
    mpfr_abs(r.x_, x_, MPFR_RNDN);
    return r;
}

Real Real::sqrt() const {
    if (sign() < 0) throw DomainError("sqrt of a negative value");
    Real r(precision());
    mpfr_sqrt(r.x_, x_, MPFR_RNDN);
    return r;
}

Real Real::exp() const {
    Real r(precision());
    mpfr_exp(r.x_, x_, MPFR_RNDN);
    return r.checked("mpfr_exp"), r;
}

Real Real::log() const {
    if (sign() <= 0) throw DomainError("log of a non-positive value");
    Real r(precision());
    mpfr_log(r.x_, x_, MPFR_RNDN);
    return r;
}

Real Real::floor() const {
    Real r(precision());
    mpfr_floor(r.x_, x_);
    return r;
}

Real Real::ceil() const {
    Real r(precision());
    mpfr_ceil(r.x_, x_);
    return r;
}

std::pair<Real, Real> Real::sin_cos() const {
    Real s(precision()), c(precision());
    mpfr_sin_cos(s.x_, c.x_, x_, MPFR_RNDN);
    return {s, c};
}

Real hypot(const Real& a, const Real& b) {
    Real r(std::max(a.precision(), b.precision()));
    mpfr_hypot(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r.checked("mpfr_hypot"), r;
}

Real pow_ui(const Real& a, unsigned long e) {
    Real r(a.precision());
    mpfr_pow_ui(r.x_, a.x_, e, MPFR_RNDN);
    return r.checked("mpfr_pow_ui"), r;
}

std::string Real::str(int sig_digits) const {
    if (sig_digits < 1) sig_digits = 1;
    char* out = nullptr;
    mpfr_asprintf(&out, "%.*R*g", sig_digits, MPFR_RNDN, x_);
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re() + b.re(), a.im() + b.im());
}

Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re() - b.re(), a.im() - b.im());
}

Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re() * b.re() - a.im() * b.im(),
                   a.re() * b.im() + a.im() * b.re());
}

Complex operator/(const Complex& a, const Complex& b) {
    Real den = b.re() * b.re() + b.im() * b.im();
    if (den.is_zero()) throw DomainError("complex division by zero");
    return Complex((a.re() * b.re() + a.im() * b.im()) / den,
                   (a.im() * b.re() - a.re() * b.im()) / den);
}

Real Complex::abs() const { return hypot(re_, im_); }

Complex Complex::exp() const {
    Real scale = re_.exp();
    auto [s, c] = im_.sin_cos();
    return Complex(scale * c, scale * s);
}

Complex pow_ui(unsigned long base, const Complex& s) {
    if (base == 0) throw DomainError("power of zero base");
    Real b = Real::from_long(static_cast<long>(base), s.precision());
    Real ln = b.log();
    return Complex(s.re() * ln, s.im() * ln).exp();
}

Complex rising_product(const Complex& s, unsigned terms) {
    if (terms == 0) throw DomainError("rising_product needs at least one factor");
    Complex acc = s;
    for (unsigned i = 1; i < terms; ++i)
        acc *= Complex(s.re() + static_cast<long>(i), s.im());
    acc.abs().checked("rising_product");
    return acc;
}

} // namespace zetalab

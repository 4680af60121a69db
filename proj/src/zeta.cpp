#include "zetalab/zeta.hpp"

#include <algorithm>

#include "zetalab/combinatorics.hpp"

namespace zetalab {

namespace {

constexpr long kGuardBits = 64;

bool equals_one(const Complex& s) {
    return s.im().is_zero() && mpfr_cmp_si(s.re().raw(), 1) == 0;
}

Complex widened(const Complex& s, long prec) {
    return Complex(s.re().with_precision(prec), s.im().with_precision(prec));
}

Complex complex_long(long v, long prec) {
    return Complex(Real::from_long(v, prec));
}

// B_{2j} / (2j)! as an exact rational.
BigRational correction_coefficient(unsigned j) {
    BigInt fact;
    mpz_fac_ui(fact.get_mpz_t(), 2 * j);
    return bernoulli_even(j) / BigRational(fact);
}

// N^{-sigma-(2j-1)} as a positive real.
Real n_power_magnitude(unsigned N, const Real& sigma, unsigned j, long prec) {
    Real ln_n = Real::from_long(N, prec).log();
    Real expo = -(sigma + Real::from_long(2 * static_cast<long>(j) - 1, prec));
    return (expo * ln_n).exp();
}

Complex partial_sum_impl(const Complex& s, unsigned N, Real* abs_acc) {
    long prec = s.precision();
    Complex sum(prec);
    Complex minus_s = -s;
    for (unsigned long n = 1; n < N; ++n) {
        Complex t = pow_ui(n, minus_s);
        sum += t;
        if (abs_acc) *abs_acc += t.abs();
    }
    Complex one = complex_long(1, prec);
    Complex tail = pow_ui(N, one - s) / (s - one);
    sum += tail;
    if (abs_acc) *abs_acc += tail.abs();
    return sum;
}

Complex correction_impl(const Complex& s, unsigned N, unsigned k, Real* abs_acc) {
    long prec = s.precision();
    Complex sum = pow_ui(N, -s) * Complex(Real(0.5, prec));
    if (abs_acc) *abs_acc += sum.abs();
    for (unsigned j = 1; j <= k; ++j) {
        Real coef = Real::from_rational(correction_coefficient(j), prec);
        Complex expo = -s - complex_long(2 * static_cast<long>(j) - 1, prec);
        Complex term = Complex(coef) * rising_product(s, 2 * j - 1) * pow_ui(N, expo);
        sum += term;
        if (abs_acc) *abs_acc += term.abs();
    }
    return sum;
}

} // namespace

ZetaParams default_zeta_params(const Complex& s) {
    long grow = s.abs().ceil().to_long();
    if (grow < 0 || grow > 1000000)
        throw DomainError("|s| too large for direct Euler-Maclaurin evaluation");
    ZetaParams p;
    p.N = static_cast<unsigned>(std::max(20l, grow + 10));
    p.k = 10;
    return p;
}

Complex partial_sum_S(const Complex& s, unsigned N) {
    if (N < 2) throw DomainError("partial sum cutoff N must be >= 2");
    if (equals_one(s)) throw PoleError("zeta has a pole at s = 1");
    return partial_sum_impl(s, N, nullptr);
}

Complex correction_B(const Complex& s, unsigned N, unsigned k) {
    if (N < 2) throw DomainError("correction cutoff N must be >= 2");
    if (k < 1) throw DomainError("correction order k must be >= 1");
    return correction_impl(s, N, k, nullptr);
}

BoundedValue zeta_em(const Complex& s, const ZetaParams& params) {
    if (params.N < 2) throw DomainError("zeta cutoff N must be >= 2");
    if (params.k < 1) throw DomainError("zeta correction order k must be >= 1");
    if (equals_one(s)) throw PoleError("zeta has a pole at s = 1");
    if (s.re() < 1.0) throw DomainError("zeta evaluation requires Re(s) >= 1");

    long out_prec = s.precision();
    long prec = out_prec + kGuardBits;
    Complex sh = widened(s, prec);

    Real abs_acc(0.0, Real::kMinPrecision);
    Complex value = partial_sum_impl(sh, params.N, &abs_acc) +
                    correction_impl(sh, params.N, params.k, &abs_acc);

    // Remainder of the correction series: the first omitted term times
    // |(s+2k+1)| / (sigma+2k+1), sigma = Re(s).
    unsigned j = params.k + 1;
    Real omitted = Real::from_rational(correction_coefficient(j), prec).abs() *
                   rising_product(sh, 2 * j - 1).abs() *
                   n_power_magnitude(params.N, sh.re(), j, prec);
    Real shift = Real::from_long(2 * static_cast<long>(params.k) + 1, prec);
    Real ratio = (sh + Complex(shift)).abs() / (sh.re() + shift);
    Real bound = omitted * ratio;

    // Cushion for accumulated roundoff: every intermediate was formed with
    // out_prec + 64 mantissa bits, so 2^-(out_prec+32) per unit of
    // accumulated magnitude is generous.
    bound += Real::pow2(-(out_prec + 32)) * (abs_acc + 1);

    // Rounding the result down to the caller's precision costs up to half an
    // output ulp per component; charge it to the bound so the enclosure
    // stays valid even when the analytic remainder is smaller than that.
    Complex rounded(value.re().with_precision(out_prec), value.im().with_precision(out_prec));
    bound += (rounded.re().abs() + rounded.im().abs() + Real::pow2(-out_prec)) *
             Real::pow2(-out_prec);
    return BoundedValue(rounded, bound.checked("zeta error bound"));
}

BoundedValue zeta_em(const Complex& s) { return zeta_em(s, default_zeta_params(s)); }

} // namespace zetalab

#include "zetalab/dirichlet.hpp"

#include <algorithm>

namespace zetalab {

namespace {

// Mantissa bits adequate for resolving quantities of size tol.
long tol_bits(const Real& tol) {
    if (tol.sign() <= 0 || !tol.is_finite())
        throw DomainError("tolerance must be a positive finite number");
    long e = mpfr_get_exp(tol.raw());
    return std::max(64l, -e + 16);
}

Real roundoff_slack(long prec, const Real& abs_acc) {
    return Real::pow2(-prec + 48) * (abs_acc + 1);
}

// The value keeps its working precision so that the returned bound really
// covers the stored number; rounding down to the caller's precision would
// cost half an output ulp, which the tolerance may not have room for.
BoundedValue finish(const Real& value, const Real& bound, const Real& tol, const char* what) {
    if (bound > tol) throw InternalError(std::string(what) + ": tolerance not reached");
    return BoundedValue(Complex(value), bound);
}

// Enveloping asymptotic e^-x / x * sum_j (-1)^j j! / x^j.  Consecutive terms
// shrink while j < x, and the error after truncation is at most the first
// omitted term.  Returns false when the smallest term is still above tol/8.
bool e1_asymptotic(const Real& x, const Real& tol, BoundedValue* out) {
    long P = tol_bits(tol) + 64;
    Real xa = x.with_precision(P);
    Real t = (-xa).exp() / xa;
    Real sum(0.0, P);
    Real abs_acc(0.0, 64);
    unsigned long jmax = static_cast<unsigned long>(std::max(1.0, x.to_double()));
    for (unsigned long j = 0;; ++j) {
        if (j % 2 == 0) sum += t; else sum -= t;
        abs_acc += t;
        Real next = t * static_cast<long>(j + 1) / xa;
        if (next * 8 <= tol) {
            Real bound = next + roundoff_slack(P, abs_acc);
            *out = finish(sum, bound, tol, "E(x) asymptotic");
            return true;
        }
        if (j + 1 >= jmax) return false;
        t = next;
    }
}

// Convergent series -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k k!).
// Interior terms grow to roughly e^x before shrinking, so the working
// precision carries x/ln 2 extra bits to absorb the cancellation.
BoundedValue e1_series(const Real& x, const Real& tol) {
    double xd = x.to_double();
    long P = tol_bits(tol) + static_cast<long>(1.4427 * std::max(0.0, xd)) + 96;
    if (P > Real::kMaxPrecision)
        throw DomainError("argument too large for the E(x) series at this tolerance");
    Real xa = x.with_precision(P);
    Real sum = -Real::euler_gamma(P) - xa.log();
    Real abs_acc = sum.abs();
    Real term(1.0, P);
    for (unsigned long k = 1;; ++k) {
        term = term * xa / static_cast<long>(k);
        Real contrib = term / static_cast<long>(k);
        if (k % 2 == 1) sum += contrib; else sum -= contrib;
        abs_acc += contrib;
        Real next = term * xa / static_cast<long>((k + 1) * (k + 1));
        // once k >= x the terms decrease, so the alternating remainder is
        // bounded by the first omitted term
        if (static_cast<double>(k) >= xd && next * 8 <= tol) {
            Real bound = next + roundoff_slack(P, abs_acc);
            return finish(sum, bound, tol, "E(x) series");
        }
        if (k > 1000000) throw InternalError("E(x) series did not converge");
    }
}

// Enveloping asymptotic e^-x^2 / (x sqrt(pi)) * sum_j (-1)^j (2j-1)!!/(2x^2)^j,
// terms shrinking while 2j+1 < 2x^2.
bool erfc_asymptotic(const Real& x, const Real& tol, BoundedValue* out) {
    long P = tol_bits(tol) + 64;
    Real xa = x.with_precision(P);
    Real x2 = xa * xa;
    Real t = (-x2).exp() / (xa * Real::pi(P).sqrt());
    Real sum(0.0, P);
    Real abs_acc(0.0, 64);
    unsigned long jmax = static_cast<unsigned long>(std::max(1.0, x.to_double() * x.to_double()));
    for (unsigned long j = 0;; ++j) {
        if (j % 2 == 0) sum += t; else sum -= t;
        abs_acc += t;
        Real next = t * static_cast<long>(2 * j + 1) / (x2 * 2);
        if (next * 8 <= tol) {
            Real bound = next + roundoff_slack(P, abs_acc);
            *out = finish(sum, bound, tol, "erfc asymptotic");
            return true;
        }
        if (j + 1 >= jmax) return false;
        t = next;
    }
}

// erf(x) = (2/sqrt(pi)) e^-x^2 sum_{k>=0} (2x^2)^k x / (1*3*...*(2k+1)),
// all terms positive with eventually geometric decay; erfc = 1 - erf.
// The prefactor e^-x^2 against a sum of size e^x^2 costs x^2/ln 2 guard bits.
BoundedValue erfc_series(const Real& x, const Real& tol) {
    double xd = x.to_double();
    long P = tol_bits(tol) + static_cast<long>(1.4427 * xd * xd) + 96;
    if (P > Real::kMaxPrecision)
        throw DomainError("argument too large for the erfc series at this tolerance");
    Real xa = x.with_precision(P);
    Real x2 = xa * xa;
    Real pref = (-x2).exp() * 2 / Real::pi(P).sqrt();
    Real term = xa;
    Real sum = term;
    for (unsigned long k = 0;; ++k) {
        Real next = term * x2 * 2 / static_cast<long>(2 * k + 3);
        Real ratio_next = x2 * 2 / static_cast<long>(2 * k + 5);
        if (ratio_next < 1.0) {
            // geometric majorant for the tail starting at `next`
            Real tail = next / (Real(1.0, P) - ratio_next);
            if (pref * tail * 8 <= tol) {
                Real value = Real(1.0, P) - pref * sum;
                Real bound = pref * tail + roundoff_slack(P, sum * pref + 1);
                return finish(value, bound, tol, "erfc series");
            }
        }
        sum += next;
        term = next;
        if (k > 1000000) throw InternalError("erfc series did not converge");
    }
}

Real default_tol(const Real& x, bool squared) {
    long prec = x.precision();
    long P = std::max(prec, 64l);
    Real xa = x.with_precision(P);
    Real scale = squared ? (-(xa * xa)).exp() : (-xa).exp();
    return Real::pow2(-(prec + 8), P) * max(scale, Real::pow2(-(prec + 8), P));
}

} // namespace

QuadraticField QuadraticField::create(long D) {
    if (D < 2) throw DomainError("quadratic field requires D >= 2");
    for (long p = 2; p * p <= D; ++p)
        if (D % (p * p) == 0) throw DomainError("D must be squarefree");
    QuadraticField f;
    f.d = D;
    f.discriminant = (D % 4 == 1) ? D : 4 * D;
    return f;
}

int kronecker_symbol(long long a, long long n) {
    if (n < 0) throw DomainError("Kronecker symbol defined here for n >= 0");
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    // factors of 2 in n use the supplement (2/a): 0 for even a, +1 when
    // a = +-1 mod 8, -1 when a = +-3 mod 8
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        long long a8 = ((a % 8) + 8) % 8;
        int two_sym = (a8 == 1 || a8 == 7) ? 1 : -1;
        while (n % 2 == 0) {
            n /= 2;
            result *= two_sym;
        }
    }
    // Jacobi symbol (a/n) for odd n >= 1 by quadratic reciprocity
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long n8 = n % 8;
            if (n8 == 3 || n8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

int kronecker_chi(const QuadraticField& f, long long n) {
    return kronecker_symbol(f.discriminant, n);
}

BoundedValue exp_integral_E(const Real& x, const Real& tol) {
    if (x.sign() <= 0 || !x.is_finite())
        throw DomainError("E(x) requires x > 0");
    if (x >= 8.0) {
        BoundedValue out(Complex(64), Real(0.0, 64));
        if (e1_asymptotic(x, tol, &out)) return out;
    }
    return e1_series(x, tol);
}

BoundedValue exp_integral_E(const Real& x) { return exp_integral_E(x, default_tol(x, false)); }

BoundedValue erfc_fn(const Real& x, const Real& tol) {
    if (x.sign() <= 0 || !x.is_finite())
        throw DomainError("erfc requires x > 0");
    if (x >= 4.0) {
        BoundedValue out(Complex(64), Real(0.0, 64));
        if (erfc_asymptotic(x, tol, &out)) return out;
    }
    return erfc_series(x, tol);
}

BoundedValue erfc_fn(const Real& x) { return erfc_fn(x, default_tol(x, true)); }

BoundedValue l_one_chi(const QuadraticField& f, unsigned m, long prec) {
    if (m < 1) throw DomainError("truncation point m must be >= 1");
    long delta = f.discriminant;

    // tail bound R_m = Delta^{3/2}/pi^2 * e^{-A m^2}/m^3 with A = pi/Delta
    long Pb = 128;
    Real d_b = Real::from_long(delta, Pb);
    Real pi_b = Real::pi(Pb);
    Real am2 = pi_b / d_b * Real::from_long(static_cast<long>(m) * m, Pb);
    Real r_m = d_b * d_b.sqrt() / (pi_b * pi_b) * (-am2).exp() /
               Real::from_long(static_cast<long>(m) * m * m, Pb);

    // every special-function call gets R_m/(16m); 2m calls total, so their
    // combined contribution stays below R_m/8 and the bound keeps shrinking
    // strictly as m grows
    Real tol_call = r_m / (16l * static_cast<long>(m));

    // outer accumulation must resolve quantities of size R_m
    long p_out = std::max(prec, -mpfr_get_exp(r_m.raw()) + 64) + 32;
    if (p_out > (1l << 20))
        throw DomainError("m too large for this discriminant at desk scale");

    Real a = Real::pi(p_out) / Real::from_long(delta, p_out);
    Real sqrt_a = a.sqrt();
    Real sum_e(0.0, p_out), sum_r(0.0, p_out);
    Real sf_bounds(0.0, 128);
    Real abs_acc(0.0, 64);
    for (unsigned long n = 1; n <= m; ++n) {
        int chi = kronecker_chi(f, static_cast<long long>(n));
        if (chi == 0) continue;
        Real xn = a * Real::from_long(static_cast<long>(n * n), p_out);
        BoundedValue e = exp_integral_E(xn, tol_call);
        BoundedValue r = erfc_fn(Real::from_long(static_cast<long>(n), p_out) * sqrt_a, tol_call);
        Real e_term = e.value.re();
        Real r_term = r.value.re() / static_cast<long>(n);
        if (chi > 0) {
            sum_e += e_term;
            sum_r += r_term;
        } else {
            sum_e -= e_term;
            sum_r -= r_term;
        }
        abs_acc += e_term.abs() + r_term.abs();
        sf_bounds += e.bound + r.bound;
    }
    Real value = sum_e / Real::from_long(delta, p_out).sqrt() + sum_r;
    Real bound = r_m + sf_bounds + roundoff_slack(p_out, abs_acc);
    return BoundedValue(Complex(value), bound.checked("L(1,chi) bound"));
}

} // namespace zetalab

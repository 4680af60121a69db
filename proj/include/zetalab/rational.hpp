#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "zetalab/errors.hpp"

namespace zetalab {

// Arbitrary-precision integer. GMP keeps the canonical sign+magnitude form
// (no leading zero limbs, zero is non-negative) for us.
using BigInt = mpz_class;

BigInt big_from_string(const std::string& s);

// Exact rational, always reduced to lowest terms with positive denominator.
// mpq_class only canonicalizes when asked, so construction goes through this
// wrapper and every entry point canonicalizes once.
class BigRational {
  public:
    BigRational() : v_(0) {}
    BigRational(long n) : v_(n) {}                     // NOLINT implicit ok
    BigRational(const BigInt& n) : v_(n) {}            // NOLINT implicit ok
    BigRational(const BigInt& num, const BigInt& den);
    BigRational(long num, long den);

    const BigInt numerator() const { return v_.get_num(); }
    const BigInt denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    BigRational operator-() const;
    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.v_ >= b.v_; }

    BigRational abs() const;
    std::string str() const;
    double to_double() const { return v_.get_d(); }

    // Raw access for the MPFR bridge.
    const mpq_class& raw() const { return v_; }

  private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

} // namespace zetalab

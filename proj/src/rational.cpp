#include "zetalab/rational.hpp"

#include <ostream>

namespace zetalab {

BigInt big_from_string(const std::string& s) {
    mpz_class z;
    if (z.set_str(s, 10) != 0) throw ParseError("not an integer: '" + s + "'");
    return z;
}

BigRational::BigRational(const BigInt& num, const BigInt& den) : v_(num, den) {
    if (sgn(den) == 0) throw DomainError("rational with zero denominator");
    v_.canonicalize();
}

BigRational::BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

BigRational BigRational::operator-() const {
    BigRational r;
    r.v_ = -v_;
    return r;
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

BigRational BigRational::abs() const {
    BigRational r = *this;
    if (r.sign() < 0) r = -r;
    return r;
}

std::string BigRational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const BigRational& r) {
    return os << r.str();
}

} // namespace zetalab

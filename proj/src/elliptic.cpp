#include "zetalab/elliptic.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace zetalab {

namespace {

constexpr long kMaxCountPrime = 10000000;  // exhaustive counting is O(p)
constexpr long kMaxProductCutoff = 100000; // sum of p below keeps runtime desk-scale
constexpr std::size_t kMaxCoefficients = 200000;

BigInt parse_integer(const std::string& token) {
    BigInt z;
    if (token.empty() || mpz_set_str(z.get_mpz_t(), token.c_str(), 10) != 0)
        throw ParseError("invalid integer '" + token + "' in curve description");
    return z;
}

struct AllInvariants {
    BigInt b2, b4, b6, b8, c4, c6, disc;
};

AllInvariants raw_invariants(const EllipticCurve& e) {
    AllInvariants v;
    v.b2 = e.a1 * e.a1 + 4 * e.a2;
    v.b4 = 2 * e.a4 + e.a1 * e.a3;
    v.b6 = e.a3 * e.a3 + 4 * e.a6;
    v.b8 = e.a1 * e.a1 * e.a6 + 4 * e.a2 * e.a6 - e.a1 * e.a3 * e.a4 + e.a2 * e.a3 * e.a3 -
           e.a4 * e.a4;
    v.c4 = v.b2 * v.b2 - 24 * v.b4;
    v.c6 = -(v.b2 * v.b2 * v.b2) + 36 * v.b2 * v.b4 - 216 * v.b6;
    v.disc = -(v.b2 * v.b2) * v.b8 - 8 * v.b4 * v.b4 * v.b4 - 27 * v.b6 * v.b6 +
             9 * v.b2 * v.b4 * v.b6;
    if (4 * v.b8 != v.b2 * v.b6 - v.b4 * v.b4)
        throw InternalError("b-quantity syzygy violated");
    if (1728 * v.disc != v.c4 * v.c4 * v.c4 - v.c6 * v.c6)
        throw InternalError("c-quantity syzygy violated");
    return v;
}

long mod_p(const BigInt& z, long p) {
    return static_cast<long>(mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p)));
}

bool divides(const BigInt& d, const BigInt& z) {
    return mpz_divisible_p(z.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Unique candidate singular point of the reduction, if one exists.  For odd
// p the y-partial 2y + a1 x + a3 pins y for each x, so the scan is O(p).
bool find_singular_point(const ReducedCurve& r, long* x_out, long* y_out) {
    long p = r.p;
    auto value = [&](long x, long y) {
        long x2 = x * x % p;
        long lhs = (y * y % p + r.a1 * x % p * y % p + r.a3 * y % p) % p;
        long rhs = (x2 * x % p + r.a2 * x2 % p + r.a4 * x % p + r.a6) % p;
        return (lhs - rhs % p + p) % p;
    };
    auto dx = [&](long x, long y) {
        long d = (3 * (x * x % p) % p + 2 * r.a2 * x % p + r.a4) % p;
        return ((r.a1 * y - d) % p + p) % p;
    };
    if (p == 2) {
        for (long x = 0; x < 2; ++x)
            for (long y = 0; y < 2; ++y) {
                long dy = (2 * y + r.a1 * x + r.a3) % 2;
                if (value(x, y) == 0 && dx(x, y) == 0 && dy == 0) {
                    *x_out = x;
                    *y_out = y;
                    return true;
                }
            }
        return false;
    }
    long inv2 = (p + 1) / 2;
    for (long x = 0; x < p; ++x) {
        long y = (p - (r.a1 * x + r.a3) % p) % p * inv2 % p;
        if (value(x, y) == 0 && dx(x, y) == 0) {
            *x_out = x;
            *y_out = y;
            return true;
        }
    }
    return false;
}

} // namespace

EllipticCurve EllipticCurve::from_string(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    std::vector<BigInt> coeffs;
    while (in >> tok) coeffs.push_back(parse_integer(tok));
    if (coeffs.size() != 5)
        throw ParseError("curve description needs exactly five integers a1 a2 a3 a4 a6");
    return EllipticCurve{coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4]};
}

std::string EllipticCurve::coefficient_string() const {
    std::ostringstream out;
    out << a1 << ' ' << a2 << ' ' << a3 << ' ' << a4 << ' ' << a6;
    return out.str();
}

CurveInvariants curve_invariants(const EllipticCurve& e) {
    AllInvariants v = raw_invariants(e);
    if (v.disc == 0) throw SingularCurveError("discriminant vanishes, curve is singular");
    CurveInvariants out;
    out.b2 = v.b2;
    out.b4 = v.b4;
    out.b6 = v.b6;
    out.b8 = v.b8;
    out.c4 = v.c4;
    out.c6 = v.c6;
    out.disc = v.disc;
    out.j = BigRational(v.c4 * v.c4 * v.c4, v.disc);
    return out;
}

const char* reduction_type_name(ReductionType t) {
    switch (t) {
        case ReductionType::Good: return "good";
        case ReductionType::Cusp: return "cusp";
        case ReductionType::SplitNode: return "split-node";
        case ReductionType::NonsplitNode: return "nonsplit-node";
    }
    throw InternalError("unknown reduction type");
}

ReducedCurve reduce_curve(const EllipticCurve& e, long p) {
    if (!is_prime(p)) throw DomainError("reduction requires a prime p");
    return ReducedCurve{p, mod_p(e.a1, p), mod_p(e.a2, p), mod_p(e.a3, p), mod_p(e.a4, p),
                        mod_p(e.a6, p)};
}

LocalCurveData count_points(const EllipticCurve& e, long p) {
    if (!is_prime(p)) throw DomainError("point counting requires a prime p");
    if (p > kMaxCountPrime) throw DomainError("prime too large for exhaustive point count");
    ReducedCurve r = reduce_curve(e, p);

    long affine = 0;
    if (p == 2) {
        for (long x = 0; x < 2; ++x)
            for (long y = 0; y < 2; ++y) {
                long lhs = (y + r.a1 * x * y + r.a3 * y) % 2;
                long rhs = (x + r.a2 * x + r.a4 * x + r.a6) % 2; // x^3 = x^2 = x mod 2
                if (lhs == rhs) ++affine;
            }
    } else {
        // y^2 + (a1 x + a3) y = g(x) becomes z^2 = (a1 x + a3)^2 + 4 g(x)
        // under z = 2y + a1 x + a3, a bijection on F_p, so the number of y
        // for a given x is the number of square roots on the right.
        std::vector<std::uint8_t> roots(static_cast<std::size_t>(p), 0);
        for (long y = 0; y < p; ++y) ++roots[static_cast<std::size_t>(y * y % p)];
        for (long x = 0; x < p; ++x) {
            long c = (r.a1 * x + r.a3) % p;
            long x2 = x * x % p;
            long g = (x2 * x % p + r.a2 * x2 % p + r.a4 * x % p + r.a6) % p;
            long rhs = (c * c % p + 4 * g % p) % p;
            affine += roots[static_cast<std::size_t>(rhs)];
        }
    }

    LocalCurveData d;
    d.p = p;
    d.point_count = affine + 1;
    d.trace = p + 1 - d.point_count;

    BigInt disc = raw_invariants(e).disc;
    if (mod_p(disc, p) != 0) {
        d.type = ReductionType::Good;
        if (d.trace * d.trace > 4 * p)
            throw InternalError("good-reduction trace violates the Hasse window");
    } else {
        d.type = classify_singular(r);
        long expected = d.type == ReductionType::Cusp        ? 0
                        : d.type == ReductionType::SplitNode ? 1
                                                             : -1;
        if (d.trace != expected)
            throw InternalError("singular reduction trace disagrees with its classification");
    }
    return d;
}

ReductionType classify_singular(const ReducedCurve& r) {
    long x0 = 0, y0 = 0;
    if (!find_singular_point(r, &x0, &y0))
        throw DomainError("curve mod p is smooth, nothing to classify");
    // tangent cone at the singular point: slopes solve t^2 + a1 t - (3 x0 + a2)
    long p = r.p;
    long c = ((3 * x0 + r.a2) % p + p) % p;
    int root_count = 0;
    for (long t = 0; t < p; ++t)
        if ((t * t % p + r.a1 * t % p + (p - c)) % p == 0) ++root_count;
    if (root_count == 2) return ReductionType::SplitNode;
    if (root_count == 1) return ReductionType::Cusp;
    return ReductionType::NonsplitNode;
}

BigInt LocalZeta::extension_count(unsigned k) const {
    if (k < 1) throw DomainError("extension degree must be >= 1");
    BigInt c_prev = 2, c_cur = trace;
    for (unsigned i = 2; i <= k; ++i) {
        BigInt next = trace * c_cur - p * c_prev;
        c_prev = c_cur;
        c_cur = next;
    }
    BigInt pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), k);
    return pk + 1 - c_cur;
}

LocalZeta local_zeta(const LocalCurveData& d) {
    if (d.type != ReductionType::Good)
        throw DomainError("local zeta in this form requires good reduction");
    LocalZeta z;
    z.p = d.p;
    z.trace = d.trace;
    z.numerator_coeffs = {BigInt(1), BigInt(-d.trace), BigInt(d.p)};
    return z;
}

EulerProductResult hasse_weil_truncated(const EllipticCurve& e, long P, const Complex& s) {
    if (P < 1) throw DomainError("product cutoff P must be >= 1");
    if (P > kMaxProductCutoff) throw DomainError("product cutoff P too large for desk scale");
    long out_prec = s.precision();
    long wp = out_prec + 32;
    Complex sw(s.re().with_precision(wp), s.im().with_precision(wp));
    Complex one(Real(1.0, wp));
    Complex value = one;
    for (long p : primes_up_to(P)) {
        LocalCurveData d = count_points(e, p);
        Complex ps = pow_ui(static_cast<unsigned long>(p), -sw);
        Complex tr(Real::from_long(d.trace, wp));
        Complex denom = (d.type == ReductionType::Good)
                            ? one - tr * ps + Complex(Real::from_long(p, wp)) * ps * ps
                            : one - tr * ps;
        value = value / denom;
    }
    EulerProductResult out{Complex(value.re().with_precision(out_prec),
                                   value.im().with_precision(out_prec)),
                           !(s.re() > 1.5)};
    return out;
}

std::vector<long long> dirichlet_coefficients(const EllipticCurve& e, std::size_t M) {
    if (M < 1) throw DomainError("coefficient count must be >= 1");
    if (M > kMaxCoefficients) throw DomainError("coefficient count too large for desk scale");

    std::vector<std::size_t> spf(M + 1, 0);
    for (std::size_t i = 2; i <= M; ++i)
        if (spf[i] == 0)
            for (std::size_t j = i; j <= M; j += i)
                if (spf[j] == 0) spf[j] = i;

    BigInt disc = raw_invariants(e).disc;
    std::vector<long long> a(M + 1, 0);
    a[1] = 1;
    for (std::size_t n = 2; n <= M; ++n) {
        std::size_t p = spf[n];
        std::size_t rest = n / p;
        std::size_t pe = p;
        while (rest % p == 0) {
            rest /= p;
            pe *= p;
        }
        if (rest > 1) {
            a[n] = a[pe] * a[rest];
            continue;
        }
        // n = p^e
        if (pe == p) {
            a[n] = count_points(e, static_cast<long>(p)).trace;
        } else if (mod_p(disc, static_cast<long>(p)) != 0) {
            a[n] = a[p] * a[n / p] - static_cast<long long>(p) * a[n / p / p];
        } else {
            a[n] = a[p] * a[n / p];
        }
    }
    return a;
}

std::optional<long> non_minimality_warning(const EllipticCurve& e) {
    AllInvariants v = raw_invariants(e);
    if (v.disc == 0) return std::nullopt;
    for (long p = 2;; p = (p == 2) ? 3 : p + 2) {
        if (!is_prime(p)) continue;
        BigInt p12;
        mpz_ui_pow_ui(p12.get_mpz_t(), static_cast<unsigned long>(p), 12);
        if (mpz_cmpabs(p12.get_mpz_t(), v.disc.get_mpz_t()) > 0) return std::nullopt;
        BigInt p4;
        mpz_ui_pow_ui(p4.get_mpz_t(), static_cast<unsigned long>(p), 4);
        if (divides(p12, v.disc) && divides(p4, v.c4)) return p;
    }
}

std::string curve_hash(const EllipticCurve& e) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : e.coefficient_string()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

LocalDataCache::LocalDataCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string hash, type_name;
        long p = 0, trace = 0;
        if (!(ls >> hash >> p >> trace >> type_name))
            throw ParseError("malformed cache line: " + line);
        LocalCurveData d;
        d.p = p;
        d.trace = trace;
        d.point_count = p + 1 - trace;
        if (type_name == "good") d.type = ReductionType::Good;
        else if (type_name == "cusp") d.type = ReductionType::Cusp;
        else if (type_name == "split-node") d.type = ReductionType::SplitNode;
        else if (type_name == "nonsplit-node") d.type = ReductionType::NonsplitNode;
        else throw ParseError("unknown reduction type in cache: " + type_name);
        entries_[{hash, p}] = d;
    }
}

std::optional<LocalCurveData> LocalDataCache::lookup(const std::string& hash, long p) const {
    auto it = entries_.find({hash, p});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void LocalDataCache::record(const std::string& hash, const LocalCurveData& d) {
    auto it = entries_.find({hash, d.p});
    if (it != entries_.end()) {
        if (it->second.trace != d.trace || it->second.type != d.type)
            throw InternalError("cache entry disagrees with freshly computed local data");
        return;
    }
    std::ofstream out(path_, std::ios::app);
    if (!out) throw Error("cannot open cache file for writing: " + path_);
    out << hash << ' ' << d.p << ' ' << d.trace << ' ' << reduction_type_name(d.type) << '\n';
    entries_[{hash, d.p}] = d;
}

bool is_prime(long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (long f = 5; f * f <= n; f += 6) {
        if (n % f == 0 || n % (f + 2) == 0) return false;
    }
    return true;
}

std::vector<long> primes_up_to(long limit) {
    std::vector<long> out;
    if (limit < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (long i = 2; i <= limit; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (long j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

} // namespace zetalab

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zetalab/bounded.hpp"
#include "zetalab/rational.hpp"

namespace zetalab {

// Integral Weierstrass curve y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct EllipticCurve {
    BigInt a1, a2, a3, a4, a6;

    // Parses five whitespace-separated integers "a1 a2 a3 a4 a6".
    static EllipticCurve from_string(const std::string& text);
    std::string coefficient_string() const;
};

// The standard attached quantities.  disc = 0 is rejected: these feed the
// nonsingular-curve paths, reductions handle their own degeneracy.
struct CurveInvariants {
    BigInt b2, b4, b6, b8, c4, c6, disc;
    BigRational j;
};

CurveInvariants curve_invariants(const EllipticCurve& e);

enum class ReductionType { Good, Cusp, SplitNode, NonsplitNode };

const char* reduction_type_name(ReductionType t);

// Reduction of a curve modulo p, coefficients in [0, p).
struct ReducedCurve {
    long p;
    long a1, a2, a3, a4, a6;
};

ReducedCurve reduce_curve(const EllipticCurve& e, long p);

// Point count and trace data of the reduction at p.
//   point_count = #E(F_p) including the point at infinity,
//   trace = p + 1 - point_count.
// For singular reductions the count runs over all affine solutions plus
// infinity and the type records the nature of the singular point; the trace
// then lands in {0, 1, -1} (cusp, split node, nonsplit node).
struct LocalCurveData {
    long p = 0;
    long point_count = 0;
    long trace = 0;
    ReductionType type = ReductionType::Good;
};

// Exhaustive O(p) count: for each x the number of y solving the (completed
// square) quadratic is read off a residue table.  p must be prime.
LocalCurveData count_points(const EllipticCurve& e, long p);

// Classifies the unique singular point of a singular reduction by counting
// roots of the tangent-cone quadratic.  Throws if the curve mod p is smooth.
ReductionType classify_singular(const ReducedCurve& r);

// Local zeta function of a good reduction: numerator 1 - trace T + p T^2
// over (1-T)(1-pT).  Extension field counts follow the linear recurrence
// c_k = trace c_{k-1} - p c_{k-2} with #E(F_{p^k}) = p^k + 1 - c_k.
struct LocalZeta {
    long p;
    long trace;
    std::array<BigInt, 3> numerator_coeffs; // 1, -trace, p

    BigInt extension_count(unsigned k) const;
};

LocalZeta local_zeta(const LocalCurveData& d);

// Partial Hasse-Weil product over primes p <= P at the complex point s:
//   good p:  (1 - t_p p^-s + p^{1-2s})^-1
//   bad p:   (1 - t_p p^-s)^-1
// divergence_warning is set when Re(s) <= 3/2, where the product has no
// convergence guarantee.
struct EulerProductResult {
    Complex value;
    bool divergence_warning = false;
};

EulerProductResult hasse_weil_truncated(const EllipticCurve& e, long P, const Complex& s);

// First M Dirichlet coefficients a_1..a_M of the L-series, built
// multiplicatively from the local traces: a_p = t_p, the prime-power
// recurrence a_{p^{k+1}} = a_p a_{p^k} - p a_{p^{k-1}} at good p (powers of
// t_p at bad p), and a_{mn} = a_m a_n for coprime m, n.
std::vector<long long> dirichlet_coefficients(const EllipticCurve& e, std::size_t M);

// Smallest prime p with p^12 | disc and p^4 | c4, if any: the model is then
// not minimal and local data at such p describes the model, not the curve.
std::optional<long> non_minimality_warning(const EllipticCurve& e);

// Stable 16-hex-digit identifier of the coefficient vector, used as the
// cache key for local data.
std::string curve_hash(const EllipticCurve& e);

// Append-only cache of local traces, one line per entry:
//   <curve_hash> <p> <trace> <type>
class LocalDataCache {
  public:
    explicit LocalDataCache(std::string path);

    std::optional<LocalCurveData> lookup(const std::string& hash, long p) const;
    void record(const std::string& hash, const LocalCurveData& d);

  private:
    std::string path_;
    std::map<std::pair<std::string, long>, LocalCurveData> entries_;
};

bool is_prime(long n);
std::vector<long> primes_up_to(long limit);

} // namespace zetalab

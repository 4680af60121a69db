#pragma once

// Reference computations for the test suite, deliberately built on different
// methods than the library under test: direct summation with integral tail
// enclosures, double-precision quadrature, brute-force enumeration, and
// independent closed formulas.

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zetalab/cutset.hpp"
#include "zetalab/elliptic.hpp"
#include "zetalab/rational.hpp"
#include "zetalab/real.hpp"

namespace oracle {

struct Enclosure {
    zetalab::Real value;
    zetalab::Real bound;
};

// zeta(sigma) for real sigma > 1: direct sum over n < M plus the tail
// enclosed between its convexity bounds, midpoint taken.
Enclosure zeta_direct(double sigma, double tol);

struct DoubleEnclosure {
    double value;
    double bound;
};

// L(1, chi) for Q(sqrt(D)) by direct series: sum to a period multiple M,
// add the exact telescoped mean correction, and bound the remainder through
// a second summation by parts with exact integer window bounds.
DoubleEnclosure l_one_direct(long D);

double simpson(const std::function<double(double)>& f, double a, double b, double tol);
double exp_integral_quad(double x);
double erfc_quad(double x);

zetalab::Real erfc_mpfr(const zetalab::Real& x);
// E(x) through mpfr_eint when this build's eint supports negative
// arguments, empty otherwise.
std::optional<zetalab::Real> e1_mpfr(const zetalab::Real& x);

// Rows 0..n of the additive triangle of binomials.
std::vector<std::vector<zetalab::BigInt>> pascal_rows(unsigned n);

// B_n by the double-sum formula sum_k 1/(k+1) sum_j (-1)^j C(k,j) j^n.
zetalab::BigRational bernoulli_double_sum(unsigned n);

// Affine point count of the reduced curve by full two-variable enumeration.
long count_affine_fp(const zetalab::ReducedCurve& r);
// Point count over the quadratic extension field, including infinity.
long long count_points_fp2(const zetalab::ReducedCurve& r);

// True when deleting `cut` from the subgraph reachable from the root leaves
// it acyclic.  Undirected graphs are treated as simple (parallel copies
// collapse); directed self-loops count as cycles.
bool removal_leaves_acyclic(const zetalab::RootedGraph& g,
                            const std::vector<std::string>& cut);

zetalab::RootedGraph random_graph(std::mt19937& rng, bool directed, bool allow_self_loops);
zetalab::RootedGraph random_tree(std::mt19937& rng, bool directed);
zetalab::RootedGraph random_dag(std::mt19937& rng);

struct RunResult {
    int status = -1;
    std::string output;
};

// Runs the installed CLI binary with the given argument string; stderr is
// dropped, stdout captured.  env_prefix can set variables ("X=1 Y=2").
RunResult run_cli(const std::string& args, const std::string& env_prefix = "");

} // namespace oracle

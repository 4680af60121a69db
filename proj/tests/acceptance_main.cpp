// Acceptance battery: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.  Each check compares the library against an independent
// reference (direct summation, brute-force enumeration, exact arithmetic, or
// the CLI binary itself) with all tolerances pinned below.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "zetalab/cutset.hpp"
#include "zetalab/dirichlet.hpp"
#include "zetalab/elliptic.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/flows.hpp"
#include "zetalab/geometry.hpp"
#include "zetalab/zeta.hpp"

using namespace zetalab;

namespace {

int g_failures = 0;

void report(bool ok, const char* name, const std::string& detail) {
    std::printf("%s: %s\n", ok ? "PASS" : "FAIL", name);
    if (!ok) {
        if (!detail.empty()) std::printf("       %s\n", detail.c_str());
        ++g_failures;
    }
}

const std::vector<std::string>& battery_curves() {
    static const std::vector<std::string> curves = {
        "0 0 1 -1 0",     // conductor 37
        "0 -1 1 -10 -20", // conductor 11
        "0 1 1 -2 0",     // conductor 389
        "0 0 1 -7 6",     // conductor 5077
        "1 0 1 4 -6",     // conductor 14
        "1 1 1 -10 -10",  // conductor 15
        "1 -1 1 -1 -14",  // conductor 17
        "0 1 1 -9 -15",   // conductor 19
        "1 0 0 -4 -1",    // conductor 21
        "1 -1 1 -3 3",    // conductor 26
    };
    return curves;
}

// 1. Enclosure validity of the Euler-Maclaurin zeta evaluation across the
//    (N, k) grid, plus the pinned value at s = 2.
void criterion_zeta_enclosures() {
    std::string detail;
    bool ok = true;
    for (double sigma : {1.5, 2.0, 3.0, 4.0}) {
        oracle::Enclosure ref = oracle::zeta_direct(sigma, 1e-15);
        if (!(ref.bound.to_double() <= 1e-15)) {
            ok = false;
            detail = "reference tail wider than 1e-15 at sigma=" + std::to_string(sigma);
            break;
        }
        for (unsigned N = 5; N <= 50; ++N) {
            for (unsigned k = 1; k <= 10; ++k) {
                BoundedValue z = zeta_em(Complex(sigma, 0.0, 128), ZetaParams{N, k});
                Real gap = (z.value.re() - ref.value).abs() + z.value.im().abs();
                if (!(gap <= z.bound + ref.bound)) {
                    ok = false;
                    detail = "enclosure violated at sigma=" + std::to_string(sigma) +
                             " N=" + std::to_string(N) + " k=" + std::to_string(k) +
                             " gap=" + gap.str(5) + " bound=" + z.bound.str(5);
                }
            }
        }
        if (!ok) break;
    }
    if (ok) {
        BoundedValue z = zeta_em(Complex(2.0, 0.0, 128), ZetaParams{20, 10});
        Real target = Real::from_string("1.6449340668482264", 128);
        Real err = (z.value.re() - target).abs();
        if (!(err < Real(1e-12, 128))) {
            ok = false;
            detail = "value at s=2 off by " + err.str(5);
        }
    }
    report(ok, "zeta enclosures hold against direct summation across the parameter grid",
           detail);
}

// 2. Quadratic-field L-values against the direct conditionally convergent
//    series, with bounds strictly tightening in the cutoff.
void criterion_l_values() {
    std::string detail;
    bool ok = true;
    for (long D : {2L, 3L, 5L, 13L, 17L}) {
        QuadraticField f = QuadraticField::create(D);
        oracle::DoubleEnclosure ref = oracle::l_one_direct(D);
        if (!(ref.bound <= 1e-10)) {
            ok = false;
            detail = "reference series bound too wide for D=" + std::to_string(D);
            break;
        }
        double prev = 1e300;
        for (unsigned m : {10u, 20u, 40u}) {
            BoundedValue l = l_one_chi(f, m);
            double gap = std::abs(l.value.re().to_double() - ref.value);
            if (!(gap <= l.bound.to_double() + ref.bound)) {
                ok = false;
                detail = "enclosure violated at D=" + std::to_string(D) +
                         " m=" + std::to_string(m) + " gap=" + std::to_string(gap);
            }
            if (!(l.bound.to_double() < prev)) {
                ok = false;
                detail = "bound not strictly decreasing at D=" + std::to_string(D) +
                         " m=" + std::to_string(m);
            }
            prev = l.bound.to_double();
        }
        if (!ok) break;
    }
    report(ok, "quadratic L-values enclose the direct series and tighten with the cutoff",
           detail);
}

// 3. Trace window at every good prime up to 200 across the battery, plus the
//    pinned exhaustive count at p = 2 for the conductor-37 curve.
void criterion_hasse_window() {
    std::string detail;
    bool ok = true;
    for (const std::string& text : battery_curves()) {
        EllipticCurve e = EllipticCurve::from_string(text);
        for (long p : primes_up_to(200)) {
            LocalCurveData d = count_points(e, p);
            if (d.type != ReductionType::Good) continue;
            if (!(static_cast<double>(d.trace) * d.trace <= 4.0 * p)) {
                ok = false;
                detail = "trace window violated for [" + text + "] at p=" + std::to_string(p);
            }
        }
    }
    LocalCurveData d2 = count_points(EllipticCurve::from_string("0 0 1 -1 0"), 2);
    if (d2.point_count != 5 || d2.trace != -2) {
        ok = false;
        detail = "pinned local data at p=2 off: A=" + std::to_string(d2.point_count) +
                 " t=" + std::to_string(d2.trace);
    }
    report(ok, "good-reduction traces respect the Hasse window on the curve battery", detail);
}

// 4. Quadratic-extension point counts from the local zeta recurrence equal
//    brute-force enumeration exactly.
void criterion_extension_counts() {
    std::string detail;
    bool ok = true;
    for (const char* text : {"0 0 1 -1 0", "0 -1 1 -10 -20", "0 1 1 -2 0"}) {
        EllipticCurve e = EllipticCurve::from_string(text);
        for (long p : {2L, 3L, 5L}) {
            LocalCurveData d = count_points(e, p);
            if (d.type != ReductionType::Good) {
                ok = false;
                detail = std::string("expected good reduction for [") + text + "] at p=" +
                         std::to_string(p);
                continue;
            }
            LocalZeta z = local_zeta(d);
            BigInt direct(static_cast<long>(oracle::count_points_fp2(reduce_curve(e, p))));
            if (z.extension_count(2) != direct) {
                ok = false;
                detail = std::string("extension count mismatch for [") + text + "] at p=" +
                         std::to_string(p);
            }
        }
    }
    report(ok, "quadratic-extension counts match the local zeta recurrence exactly", detail);
}

// 5. Truncated Euler product against the truncated coefficient sum, within
//    the divisor-bound tail estimate sum_{n>M} 2 d(n) n^{-3/2}.
void criterion_euler_product() {
    const std::size_t M = 10000;
    // Tail majorant via the hyperbola split with A = sqrt(M):
    //   sum_{n>M} d(n) n^{-3/2} <= (2/sqrt(M)) H_A + 2 zeta(3/2)/sqrt(A).
    const double A = std::sqrt(static_cast<double>(M));
    double harmonic = 0;
    for (long a = 1; a <= static_cast<long>(A); ++a) harmonic += 1.0 / a;
    const double zeta32 = 2.613; // upper bound on zeta(3/2)
    const double tail = 2.0 * ((2.0 / std::sqrt(static_cast<double>(M))) * harmonic +
                               2.0 * zeta32 / std::sqrt(A));

    std::string detail;
    bool ok = true;
    for (const char* text : {"0 0 1 -1 0", "0 -1 1 -10 -20"}) {
        EllipticCurve e = EllipticCurve::from_string(text);
        EulerProductResult prod = hasse_weil_truncated(e, 100, Complex(2.0, 0.0, 128));
        auto a = dirichlet_coefficients(e, M);
        long double sum = 0;
        for (std::size_t n = 1; n <= M; ++n)
            sum += static_cast<long double>(a[n]) / (static_cast<long double>(n) * n);
        double gap = std::abs(prod.value.re().to_double() - static_cast<double>(sum));
        if (!(gap <= tail) || prod.divergence_warning) {
            ok = false;
            detail = std::string("product/sum gap ") + std::to_string(gap) + " exceeds " +
                     std::to_string(tail) + " for [" + text + "]";
        }
    }
    report(ok, "the truncated Euler product tracks the coefficient sum within its tail estimate",
           detail);
}

// 6. Singular reductions: constructed cusp, split-node, and nonsplit-node
//    cases at p in {5, 7, 11} give traces 0, +1, -1 exactly.
void criterion_singular_table() {
    // y^2 = x^3 is a cusp everywhere; y^2 = x^2(x+1) has rational tangent
    // slopes +-1 (split); y^2 = x^2(x+c) with c a nonresidue mod p does not.
    std::string detail;
    bool ok = true;
    auto expect = [&](const std::string& text, long p, ReductionType want, long trace) {
        LocalCurveData d = count_points(EllipticCurve::from_string(text), p);
        if (d.type != want || d.trace != trace || d.point_count != p + 1 - trace) {
            ok = false;
            detail = "classification off for [" + text + "] at p=" + std::to_string(p) +
                     ": type=" + reduction_type_name(d.type) +
                     " t=" + std::to_string(d.trace);
        }
    };
    for (long p : {5L, 7L, 11L}) expect("0 0 0 0 0", p, ReductionType::Cusp, 0);
    for (long p : {5L, 7L, 11L}) expect("0 1 0 0 0", p, ReductionType::SplitNode, 1);
    expect("0 2 0 0 0", 5, ReductionType::NonsplitNode, -1);
    expect("0 3 0 0 0", 7, ReductionType::NonsplitNode, -1);
    expect("0 2 0 0 0", 11, ReductionType::NonsplitNode, -1);
    report(ok, "singular reductions classify as cusp or node with traces 0 and +-1", detail);
}

// 7. Cutset soundness on 1000 random graphs of each kind, emptiness on
//    trees, and self-loop coverage in strict mode.
void criterion_cutsets() {
    std::string detail;
    bool ok = true;
    std::mt19937 rng(20260815);

    for (int trial = 0; trial < 1000 && ok; ++trial) {
        RootedGraph g = oracle::random_graph(rng, false, false);
        CutsetResult r = cutset_undirected(g);
        if (!oracle::removal_leaves_acyclic(g, r.cutset)) {
            ok = false;
            detail = "undirected cutset unsound at trial " + std::to_string(trial);
        }
    }
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        RootedGraph g = oracle::random_graph(rng, true, true);
        CutsetResult r = cutset_directed(g, true);
        if (!oracle::removal_leaves_acyclic(g, r.cutset)) {
            ok = false;
            detail = "directed strict cutset unsound at trial " + std::to_string(trial);
        }
        // strict mode must cut every reachable self-loop
        for (const auto& [node, depth] : r.df) {
            (void)depth;
            const auto& nb = g.adjacency.at(node);
            bool self = std::find(nb.begin(), nb.end(), node) != nb.end();
            bool cut = std::find(r.cutset.begin(), r.cutset.end(), node) != r.cutset.end();
            if (self && !cut) {
                ok = false;
                detail = "reachable self-loop at '" + node + "' not cut in strict mode";
            }
        }
    }
    for (int trial = 0; trial < 200 && ok; ++trial) {
        RootedGraph g = oracle::random_tree(rng, trial % 2 == 0);
        CutsetResult r = g.directed ? cutset_directed(g, true) : cutset_undirected(g);
        if (!r.cutset.empty() || !r.inverse_edges.empty()) {
            ok = false;
            detail = "tree produced a nonempty cutset at trial " + std::to_string(trial);
        }
    }
    for (int trial = 0; trial < 200 && ok; ++trial) {
        RootedGraph g = oracle::random_dag(rng);
        CutsetResult r = cutset_directed(g);
        if (!oracle::removal_leaves_acyclic(g, r.cutset)) {
            ok = false;
            detail = "cutset removal left a cycle on an acyclic input";
        }
    }
    report(ok, "cutsets break every cycle on random graphs and stay empty on trees", detail);
}

// 8. Exact chart consistency at 50 rational interior points.
void criterion_charts() {
    std::string detail;
    bool ok = true;
    unsigned long long state = 88172645463325252ull;
    auto next = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 16;
    };
    int kept = 0;
    while (kept < 50 && ok) {
        long nu = static_cast<long>(next() % 2001) - 1000;
        long du = static_cast<long>(next() % 1000) + 1;
        long nv = static_cast<long>(next() % 2001) - 1000;
        long dv = static_cast<long>(next() % 1000) + 1;
        if (nu == 0 && nv == 0) nv = 1;
        SpherePoint p = rational_sphere_point(BigRational(nu, du), BigRational(nv, dv));
        if (!(p.x1.abs() < BigRational(1)) || !(p.x2.abs() < BigRational(1)) ||
            !(p.x3.abs() < BigRational(1)))
            continue;
        ++kept;

        for (int chart : {1, 2}) {
            if (!(stereo_roundtrip_residual(chart, p) == BigRational(0))) {
                ok = false;
                detail = "stereographic roundtrip residual nonzero";
            }
        }
        for (int chart = 1; chart <= 3; ++chart) {
            int side = half_chart_contains(chart, p)       ? chart
                       : half_chart_contains(chart + 3, p) ? chart + 3
                                                           : 0;
            if (side == 0) continue; // equator of this axis, covered by neither
            if (!half_roundtrip_residual(side, p).is_zero()) {
                ok = false;
                detail = "half-sphere reconstruction failed";
            }
        }
        const int pairs[3][2] = {{2, 1}, {3, 2}, {1, 3}};
        for (const auto& pr : pairs) {
            if (transition_matrix(pr[0], pr[1], p).det().is_zero()) {
                ok = false;
                detail = "transition determinant vanished";
            }
        }
        if (!(cocycle_product(p) == Mat2::identity())) {
            ok = false;
            detail = "cocycle product differs from the identity";
        }
        if (!bundle_consistent(p)) {
            ok = false;
            detail = "trivializations disagree with the transition matrices";
        }
    }
    report(ok, "chart transitions and trivializations are exactly consistent at rational points",
           detail);
}

// 9. Flow group law, exact nilpotent exponential, clock-shift commutation,
//    and orbit equidistribution.
void criterion_flows() {
    std::string detail;
    bool ok = true;

    std::mt19937 rng(271828);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 100 && ok; ++trial) {
        MatC a(3, 128);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a.at(i, j) = Complex(u(rng), u(rng), 128);
        MatrixExpResult e1 = matrix_exponential(a);
        MatrixExpResult e2 = matrix_exponential(a + a);
        Real gap = (e1.value * e1.value - e2.value).max_abs_entry();
        Real scale = e2.value.max_abs_entry() + 1;
        if (!(gap / scale < Real(1e-10, 128))) {
            ok = false;
            detail = "group law violated at trial " + std::to_string(trial) +
                     " rel=" + (gap / scale).str(5);
        }
    }

    if (ok) {
        MatC n(2, 128);
        n.at(0, 1) = Complex(1.0, 0.0, 128);
        MatrixExpResult r = matrix_exponential(n);
        if (!(r.value.at(0, 0).re().to_double() == 1.0 &&
              r.value.at(0, 1).re().to_double() == 1.0 &&
              r.value.at(1, 0).re().is_zero() && r.value.at(1, 1).re().to_double() == 1.0)) {
            ok = false;
            detail = "nilpotent exponential not exact";
        }
    }

    for (unsigned q = 2; q <= 12 && ok; ++q) {
        for (long p = 1; p < static_cast<long>(q); ++p) {
            if (std::gcd(p, static_cast<long>(q)) != 1) continue;
            ClockShiftPair cs = clock_shift_pair(q, p, 128);
            if (!(cs.commutation_residual < 1e-14) || !(cs.unitarity_residual < 1e-14)) {
                ok = false;
                detail = "clock-shift residual too large at q=" + std::to_string(q) +
                         " p=" + std::to_string(p);
            }
        }
    }

    if (ok) {
        OrbitStats s = kronecker_orbit(std::sqrt(2.0) - 1.0, 100000, 0.0);
        if (!(s.max_bin_deviation <= 0.02)) {
            ok = false;
            detail = "orbit histogram deviation " + std::to_string(s.max_bin_deviation);
        }
    }
    report(ok, "flows obey the group law, clock-shift pairs commute, orbits equidistribute",
           detail);
}

// 10. Byte-identical CLI output on repeated runs, all subcommands.
void criterion_determinism() {
    std::ofstream("/tmp/zetalab_acc_graph.txt")
        << "root a\ndirected false\na: b c\nb: a c\nc: a b\n";
    const char* cmds[] = {
        "zeta --re 2 --im 1",
        "lchi --D 13 --m 20",
        "ec-local --curve '0 0 1 -1 0' --pmax 50",
        "ec-lseries --curve '0 -1 1 -10 -20' --re 2 --P 100 --M 16",
        "cutset --file /tmp/zetalab_acc_graph.txt",
        "verify-charts --samples 25 --seed 5",
        "flow --matrix '0,-1;1,0' --t 3.14159 --x0 '1,0'",
        "nctorus --q 7 --p 3",
    };
    std::string detail;
    bool ok = true;
    const std::regex elapsed("\"elapsed_ms\":[0-9]+");
    for (const char* cmd : cmds) {
        auto a = oracle::run_cli(cmd);
        auto b = oracle::run_cli(cmd);
        if (a.status != 0 || b.status != 0) {
            ok = false;
            detail = std::string("subcommand failed: ") + cmd;
            continue;
        }
        std::string sa = std::regex_replace(a.output, elapsed, "");
        std::string sb = std::regex_replace(b.output, elapsed, "");
        if (sa != sb) {
            ok = false;
            detail = std::string("outputs differ for: ") + cmd;
        }
    }
    report(ok, "CLI output is byte-identical across repeated runs of every subcommand", detail);
}

} // namespace

int main() {
    criterion_zeta_enclosures();
    criterion_l_values();
    criterion_hasse_window();
    criterion_extension_counts();
    criterion_euler_product();
    criterion_singular_table();
    criterion_cutsets();
    criterion_charts();
    criterion_flows();
    criterion_determinism();
    return g_failures == 0 ? 0 : 1;
}

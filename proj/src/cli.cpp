#include "zetalab/cli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <set>

#include "zetalab/cutset.hpp"
#include "zetalab/dirichlet.hpp"
#include "zetalab/elliptic.hpp"
#include "zetalab/flows.hpp"
#include "zetalab/geometry.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

namespace {

const std::string* find_opt(const CommandRequest& r, const std::string& key) {
    auto it = r.options.find(key);
    return it == r.options.end() ? nullptr : &it->second;
}

const std::string& require_opt(const CommandRequest& r, const std::string& key) {
    const std::string* v = find_opt(r, key);
    if (!v) throw ParseError("missing required option --" + key);
    return *v;
}

std::string opt_or(const CommandRequest& r, const std::string& key, const std::string& def) {
    const std::string* v = find_opt(r, key);
    return v ? *v : def;
}

long parse_bounded(const std::string& s, const std::string& what, long lo, long hi) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos, 10);
    } catch (const std::exception&) {
        throw ParseError(what + " is not an integer: '" + s + "'");
    }
    if (pos != s.size()) throw ParseError(what + " is not an integer: '" + s + "'");
    if (v < lo || v > hi)
        throw ParseError(what + " must lie in [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
    return v;
}

bool parse_bool(const std::string& s, const std::string& what) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw ParseError(what + " must be true or false");
}

void check_known_options(const CommandRequest& r, std::set<std::string> known) {
    for (const auto& [k, v] : r.options)
        if (!known.count(k))
            throw ParseError("unknown option --" + k + " for subcommand " + r.subcommand);
}

Json real_json(const Real& x) { return Json::number_raw(format_real(x)); }

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

CommandOutcome run_zeta(const CommandRequest& req) {
    check_known_options(req, {"re", "im", "N", "k"});
    long prec = req.precision;
    Real re = Real::from_string(require_opt(req, "re"), prec);
    Real im = Real::from_string(opt_or(req, "im", "0"), prec);
    Complex s(re, im);
    ZetaParams params = default_zeta_params(s);
    if (const std::string* n = find_opt(req, "N"))
        params.N = static_cast<unsigned>(parse_bounded(*n, "N", 2, 10000000));
    if (const std::string* k = find_opt(req, "k"))
        params.k = static_cast<unsigned>(parse_bounded(*k, "k", 1, 1000));
    BoundedValue z = zeta_em(s, params);

    CommandOutcome out;
    out.subcommand = "zeta";
    out.inputs.add("s_re", real_json(re))
        .add("s_im", real_json(im))
        .add("N", Json::integer(params.N))
        .add("k", Json::integer(params.k))
        .add("precision", Json::integer(prec));
    out.results.add("value_re", real_json(z.value.re()))
        .add("value_im", real_json(z.value.im()))
        .add("bound", real_json(z.bound));
    return out;
}

CommandOutcome run_lchi(const CommandRequest& req) {
    check_known_options(req, {"D", "m"});
    long prec = req.precision;
    long d = parse_bounded(require_opt(req, "D"), "D", 2, 100000000);
    long m = parse_bounded(opt_or(req, "m", "40"), "m", 1, 100000);
    QuadraticField f = QuadraticField::create(d);
    BoundedValue l = l_one_chi(f, static_cast<unsigned>(m), prec);

    CommandOutcome out;
    out.subcommand = "lchi";
    out.inputs.add("D", Json::integer(d))
        .add("discriminant", Json::integer(f.discriminant))
        .add("m", Json::integer(m))
        .add("precision", Json::integer(prec));
    out.results.add("value", real_json(l.value.re())).add("bound", real_json(l.bound));
    return out;
}

CommandOutcome run_ec_local(const CommandRequest& req) {
    check_known_options(req, {"curve", "p", "pmax", "cache"});
    EllipticCurve e = EllipticCurve::from_string(require_opt(req, "curve"));
    const std::string* p_opt = find_opt(req, "p");
    const std::string* pmax_opt = find_opt(req, "pmax");
    if (p_opt && pmax_opt) throw ParseError("give either --p or --pmax, not both");

    std::vector<long> ps;
    long pmax = 0;
    if (p_opt) {
        ps.push_back(parse_bounded(*p_opt, "p", 2, 10000000));
    } else {
        pmax = parse_bounded(pmax_opt ? *pmax_opt : "50", "pmax", 2, 100000);
        ps = primes_up_to(pmax);
    }

    std::optional<LocalDataCache> cache;
    if (const std::string* cp = find_opt(req, "cache")) cache.emplace(*cp);
    std::string hash = curve_hash(e);

    Json rows = Json::array();
    for (long p : ps) {
        LocalCurveData d;
        std::optional<LocalCurveData> hit;
        if (cache) hit = cache->lookup(hash, p);
        if (hit) {
            d = *hit;
        } else {
            d = count_points(e, p);
            if (cache) cache->record(hash, d);
        }
        rows.push(Json::object()
                      .add("p", Json::integer(d.p))
                      .add("A_p", Json::integer(d.point_count))
                      .add("t_p", Json::integer(d.trace))
                      .add("type", Json::str(reduction_type_name(d.type))));
    }

    CommandOutcome out;
    out.subcommand = "ec-local";
    out.inputs.add("curve", Json::str(e.coefficient_string()));
    if (p_opt)
        out.inputs.add("p", Json::integer(ps[0]));
    else
        out.inputs.add("pmax", Json::integer(pmax));
    out.inputs.add("precision", Json::integer(req.precision));
    out.results.add("curve_hash", Json::str(hash)).add("local", std::move(rows));
    if (std::optional<long> w = non_minimality_warning(e))
        out.results.add("non_minimal_at", Json::integer(*w));
    return out;
}

CommandOutcome run_ec_lseries(const CommandRequest& req) {
    check_known_options(req, {"curve", "re", "im", "P", "M"});
    long prec = req.precision;
    EllipticCurve e = EllipticCurve::from_string(require_opt(req, "curve"));
    Real re = Real::from_string(require_opt(req, "re"), prec);
    Real im = Real::from_string(opt_or(req, "im", "0"), prec);
    Complex s(re, im);
    long big_p = parse_bounded(opt_or(req, "P", "100"), "P", 1, 100000);
    long m = parse_bounded(opt_or(req, "M", "0"), "M", 0, 200000);

    EulerProductResult r = hasse_weil_truncated(e, big_p, s);

    CommandOutcome out;
    out.subcommand = "ec-lseries";
    out.inputs.add("curve", Json::str(e.coefficient_string()))
        .add("s_re", real_json(re))
        .add("s_im", real_json(im))
        .add("P", Json::integer(big_p))
        .add("M", Json::integer(m))
        .add("precision", Json::integer(prec));
    out.results.add("value_re", real_json(r.value.re()))
        .add("value_im", real_json(r.value.im()))
        .add("divergence_warning", Json::boolean(r.divergence_warning));
    if (m >= 1) {
        Json coeffs = Json::array();
        std::vector<long long> a = dirichlet_coefficients(e, static_cast<std::size_t>(m));
        for (long i = 1; i <= m; ++i) coeffs.push(Json::integer(a[static_cast<std::size_t>(i)]));
        out.results.add("coefficients", std::move(coeffs));
    }
    return out;
}

CommandOutcome run_cutset(const CommandRequest& req) {
    check_known_options(req, {"file", "strict"});
    const std::string& path = require_opt(req, "file");
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    RootedGraph g = parse_graph(in);
    bool strict = parse_bool(opt_or(req, "strict", "false"), "strict");

    CutsetResult r;
    if (g.directed) {
        r = cutset_directed(g, strict);
    } else {
        if (strict) throw DomainError("strict mode applies to directed graphs only");
        r = cutset_undirected(g);
    }

    CommandOutcome out;
    out.subcommand = "cutset";
    out.inputs.add("file", Json::str(path))
        .add("root", Json::str(g.root))
        .add("directed", Json::boolean(g.directed))
        .add("nodes", Json::integer(static_cast<long long>(g.nodes.size())))
        .add("strict", Json::boolean(strict));
    Json cut = Json::array();
    for (const std::string& c : r.cutset) cut.push(Json::str(c));
    Json inv = Json::array();
    for (const auto& [sv, v] : r.inverse_edges)
        inv.push(Json::array().push(Json::str(sv)).push(Json::str(v)));
    Json df = Json::object();
    for (const auto& [name, depth] : r.df) df.add(name, Json::integer(depth));
    out.results.add("cutset", std::move(cut))
        .add("inverse_edges", std::move(inv))
        .add("df", std::move(df));
    return out;
}

CommandOutcome run_verify_charts(const CommandRequest& req) {
    check_known_options(req, {"samples", "seed"});
    long samples = parse_bounded(opt_or(req, "samples", "50"), "samples", 1, 100000);
    long seed = parse_bounded(opt_or(req, "seed", "1"), "seed", 0, 1000000000);

    std::uint64_t state = static_cast<std::uint64_t>(seed);
    auto next = [&state]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 16;
    };
    auto next_rational = [&]() {
        long num = static_cast<long>(next() % 2001) - 1000;
        long den = static_cast<long>(next() % 1000) + 1;
        return BigRational(num, den);
    };

    long checks = 0, failures = 0;
    auto expect = [&](bool ok) {
        ++checks;
        if (!ok) ++failures;
    };
    for (long i = 0; i < samples; ++i) {
        BigRational u = next_rational();
        BigRational v = next_rational();
        if (u.is_zero() && v.is_zero()) v = BigRational(1);
        SpherePoint p = rational_sphere_point(u, v);

        expect(stereo_roundtrip_residual(1, p).is_zero());
        if (stereo_chart_contains(2, p)) expect(stereo_roundtrip_residual(2, p).is_zero());
        for (int chart = 1; chart <= 6; ++chart)
            if (half_chart_contains(chart, p)) expect(half_roundtrip_residual(chart, p).is_zero());

        bool interior = p.x1.abs() < BigRational(1) && p.x2.abs() < BigRational(1) &&
                        p.x3.abs() < BigRational(1);
        if (interior) {
            expect(cocycle_product(p) == Mat2::identity());
            expect(!transition_matrix(2, 1, p).det().is_zero());
            expect(!transition_matrix(3, 2, p).det().is_zero());
            expect(!transition_matrix(1, 3, p).det().is_zero());
            expect(bundle_consistent(p));
        }
    }

    CommandOutcome out;
    out.subcommand = "verify-charts";
    out.inputs.add("samples", Json::integer(samples))
        .add("seed", Json::integer(seed))
        .add("precision", Json::integer(req.precision));
    out.results.add("checks", Json::integer(checks))
        .add("failures", Json::integer(failures))
        .add("all_pass", Json::boolean(failures == 0));
    return out;
}

CommandOutcome run_flow(const CommandRequest& req) {
    check_known_options(req, {"matrix", "t", "x0"});
    long prec = req.precision;
    std::vector<std::string> rows = split(require_opt(req, "matrix"), ';');
    std::size_t n = rows.size();
    MatC a(n, prec);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::string> cells = split(rows[i], ',');
        if (cells.size() != n)
            throw ParseError("matrix must be square: row " + std::to_string(i + 1) + " has " +
                             std::to_string(cells.size()) + " entries for " + std::to_string(n) +
                             " rows");
        for (std::size_t j = 0; j < n; ++j)
            a.at(i, j) = Complex(Real::from_string(cells[j], prec));
    }
    Real t = Real::from_string(require_opt(req, "t"), prec);
    std::vector<std::string> x0_cells = split(require_opt(req, "x0"), ',');
    if (x0_cells.size() != n)
        throw DomainError("x0 must have one entry per matrix row");
    std::vector<Complex> x0;
    for (const std::string& c : x0_cells) x0.emplace_back(Real::from_string(c, prec));

    FlowResult r = linear_flow(a, t, x0);

    CommandOutcome out;
    out.subcommand = "flow";
    out.inputs.add("n", Json::integer(static_cast<long long>(n)))
        .add("matrix", Json::str(require_opt(req, "matrix")))
        .add("t", real_json(t))
        .add("x0", Json::str(require_opt(req, "x0")))
        .add("precision", Json::integer(prec));
    Json state = Json::array();
    for (const Complex& z : r.state)
        state.push(Json::array().push(real_json(z.re())).push(real_json(z.im())));
    out.results.add("state", std::move(state)).add("bound", real_json(r.bound));
    return out;
}

CommandOutcome run_nctorus(const CommandRequest& req) {
    check_known_options(req, {"q", "p"});
    long prec = req.precision;
    long q = parse_bounded(require_opt(req, "q"), "q", 2, 4096);
    long p = parse_bounded(opt_or(req, "p", "1"), "p", -1000000, 1000000);
    ClockShiftPair cs = clock_shift_pair(static_cast<unsigned>(q), p, prec);

    CommandOutcome out;
    out.subcommand = "nctorus";
    out.inputs.add("q", Json::integer(q))
        .add("p", Json::integer(p))
        .add("precision", Json::integer(prec));
    out.results.add("omega_re", real_json(cs.omega.re()))
        .add("omega_im", real_json(cs.omega.im()))
        .add("commutation_residual", real_json(cs.commutation_residual))
        .add("unitarity_residual", real_json(cs.unitarity_residual));
    return out;
}

} // namespace

std::string format_real(const Real& x) { return x.checked("formatted value"), x.str(17); }

CommandOutcome dispatch(const CommandRequest& req) {
    if (req.subcommand == "zeta") return run_zeta(req);
    if (req.subcommand == "lchi") return run_lchi(req);
    if (req.subcommand == "ec-local") return run_ec_local(req);
    if (req.subcommand == "ec-lseries") return run_ec_lseries(req);
    if (req.subcommand == "cutset") return run_cutset(req);
    if (req.subcommand == "verify-charts") return run_verify_charts(req);
    if (req.subcommand == "flow") return run_flow(req);
    if (req.subcommand == "nctorus") return run_nctorus(req);
    throw ParseError("unknown subcommand: " + req.subcommand);
}

std::string render_envelope(const CommandOutcome& outcome, const std::string& format,
                            long elapsed_ms) {
    if (format == "json") {
        Json env = Json::object();
        env.add("subcommand", Json::str(outcome.subcommand));
        env.add("inputs", outcome.inputs);
        env.add("results", outcome.results);
        env.add("elapsed_ms", Json::integer(elapsed_ms));
        return env.dump() + "\n";
    }
    if (format != "text") throw ParseError("format must be 'json' or 'text'");
    std::string out = "subcommand: " + outcome.subcommand + "\n";
    std::vector<std::pair<std::string, std::string>> rows;
    outcome.inputs.flatten("inputs", rows);
    outcome.results.flatten("results", rows);
    for (const auto& [k, v] : rows) out += k + " = " + v + "\n";
    out += "elapsed_ms = " + std::to_string(elapsed_ms) + "\n";
    return out;
}

} // namespace zetalab

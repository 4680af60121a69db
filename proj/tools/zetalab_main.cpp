#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "zetalab/cli.hpp"
#include "zetalab/errors.hpp"

namespace {

// Adds string-valued options to a subcommand and records which were given.
class OptionSet {
  public:
    OptionSet(CLI::App* cmd, std::initializer_list<std::pair<const char*, const char*>> opts) {
        values_.reserve(opts.size());
        for (const auto& [name, help] : opts) {
            values_.emplace_back(name, std::string());
            auto& slot = values_.back().second;
            cmd->add_option(std::string("--") + name, slot, help);
        }
        cmd_ = cmd;
    }

    void fill(zetalab::CommandRequest* req) const {
        for (const auto& [name, value] : values_) {
            if (cmd_->count(std::string("--") + name) > 0) req->options[name] = value;
        }
    }

  private:
    CLI::App* cmd_ = nullptr;
    std::vector<std::pair<std::string, std::string>> values_;
};

long env_precision() {
    const char* raw = std::getenv("ZETALAB_PRECISION");
    if (!raw) return zetalab::Real::kDefaultPrecision;
    char* end = nullptr;
    long v = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0')
        throw zetalab::ParseError("ZETALAB_PRECISION must be an integer, got '" +
                                  std::string(raw) + "'");
    return v;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale rigor checks: zeta and L values with certified bounds, "
                 "elliptic curve local data, graph cutsets, sphere charts, linear flows"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    long precision = 0;
    auto* prec_opt = app.add_option("--precision", precision, "mantissa bits (default 128, "
                                                              "or ZETALAB_PRECISION)");

    struct Sub {
        CLI::App* cmd;
        OptionSet opts;
    };
    std::vector<Sub> subs;

    auto* zeta = app.add_subcommand("zeta", "zeta(s) on Re(s) >= 1 with a certified bound");
    subs.push_back({zeta, OptionSet(zeta, {{"re", "Re(s), required"},
                                           {"im", "Im(s), default 0"},
                                           {"N", "summation cutoff"},
                                           {"k", "correction terms"}})});

    auto* lchi = app.add_subcommand("lchi", "L(1, chi) for the quadratic field Q(sqrt(D))");
    subs.push_back({lchi, OptionSet(lchi, {{"D", "squarefree D >= 2, required"},
                                           {"m", "truncation point, default 40"}})});

    auto* eclocal = app.add_subcommand("ec-local", "reduction data of an integral curve");
    subs.push_back({eclocal, OptionSet(eclocal, {{"curve", "five integers 'a1 a2 a3 a4 a6'"},
                                                 {"p", "single prime"},
                                                 {"pmax", "all primes up to here, default 50"},
                                                 {"cache", "append-only local-data cache file"}})});

    auto* eclseries = app.add_subcommand("ec-lseries", "truncated Euler product of the L-series");
    subs.push_back({eclseries, OptionSet(eclseries, {{"curve", "five integers 'a1 a2 a3 a4 a6'"},
                                                     {"re", "Re(s), required"},
                                                     {"im", "Im(s), default 0"},
                                                     {"P", "prime cutoff, default 100"},
                                                     {"M", "also emit a_1..a_M, default 0"}})});

    auto* cutset = app.add_subcommand("cutset", "depth-first cutset of a rooted graph");
    subs.push_back({cutset, OptionSet(cutset, {{"file", "graph description file"},
                                               {"strict", "true: also cut self-loop nodes "
                                                          "(directed only)"}})});

    auto* charts = app.add_subcommand("verify-charts", "exact sphere-chart consistency battery");
    subs.push_back({charts, OptionSet(charts, {{"samples", "rational sample points, default 50"},
                                               {"seed", "sample generator seed, default 1"}})});

    auto* flow = app.add_subcommand("flow", "state of x' = Ax at time t");
    subs.push_back({flow, OptionSet(flow, {{"matrix", "rows 'a,b;c,d'"},
                                           {"t", "time"},
                                           {"x0", "initial state 'v1,v2'"}})});

    auto* nctorus = app.add_subcommand("nctorus", "clock and shift pair with UV = wVU residuals");
    subs.push_back({nctorus, OptionSet(nctorus, {{"q", "dimension q >= 2"},
                                                 {"p", "exponent in w = e^{2 pi i p/q}, "
                                                       "default 1"}})});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    zetalab::CommandRequest req;
    for (const Sub& sub : subs) {
        if (sub.cmd->parsed()) {
            req.subcommand = sub.cmd->get_name();
            sub.opts.fill(&req);
        }
    }

    try {
        req.precision = (prec_opt->count() > 0) ? precision : env_precision();
        auto start = std::chrono::steady_clock::now();
        zetalab::CommandOutcome outcome = zetalab::dispatch(req);
        auto stop = std::chrono::steady_clock::now();
        long ms = static_cast<long>(
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count());
        std::cout << zetalab::render_envelope(outcome, format, ms);
        return 0;
    } catch (const zetalab::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const zetalab::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
}

#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rmtsf/characters.hpp"
#include "rmtsf/fluctuations.hpp"
#include "rmtsf/io.hpp"
#include "rmtsf/moments.hpp"
#include "rmtsf/montecarlo.hpp"
#include "rmtsf/verify.hpp"
#include "rmtsf/wick.hpp"

namespace {

using namespace rmtsf;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitUsage = 64;

struct EnsembleFlags {
    std::string ensemble = "gue";
    std::string gamma = "0";
    std::string gamma1 = "0";
    std::string gamma2 = "0";

    void attach(CLI::App* cmd, const std::string& flag = "--ensemble") {
        cmd->add_option(flag, ensemble, "gue|lue|jue (aliases hermite|laguerre|jacobi)");
        cmd->add_option("--gamma", gamma, "LUE gamma (rational, e.g. 1/2)");
        cmd->add_option("--gamma1", gamma1, "JUE gamma1");
        cmd->add_option("--gamma2", gamma2, "JUE gamma2");
    }

    EnsembleSpec spec() const {
        if (ensemble == "gue" || ensemble == "hermite") return EnsembleSpec::hermite();
        if (ensemble == "lue" || ensemble == "laguerre")
            return EnsembleSpec::laguerre(parse_rational(gamma));
        if (ensemble == "jue" || ensemble == "jacobi")
            return EnsembleSpec::jacobi(parse_rational(gamma1), parse_rational(gamma2));
        throw std::invalid_argument("unknown ensemble '" + ensemble + "'");
    }
};

PointList parse_points(const std::string& text) {
    PointList pts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) pts.push_back(parse_rational(item));
    return pts;
}

std::vector<unsigned> parse_unsigned_list(const std::string& text) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        long v = std::stol(item);
        if (v < 0) throw std::invalid_argument("expected a nonnegative integer list");
        out.push_back(static_cast<unsigned>(v));
    }
    return out;
}

void print_moment(const MomentResult& r, bool as_json) {
    if (as_json) {
        json j{{"ensemble", r.ensemble.name()}, {"index", r.index.to_string()}};
        if (r.symbolic) j["value"] = poly_to_json(r.poly);
        else j["value"] = to_string(r.value);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << (r.symbolic ? poly_to_text(r.poly) : to_string(r.value)) << "\n";
    }
}

int run_verify(const std::string& suite, bool skip_mc, std::uint64_t seed, unsigned workers,
               bool as_json) {
    std::vector<CriterionResult> results;
    if (suite == "paper-tables") {
        results.push_back(check_trace_table_partitions6());
        results.push_back(check_schur_table_partitions4());
        results.push_back(check_x_table_partitions6());
    } else if (suite == "wick") {
        results.push_back(check_wick_equivalence());
    } else if (suite == "mc") {
        results.push_back(check_monte_carlo(seed, workers));
    } else if (suite == "all") {
        results = run_acceptance(!skip_mc, seed, workers);
    } else {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    unsigned identities = 0;
    bool all_passed = true;
    for (const CriterionResult& r : results) {
        identities += r.checks;
        all_passed &= r.passed;
        if (as_json) continue;
        std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << " ("
                  << (r.checks - r.failures.size()) << "/" << r.checks << " identities)\n";
        for (const std::string& f : r.failures) std::cout << "    " << f << "\n";
    }
    if (as_json) {
        json j = json::array();
        for (const CriterionResult& r : results) {
            j.push_back({{"id", r.id},
                         {"name", r.name},
                         {"passed", r.passed},
                         {"checks", r.checks},
                         {"failures", r.failures}});
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << (all_passed ? "OK" : "FAILED") << ": " << identities << " identities checked\n";
    }
    return all_passed ? kExitOk : kExitVerifyFailed;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"exact joint moments of GUE/LUE/JUE matrices via symmetric functions"};
    app.require_subcommand(1);

    // trace-moment
    auto* trace_cmd = app.add_subcommand("trace-moment", "E[prod_j Tr M^{mu_j}]");
    EnsembleFlags trace_flags;
    trace_flags.attach(trace_cmd);
    std::string trace_mu;
    bool trace_symbolic = false, trace_json = false;
    long long trace_n = -1;
    trace_cmd->add_option("--mu", trace_mu, "partition, e.g. \"4,2\"")->required();
    trace_cmd->add_flag("--symbolic", trace_symbolic, "polynomial in N");
    trace_cmd->add_option("--n", trace_n, "fixed matrix size");
    trace_cmd->add_flag("--json", trace_json, "JSON output");

    // schur-moment
    auto* schur_cmd = app.add_subcommand("schur-moment", "E[S_lambda]");
    EnsembleFlags schur_flags;
    schur_flags.attach(schur_cmd);
    std::string schur_lambda;
    bool schur_symbolic = false, schur_json = false;
    long long schur_n = -1;
    schur_cmd->add_option("--lambda", schur_lambda, "partition")->required();
    schur_cmd->add_flag("--symbolic", schur_symbolic, "polynomial in N");
    schur_cmd->add_option("--n", schur_n, "fixed matrix size");
    schur_cmd->add_flag("--json", schur_json, "JSON output");

    // charpoly
    auto* charpoly_cmd = app.add_subcommand(
        "charpoly", "E[prod det(t_j - M)] at distinct points, or E[det(t-M)^p] coefficients");
    EnsembleFlags charpoly_flags;
    charpoly_flags.attach(charpoly_cmd);
    std::string charpoly_points;
    long long charpoly_n = 0, charpoly_power = 0;
    bool charpoly_json = false;
    charpoly_cmd->add_option("--n", charpoly_n, "matrix size")->required();
    charpoly_cmd->add_option("--points", charpoly_points, "distinct rational points \"2,5\"");
    charpoly_cmd->add_option("--power", charpoly_power, "equal-point power p");
    charpoly_cmd->add_flag("--json", charpoly_json, "JSON output");

    // mop-eval
    auto* mop_cmd = app.add_subcommand("mop-eval", "multivariate orthogonal polynomial value");
    EnsembleFlags mop_flags;
    mop_flags.attach(mop_cmd, "--family");
    std::string mop_lambda, mop_points;
    bool mop_json = false;
    mop_cmd->add_option("--lambda", mop_lambda, "partition")->required();
    mop_cmd->add_option("--points", mop_points, "distinct rational points")->required();
    mop_cmd->add_flag("--json", mop_json, "JSON output");

    // schur-eval
    auto* schur_eval_cmd = app.add_subcommand("schur-eval", "Schur polynomial value");
    std::string schur_eval_lambda, schur_eval_points;
    bool schur_eval_json = false;
    schur_eval_cmd->add_option("--lambda", schur_eval_lambda, "partition")->required();
    schur_eval_cmd->add_option("--points", schur_eval_points, "rational points")->required();
    schur_eval_cmd->add_flag("--json", schur_eval_json, "JSON output");

    // char-table
    auto* char_cmd = app.add_subcommand("char-table", "symmetric group character table");
    long long char_n = 0;
    bool char_json = false;
    char_cmd->add_option("--n", char_n, "weight")->required();
    char_cmd->add_flag("--json", char_json, "JSON output");

    // xk-moment
    auto* xk_cmd = app.add_subcommand("xk-moment", "E[prod X_{k_i}] for Chebyshev statistics");
    std::string xk_ks;
    bool xk_symbolic = false, xk_text = false;
    long long xk_n = -1;
    xk_cmd->add_option("--ks", xk_ks, "degrees, e.g. \"3,3\"")->required();
    xk_cmd->add_flag("--symbolic", xk_symbolic, "Laurent polynomial in N (default)");
    xk_cmd->add_option("--n", xk_n, "evaluate at fixed N");
    xk_cmd->add_flag("--text", xk_text, "text instead of JSON");

    // cumulant
    auto* cum_cmd = app.add_subcommand("cumulant", "n-th cumulant of X_k");
    long long cum_k = 0, cum_order = 0;
    bool cum_text = false;
    cum_cmd->add_option("--k", cum_k, "Chebyshev degree")->required();
    cum_cmd->add_option("--order", cum_order, "cumulant order n >= 2")->required();
    cum_cmd->add_flag("--text", cum_text, "text instead of JSON");

    // connected
    auto* conn_cmd = app.add_subcommand("connected", "connected correlator of rescaled traces");
    std::string conn_mu;
    bool conn_text = false;
    conn_cmd->add_option("--mu", conn_mu, "partition")->required();
    conn_cmd->add_flag("--text", conn_text, "text instead of JSON");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force oracles");
    auto* wick_cmd = oracle_cmd->add_subcommand("wick", "Wick-pairing GUE trace moment");
    std::string wick_mu, wick_convention = "unrescaled";
    bool wick_connected_only = false, wick_json = false;
    wick_cmd->add_option("--mu", wick_mu, "partition")->required();
    wick_cmd->add_option("--convention", wick_convention, "unrescaled|rescaled");
    wick_cmd->add_flag("--connected", wick_connected_only, "restrict to connected gluings");
    wick_cmd->add_flag("--json", wick_json, "JSON output");

    // check
    auto* check_cmd = app.add_subcommand("check", "identity checkers");
    auto* dc_cmd = check_cmd->add_subcommand("dual-cauchy", "generalized dual Cauchy identity");
    EnsembleFlags dc_flags;
    dc_flags.attach(dc_cmd, "--family");
    long long dc_p = 1, dc_q = 1;
    std::uint64_t dc_seed = 1;
    dc_cmd->add_option("--p", dc_p, "points in t");
    dc_cmd->add_option("--q", dc_q, "points in x");
    dc_cmd->add_option("--seed", dc_seed, "random point seed");
    auto* gf_cmd = check_cmd->add_subcommand("genfun", "truncated generating function identity");
    long long gf_vars = 2, gf_degree = 6;
    gf_cmd->add_option("--vars", gf_vars, "variables (<= 3)");
    gf_cmd->add_option("--degree", gf_degree, "total degree (<= 8)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "acceptance suites");
    std::string verify_suite = "all";
    bool verify_skip_mc = false, verify_json = false;
    std::uint64_t verify_seed = 42;
    unsigned verify_workers = 4;
    verify_cmd->add_option("--suite", verify_suite, "paper-tables|wick|mc|all");
    verify_cmd->add_flag("--skip-mc", verify_skip_mc, "skip the Monte Carlo criterion");
    verify_cmd->add_option("--seed", verify_seed, "Monte Carlo seed");
    verify_cmd->add_option("--workers", verify_workers, "Monte Carlo worker threads");
    verify_cmd->add_flag("--json", verify_json, "JSON output");

    // single-comparison form: verify mc --ensemble ... --mu ... --samples ...
    EnsembleFlags mc_flags;
    std::string mc_mu;
    long long mc_n = 0;
    std::uint64_t mc_samples = 0;
    unsigned mc_workers = 0;
    auto* mc_cmd = verify_cmd->add_subcommand("mc", "single Monte Carlo comparison");
    mc_flags.attach(mc_cmd);
    mc_cmd->add_option("--n", mc_n, "matrix size")->required();
    mc_cmd->add_option("--mu", mc_mu, "trace partition")->required();
    mc_cmd->add_option("--samples", mc_samples, "sample count")->required();
    mc_cmd->add_option("--seed", verify_seed, "seed");
    mc_cmd->add_option("--workers", mc_workers, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (trace_cmd->parsed()) {
        std::optional<unsigned> n;  // absent means symbolic
        if (trace_n >= 0) n = static_cast<unsigned>(trace_n);
        print_moment(trace_joint_moment(trace_flags.spec(), Partition::parse(trace_mu), n),
                     trace_json);
        return kExitOk;
    }
    if (schur_cmd->parsed()) {
        std::optional<unsigned> n;
        if (schur_n >= 0) n = static_cast<unsigned>(schur_n);
        print_moment(schur_moment(schur_flags.spec(), Partition::parse(schur_lambda), n),
                     schur_json);
        return kExitOk;
    }
    if (charpoly_cmd->parsed()) {
        EnsembleSpec spec = charpoly_flags.spec();
        if (charpoly_power > 0) {
            std::vector<Rational> coeffs = charpoly_power_moment(
                spec, static_cast<unsigned>(charpoly_n), static_cast<unsigned>(charpoly_power));
            if (charpoly_json) {
                json c = json::object();
                for (size_t i = 0; i < coeffs.size(); ++i)
                    if (coeffs[i] != 0) c[std::to_string(i)] = to_string(coeffs[i]);
                std::cout << json{{"var", "t"}, {"coeffs", c}}.dump() << "\n";
            } else {
                for (size_t i = 0; i < coeffs.size(); ++i)
                    std::cout << "t^" << i << ": " << to_string(coeffs[i]) << "\n";
            }
            return kExitOk;
        }
        Rational value =
            charpoly_moment(spec, static_cast<unsigned>(charpoly_n), parse_points(charpoly_points));
        if (charpoly_json) std::cout << json{{"value", to_string(value)}}.dump() << "\n";
        else std::cout << to_string(value) << "\n";
        return kExitOk;
    }
    if (mop_cmd->parsed()) {
        Rational value = mop_eval(mop_flags.spec(), Partition::parse(mop_lambda),
                                  parse_points(mop_points));
        if (mop_json) std::cout << json{{"value", to_string(value)}}.dump() << "\n";
        else std::cout << to_string(value) << "\n";
        return kExitOk;
    }
    if (schur_eval_cmd->parsed()) {
        Rational value =
            schur_eval(Partition::parse(schur_eval_lambda), parse_points(schur_eval_points));
        if (schur_eval_json) std::cout << json{{"value", to_string(value)}}.dump() << "\n";
        else std::cout << to_string(value) << "\n";
        return kExitOk;
    }
    if (char_cmd->parsed()) {
        const CharacterTable& t = character_table(static_cast<unsigned>(char_n));
        if (char_json) {
            json rows = json::array();
            for (size_t i = 0; i < t.labels.size(); ++i) {
                json row{{"lambda", t.labels[i].to_string()}, {"chi", t.chi[i]}};
                rows.push_back(std::move(row));
            }
            json classes = json::array();
            for (const Partition& mu : t.labels) classes.push_back(mu.to_string());
            std::cout << json{{"n", t.n}, {"classes", classes}, {"rows", rows}}.dump() << "\n";
        } else {
            for (size_t i = 0; i < t.labels.size(); ++i) {
                std::cout << "(" << t.labels[i].to_string() << "):";
                for (long long v : t.chi[i]) std::cout << " " << v;
                std::cout << "\n";
            }
        }
        return kExitOk;
    }
    if (xk_cmd->parsed()) {
        std::vector<unsigned> ks = parse_unsigned_list(xk_ks);
        LaurentPolyN m = xk_joint_central_moment(ks);
        if (xk_n >= 0) {
            Rational v = m.eval(Rational(xk_n));
            std::cout << (xk_text ? to_string(v) : json{{"value", to_string(v)}}.dump()) << "\n";
        } else {
            std::cout << (xk_text ? laurent_to_text(m) : laurent_to_json(m).dump()) << "\n";
        }
        return kExitOk;
    }
    if (cum_cmd->parsed()) {
        LaurentPolyN kappa =
            xk_cumulant(static_cast<unsigned>(cum_k), static_cast<unsigned>(cum_order));
        std::cout << (cum_text ? laurent_to_text(kappa) : laurent_to_json(kappa).dump()) << "\n";
        return kExitOk;
    }
    if (conn_cmd->parsed()) {
        ConnectedCorrelator cc = connected_correlator(Partition::parse(conn_mu));
        std::cout << (conn_text ? laurent_to_text(cc.value) : laurent_to_json(cc.value).dump())
                  << "\n";
        return kExitOk;
    }
    if (wick_cmd->parsed()) {
        Partition mu = Partition::parse(wick_mu);
        LaurentPolyN value;
        if (wick_connected_only) {
            value = wick_connected(mu);
        } else if (wick_convention == "unrescaled") {
            value = wick_trace_moment(mu, WickConvention::unrescaled);
        } else if (wick_convention == "rescaled") {
            value = wick_trace_moment(mu, WickConvention::rescaled);
        } else {
            throw std::invalid_argument("unknown convention '" + wick_convention + "'");
        }
        std::cout << (wick_json ? laurent_to_json(value).dump() : laurent_to_text(value)) << "\n";
        return kExitOk;
    }
    if (dc_cmd->parsed()) {
        std::mt19937_64 gen(dc_seed);
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 4);
        auto random_points = [&](unsigned count) {
            PointList pts;
            while (pts.size() < count) {
                Rational q(num(gen), den(gen));
                bool dup = false;
                for (const Rational& p : pts) dup |= (p == q);
                if (!dup) pts.push_back(q);
            }
            return pts;
        };
        auto [lhs, rhs] = verify_dual_cauchy(dc_flags.spec(),
                                             random_points(static_cast<unsigned>(dc_p)),
                                             random_points(static_cast<unsigned>(dc_q)));
        bool ok = lhs == rhs;
        std::cout << "lhs = " << to_string(lhs) << "\nrhs = " << to_string(rhs) << "\n"
                  << (ok ? "OK" : "MISMATCH") << "\n";
        return ok ? kExitOk : kExitVerifyFailed;
    }
    if (gf_cmd->parsed()) {
        bool ok = verify_genfun_truncated(static_cast<unsigned>(gf_vars),
                                          static_cast<unsigned>(gf_degree));
        std::cout << (ok ? "OK" : "MISMATCH") << "\n";
        return ok ? kExitOk : kExitVerifyFailed;
    }
    if (mc_cmd->parsed()) {
        SamplerConfig config{mc_flags.spec(), static_cast<unsigned>(mc_n), mc_samples, verify_seed,
                             mc_workers == 0 ? 1 : mc_workers};
        Partition mu = Partition::parse(mc_mu);
        Estimate est = estimate_trace_moment(config, mu);
        Rational target = trace_joint_moment(config.ensemble, mu, config.n).value;
        double z = est.standard_error > 0
                       ? (est.mean - static_cast<double>(target)) / est.standard_error
                       : 0.0;
        json j{{"target", to_string(target)},
               {"estimate", est.mean},
               {"se", est.standard_error},
               {"z", z}};
        std::cout << j.dump() << "\n";
        return std::abs(z) <= 5.0 ? kExitOk : kExitVerifyFailed;
    }
    if (verify_cmd->parsed()) {
        return run_verify(verify_suite, verify_skip_mc, verify_seed, verify_workers, verify_json);
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const CLI::ParseError&) {
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitPrecondition;
    }
}

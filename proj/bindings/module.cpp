#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rmtsf/characters.hpp"
#include "rmtsf/fluctuations.hpp"
#include "rmtsf/io.hpp"
#include "rmtsf/moments.hpp"
#include "rmtsf/montecarlo.hpp"
#include "rmtsf/verify.hpp"
#include "rmtsf/wick.hpp"

namespace py = pybind11;

namespace {

using namespace rmtsf;

EnsembleSpec make_ensemble(const std::string& name, const std::string& gamma,
                           const std::string& gamma1, const std::string& gamma2) {
    if (name == "gue" || name == "hermite") return EnsembleSpec::hermite();
    if (name == "lue" || name == "laguerre") return EnsembleSpec::laguerre(parse_rational(gamma));
    if (name == "jue" || name == "jacobi")
        return EnsembleSpec::jacobi(parse_rational(gamma1), parse_rational(gamma2));
    throw std::invalid_argument("unknown ensemble '" + name + "'");
}

Partition make_partition(const std::vector<unsigned>& parts) { return Partition(parts); }

py::dict laurent_dict(const LaurentPolyN& p) {
    py::dict coeffs;
    for (const auto& [e, c] : p.coeffs()) coeffs[py::str(std::to_string(e))] = to_string(c);
    py::dict out;
    out["var"] = "N";
    out["coeffs"] = coeffs;
    return out;
}

py::dict poly_dict(const PolyN& p) { return laurent_dict(p.to_laurent()); }

PointList to_points(const std::vector<std::string>& xs) {
    PointList out;
    for (const std::string& x : xs) out.push_back(parse_rational(x));
    return out;
}

py::object moment_value(const MomentResult& r) {
    if (r.symbolic) return poly_dict(r.poly);
    return py::str(to_string(r.value));
}

}  // namespace

PYBIND11_MODULE(_rmtsf, m) {
    m.doc() = "exact trace/characteristic-polynomial moments of GUE, LUE and JUE "
              "matrices via symmetric functions";

    m.def(
        "trace_joint_moment",
        [](const std::vector<unsigned>& mu, const std::string& ensemble, py::object n,
           const std::string& gamma, const std::string& gamma1, const std::string& gamma2) {
            std::optional<unsigned> fixed;
            if (!n.is_none()) fixed = n.cast<unsigned>();
            return moment_value(
                trace_joint_moment(make_ensemble(ensemble, gamma, gamma1, gamma2),
                                   make_partition(mu), fixed));
        },
        py::arg("mu"), py::arg("ensemble") = "gue", py::arg("n") = py::none(),
        py::arg("gamma") = "0", py::arg("gamma1") = "0", py::arg("gamma2") = "0",
        "E[prod_j Tr M^{mu_j}]; symbolic polynomial in N when n is None");

    m.def(
        "schur_moment",
        [](const std::vector<unsigned>& lam, const std::string& ensemble, py::object n,
           const std::string& gamma, const std::string& gamma1, const std::string& gamma2) {
            std::optional<unsigned> fixed;
            if (!n.is_none()) fixed = n.cast<unsigned>();
            return moment_value(schur_moment(make_ensemble(ensemble, gamma, gamma1, gamma2),
                                             make_partition(lam), fixed));
        },
        py::arg("lam"), py::arg("ensemble") = "gue", py::arg("n") = py::none(),
        py::arg("gamma") = "0", py::arg("gamma1") = "0", py::arg("gamma2") = "0");

    m.def(
        "charpoly_moment",
        [](const std::string& ensemble, unsigned n, const std::vector<std::string>& t,
           const std::string& gamma, const std::string& gamma1, const std::string& gamma2) {
            return to_string(
                charpoly_moment(make_ensemble(ensemble, gamma, gamma1, gamma2), n, to_points(t)));
        },
        py::arg("ensemble"), py::arg("n"), py::arg("t"), py::arg("gamma") = "0",
        py::arg("gamma1") = "0", py::arg("gamma2") = "0",
        "E[prod_j det(t_j - M)] at pairwise distinct rational points");

    m.def(
        "charpoly_power_moment",
        [](const std::string& ensemble, unsigned n, unsigned p, const std::string& gamma,
           const std::string& gamma1, const std::string& gamma2) {
            std::vector<std::string> out;
            for (const Rational& c :
                 charpoly_power_moment(make_ensemble(ensemble, gamma, gamma1, gamma2), n, p))
                out.push_back(to_string(c));
            return out;
        },
        py::arg("ensemble"), py::arg("n"), py::arg("p"), py::arg("gamma") = "0",
        py::arg("gamma1") = "0", py::arg("gamma2") = "0",
        "coefficients of E[det(t - M)^p] in t, degree 0 upward");

    m.def(
        "mop_eval",
        [](const std::string& family, const std::vector<unsigned>& lam,
           const std::vector<std::string>& x, const std::string& gamma, const std::string& gamma1,
           const std::string& gamma2) {
            return to_string(
                mop_eval(make_ensemble(family, gamma, gamma1, gamma2), make_partition(lam), to_points(x)));
        },
        py::arg("family"), py::arg("lam"), py::arg("x"), py::arg("gamma") = "0",
        py::arg("gamma1") = "0", py::arg("gamma2") = "0");

    m.def(
        "schur_eval",
        [](const std::vector<unsigned>& lam, const std::vector<std::string>& x) {
            return to_string(schur_eval(make_partition(lam), to_points(x)));
        },
        py::arg("lam"), py::arg("x"));

    m.def(
        "character",
        [](const std::vector<unsigned>& lam, const std::vector<unsigned>& mu) {
            return character(make_partition(lam), make_partition(mu));
        },
        py::arg("lam"), py::arg("mu"));

    m.def(
        "dim_irrep",
        [](const std::vector<unsigned>& lam) {
            return dim_irrep(make_partition(lam)).str();
        },
        py::arg("lam"));

    m.def(
        "character_table",
        [](unsigned n) {
            const CharacterTable& t = character_table(n);
            py::list labels, rows;
            for (const Partition& p : t.labels) labels.append(p.parts());
            for (const auto& row : t.chi) rows.append(row);
            py::dict out;
            out["n"] = t.n;
            out["labels"] = labels;
            out["chi"] = rows;
            return out;
        },
        py::arg("n"));

    m.def(
        "partitions_of",
        [](unsigned n) {
            py::list out;
            for (const Partition& p : partitions_of(n)) out.append(p.parts());
            return out;
        },
        py::arg("n"));

    m.def(
        "conjugate",
        [](const std::vector<unsigned>& lam) { return conjugate(make_partition(lam)).parts(); },
        py::arg("lam"));

    m.def(
        "contents",
        [](const std::vector<unsigned>& lam) { return contents(make_partition(lam)); },
        py::arg("lam"));

    m.def(
        "xk_joint_central_moment",
        [](const std::vector<unsigned>& ks) { return laurent_dict(xk_joint_central_moment(ks)); },
        py::arg("ks"), "E[prod_i X_{k_i}] as a Laurent polynomial in N");

    m.def(
        "xk_cumulant",
        [](unsigned k, unsigned n) { return laurent_dict(xk_cumulant(k, n)); },
        py::arg("k"), py::arg("n"));

    m.def(
        "connected_correlator",
        [](const std::vector<unsigned>& mu) {
            return laurent_dict(connected_correlator(make_partition(mu)).value);
        },
        py::arg("mu"));

    m.def(
        "genus_coefficient",
        [](const std::vector<unsigned>& mu, unsigned g) {
            return to_string(genus_coefficient(make_partition(mu), g));
        },
        py::arg("mu"), py::arg("g"));

    m.def(
        "wick_trace_moment",
        [](const std::vector<unsigned>& mu, const std::string& convention) {
            WickConvention conv = convention == "rescaled" ? WickConvention::rescaled
                                                           : WickConvention::unrescaled;
            return laurent_dict(wick_trace_moment(make_partition(mu), conv));
        },
        py::arg("mu"), py::arg("convention") = "unrescaled");

    m.def(
        "wick_connected",
        [](const std::vector<unsigned>& mu) {
            return laurent_dict(wick_connected(make_partition(mu)));
        },
        py::arg("mu"));

    m.def(
        "verify_dual_cauchy",
        [](const std::string& family, const std::vector<std::string>& t,
           const std::vector<std::string>& x, const std::string& gamma, const std::string& gamma1,
           const std::string& gamma2) {
            auto [lhs, rhs] = verify_dual_cauchy(make_ensemble(family, gamma, gamma1, gamma2),
                                                 to_points(t), to_points(x));
            return py::make_tuple(to_string(lhs), to_string(rhs));
        },
        py::arg("family"), py::arg("t"), py::arg("x"), py::arg("gamma") = "0",
        py::arg("gamma1") = "0", py::arg("gamma2") = "0",
        "both sides of the generalized dual Cauchy identity");

    m.def("verify_genfun_truncated", &verify_genfun_truncated, py::arg("vars"),
          py::arg("max_degree"));

    m.def(
        "estimate_trace_moment",
        [](const std::string& ensemble, unsigned n, const std::vector<unsigned>& mu,
           std::uint64_t samples, std::uint64_t seed, unsigned workers, const std::string& gamma,
           const std::string& gamma1, const std::string& gamma2) {
            SamplerConfig config{make_ensemble(ensemble, gamma, gamma1, gamma2), n, samples, seed,
                                 workers};
            Estimate est = estimate_trace_moment(config, make_partition(mu));
            py::dict out;
            out["mean"] = est.mean;
            out["standard_error"] = est.standard_error;
            out["samples"] = est.samples;
            return out;
        },
        py::arg("ensemble"), py::arg("n"), py::arg("mu"), py::arg("samples") = 10000,
        py::arg("seed") = 0, py::arg("workers") = 1, py::arg("gamma") = "0",
        py::arg("gamma1") = "0", py::arg("gamma2") = "0");

    m.def(
        "verify_exact_suite",
        [](std::uint64_t seed) {
            py::list out;
            for (const CriterionResult& r : run_exact_suite(seed)) {
                py::dict d;
                d["id"] = r.id;
                d["name"] = r.name;
                d["passed"] = r.passed;
                d["checks"] = r.checks;
                d["failures"] = r.failures;
                out.append(d);
            }
            return out;
        },
        py::arg("seed") = 42, "run the exact acceptance criteria (no Monte Carlo)");
}

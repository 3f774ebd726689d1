// Python bindings for the main operations. Exact rationals cross the
// boundary as fractions.Fraction, never as floats.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

#include "entlp/certificate.hpp"
#include "entlp/problem_io.hpp"

namespace py = pybind11;
using namespace entlp;

namespace {

py::object to_fraction(const Rational& value)
{
    static py::object fraction_type = py::module_::import("fractions").attr("Fraction");
    return fraction_type(rational_to_string(value));
}

Problem load(const std::string& spec)
{
    return load_problem(spec);
}

GuessModelOptions guess_options(bool use_symmetry, bool use_copies)
{
    return {use_symmetry, use_copies};
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

PYBIND11_MODULE(entlp, m)
{
    m.doc() = "entropy-cone linear programs: secret sharing ratios, guessing "
              "numbers and dual-certificate verification";

    py::register_exception<InfeasibleError>(m, "InfeasibleError");
    py::register_exception<ResourceGuardError>(m, "ResourceGuardError");

    m.def("catalog", [] { return catalog_names(); }, "names of the built-in problems");

    m.def(
        "guess_bound",
        [](const std::string& spec, bool use_symmetry, bool use_copies, long pivot_budget) {
            Problem problem = load(spec);
            if (problem.kind != Problem::Kind::Guessing)
                throw Error("guess_bound needs a guessing problem");
            return to_fraction(guessing_upper_bound(problem.guess,
                                                    guess_options(use_symmetry, use_copies),
                                                    {pivot_budget}));
        },
        py::arg("problem"), py::arg("use_symmetry") = true, py::arg("use_copies") = true,
        py::arg("pivot_budget") = 4'000'000L,
        "exact LP upper bound on the asymptotic guessing number");

    m.def(
        "ratio_bound",
        [](const std::string& spec, bool use_symmetry, bool use_copies, long pivot_budget) {
            Problem problem = load(spec);
            if (problem.kind != Problem::Kind::SecretSharing)
                throw Error("ratio_bound needs a secret-sharing problem");
            return to_fraction(ratio_lower_bound(
                problem.ratio, {use_symmetry, use_copies}, {pivot_budget}));
        },
        py::arg("problem"), py::arg("use_symmetry") = true, py::arg("use_copies") = true,
        py::arg("pivot_budget") = 4'000'000L,
        "exact LP lower bound on the information ratio");

    m.def(
        "verify_certificate",
        [](const std::string& spec, const std::string& cert_path) {
            Problem problem = load(spec);
            if (problem.kind != Problem::Kind::Guessing)
                throw Error("verify_certificate supports guessing certificates");
            auto rows = parse_certificate(read_file(cert_path), problem.guess.universe);
            Rational bound = verify(rows, problem.guess);
            return py::make_tuple(to_fraction(bound), rows.size());
        },
        py::arg("problem"), py::arg("certificate"),
        "parse, classify and verify a dual certificate; returns (bound, row_count)");

    m.def(
        "export_lp",
        [](const std::string& spec, bool use_symmetry, bool use_copies) {
            Problem problem = load(spec);
            LPModel model = problem.kind == Problem::Kind::Guessing
                                ? build_guess_model(problem.guess,
                                                    guess_options(use_symmetry, use_copies))
                                : build_ratio_model(problem.ratio, {use_symmetry, use_copies});
            return export_lp(model);
        },
        py::arg("problem"), py::arg("use_symmetry") = true, py::arg("use_copies") = true,
        "deterministic LP interchange text");

    m.def(
        "clique_cover",
        [](const std::string& spec) {
            Problem problem = load(spec);
            return clique_cover_number(problem.guess.graph);
        },
        py::arg("problem"));

    m.def(
        "fractional_clique_cover",
        [](const std::string& spec) {
            Problem problem = load(spec);
            return to_fraction(fractional_clique_cover_number(problem.guess.graph));
        },
        py::arg("problem"));

    m.def(
        "independence",
        [](const std::string& spec) {
            Problem problem = load(spec);
            return independence_number(problem.guess.graph);
        },
        py::arg("problem"));

    m.def(
        "combinatorial_bounds",
        [](const std::string& spec) {
            Problem problem = load(spec);
            CombinatorialBounds bounds = combinatorial_bounds(problem.guess.graph);
            py::dict out;
            out["lower"] = to_fraction(bounds.lower);
            out["upper_alpha"] = to_fraction(bounds.upper_alpha);
            out["acyclic_zero"] = bounds.acyclic_zero;
            return out;
        },
        py::arg("problem"), "n - cp_f, n - alpha and the acyclicity flag");

    m.def(
        "brute_gn",
        [](const std::string& spec, int colors, std::uint64_t guard) {
            Problem problem = load(spec);
            BruteForceResult result =
                brute_force_guessing_number(problem.guess.graph, colors, guard);
            return py::make_tuple(result.max_winning_configs, result.colors);
        },
        py::arg("problem"), py::arg("colors"), py::arg("guard") = 100'000'000ULL,
        "exhaustive strategy search; returns (max_winning_configs, colors)");

    m.def(
        "validate",
        [](const std::string& spec) { return validate_problem(load(spec)); },
        py::arg("problem"), "non-fatal validation findings");
}

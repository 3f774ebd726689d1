// Command-line front end: entropy-cone linear programs for secret sharing
// ratios and guessing numbers, certificate verification, combinatorial
// bounds and LP export. All state lives in files; exact rationals are
// printed with a display-only decimal next to them.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "entlp/certificate.hpp"
#include "entlp/problem_io.hpp"

using namespace entlp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;   // infeasible or invalid input
constexpr int kExitResource = 2;  // pivot or enumeration guard

struct Table1Reference {
    const char* prior;           // the earlier AK-based bound
    const char* with_symmetry;   // reference bound with symmetry constraints
    const char* without;         // reference bound without them
};

const std::map<std::string, Table1Reference>& table1()
{
    static const std::map<std::string, Table1Reference> refs = {
        {"A", {"9/8", "57/50", "135/119"}},      {"Astar", {"33/29", "52/45", "33/29"}},
        {"F", {"9/8", "17/15", "26/23"}},        {"Fstar", {"42/37", "8/7", "42/37"}},
        {"Fhat", {"42/37", "23/20", "42/37"}},   {"Q", {"9/8", "17/15", "17/15"}},
        {"Qstar", {"33/29", "8/7", "33/29"}},
    };
    return refs;
}

std::string value_line(const char* label, const Rational& value)
{
    return std::string(label) + " " + rational_to_string(value) + " (" + decimal_string(value) +
           ")";
}

void print_warnings(const Problem& problem)
{
    for (const auto& issue : validate_problem(problem))
        std::cerr << "warning: " << issue << "\n";
    const VariableUniverse& universe = problem.kind == Problem::Kind::Guessing
                                           ? problem.guess.universe
                                           : problem.ratio.universe;
    if (universe.size() > 20)
        std::cerr << "warning: " << universe.size()
                  << " variables; in-process solving will be very large, consider export-lp\n";
}

const SightGraph& require_graph(const Problem& problem)
{
    if (problem.kind != Problem::Kind::Guessing)
        throw Error("this command needs a guessing problem");
    return problem.guess.graph;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"entropy-cone linear programming toolkit"};
    app.require_subcommand(1);

    std::string problem_spec, cert_path, out_path;
    bool no_symmetry = false, no_copies = false;
    long pivot_budget = 4'000'000;
    int colors = 2;
    std::uint64_t guard = 100'000'000;

    auto add_problem_flags = [&](CLI::App* cmd, bool with_lp_flags) {
        cmd->add_option("problem", problem_spec, "problem file or catalog:NAME")->required();
        if (with_lp_flags) {
            cmd->add_flag("--no-symmetry", no_symmetry, "drop the symmetry equalities");
            cmd->add_flag("--no-copies", no_copies, "drop the copy-lemma blocks");
            cmd->add_option("--pivot-budget", pivot_budget, "simplex pivot guard");
        }
    };

    CLI::App* ratio = app.add_subcommand("ratio", "secret-sharing information ratio lower bound");
    add_problem_flags(ratio, true);
    CLI::App* guess = app.add_subcommand("guess-bound", "guessing number upper bound");
    add_problem_flags(guess, true);
    CLI::App* verify_cmd = app.add_subcommand("verify-cert", "check a dual certificate");
    add_problem_flags(verify_cmd, false);
    verify_cmd->add_option("certificate", cert_path, "certificate file")->required();
    CLI::App* export_cmd = app.add_subcommand("export-lp", "write the LP interchange file");
    add_problem_flags(export_cmd, true);
    export_cmd->add_option("out", out_path, "output path")->required();
    CLI::App* brute = app.add_subcommand("brute-gn", "exhaustive strategy search");
    add_problem_flags(brute, false);
    brute->add_option("--colors", colors, "size of the colour alphabet")->required();
    brute->add_option("--guard", guard, "strategy enumeration guard");
    CLI::App* cpf_cmd = app.add_subcommand("cpf", "fractional clique cover number");
    add_problem_flags(cpf_cmd, false);
    CLI::App* cp_cmd = app.add_subcommand("cp", "clique cover number");
    add_problem_flags(cp_cmd, false);
    CLI::App* alpha_cmd = app.add_subcommand("alpha", "independence number");
    add_problem_flags(alpha_cmd, false);
    CLI::App* catalog_cmd = app.add_subcommand("catalog", "catalog access");
    catalog_cmd->add_subcommand("list", "list catalog entries");

    CLI11_PARSE(app, argc, argv);

    try {
        if (catalog_cmd->parsed()) {
            for (const auto& name : catalog_names()) {
                Problem problem = load_problem("catalog:" + name);
                std::cout << name << "  "
                          << (problem.kind == Problem::Kind::Guessing ? "guessing"
                                                                      : "secret-sharing")
                          << "\n";
            }
            return kExitOk;
        }

        Problem problem = load_problem(problem_spec);
        print_warnings(problem);
        GuessModelOptions guess_options{!no_symmetry, !no_copies};
        RatioModelOptions ratio_options{!no_symmetry, !no_copies};
        SolveOptions solve_options{pivot_budget};

        if (ratio->parsed()) {
            if (problem.kind != Problem::Kind::SecretSharing)
                throw Error("ratio needs a secret-sharing problem");
            std::cout << "problem " << problem.name << "\n";
            Rational value = ratio_lower_bound(problem.ratio, ratio_options, solve_options);
            std::cout << value_line("optimum", value) << "\n";
            if (auto it = table1().find(problem.name); it != table1().end()) {
                std::cout << "reference: prior AK-based bound " << it->second.prior
                          << ", with symmetries " << it->second.with_symmetry
                          << ", without symmetries " << it->second.without << "\n";
            }
        } else if (guess->parsed()) {
            if (problem.kind != Problem::Kind::Guessing)
                throw Error("guess-bound needs a guessing problem");
            std::cout << "problem " << problem.name << "\n";
            Rational value = guessing_upper_bound(problem.guess, guess_options, solve_options);
            std::cout << value_line("optimum", value) << "\n";
        } else if (verify_cmd->parsed()) {
            if (problem.kind != Problem::Kind::Guessing)
                throw Error("verify-cert supports guessing certificates");
            std::ifstream in(cert_path);
            if (!in)
                throw Error("cannot open certificate '" + cert_path + "'");
            std::ostringstream buffer;
            buffer << in.rdbuf();
            auto rows = parse_certificate(buffer.str(), problem.guess.universe);
            Rational bound = verify(rows, problem.guess);
            std::cout << "VERIFIED bound " << rational_to_string(bound) << " ("
                      << decimal_string(bound) << "), " << rows.size() << " rows\n";
        } else if (export_cmd->parsed()) {
            LPModel model = problem.kind == Problem::Kind::Guessing
                                ? build_guess_model(problem.guess, guess_options)
                                : build_ratio_model(problem.ratio, ratio_options);
            std::ofstream out(out_path);
            if (!out)
                throw Error("cannot write '" + out_path + "'");
            out << export_lp(model);
            std::cout << "wrote " << out_path << " (" << model.rows.size() << " rows, "
                      << model.columns.size() << " columns)\n";
        } else if (brute->parsed()) {
            BruteForceResult result = brute_force_guessing_number(require_graph(problem), colors,
                                                                  guard);
            std::cout << "max-winning-configs " << result.max_winning_configs << " (s="
                      << result.colors << ")\n";
            std::uint64_t power = 1;
            int gn = 0;
            while (power < result.max_winning_configs) {
                power *= static_cast<std::uint64_t>(result.colors);
                ++gn;
            }
            if (power == result.max_winning_configs)
                std::cout << "gn = log_" << result.colors << " " << result.max_winning_configs
                          << " = " << gn << "\n";
            else
                std::cout << "gn = log_" << result.colors << " " << result.max_winning_configs
                          << " (not an integer)\n";
        } else if (cpf_cmd->parsed()) {
            std::cout << value_line("cpf", fractional_clique_cover_number(require_graph(problem)))
                      << "\n";
        } else if (cp_cmd->parsed()) {
            std::cout << "cp " << clique_cover_number(require_graph(problem)) << "\n";
        } else if (alpha_cmd->parsed()) {
            std::cout << "alpha " << independence_number(require_graph(problem)) << "\n";
        }
        return kExitOk;
    } catch (const ResourceGuardError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return kExitResource;
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}

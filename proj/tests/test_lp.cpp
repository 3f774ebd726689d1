#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "entlp/lp.hpp"
#include "entlp/problem_io.hpp"

using namespace entlp;

namespace {

LPModel tiny_model(std::vector<Constraint> rows, LinearExpression objective, Sense sense,
                   std::vector<std::string> aux = {})
{
    VariableUniverse u = VariableUniverse::make({"X1", "X2", "X3"});
    return assemble(u, {rows}, std::move(objective), sense, std::move(aux));
}

Constraint row(LinearExpression expr, Relation relation, Rational rhs, Tag tag = Tag::Problem)
{
    return {std::move(expr), relation, std::move(rhs), tag};
}

LinearExpression coord(VarSet subset, int coeff = 1)
{
    LinearExpression out;
    out.add_coord(subset, coeff);
    return out;
}

} // namespace

TEST_CASE("trivial optima, unboundedness and infeasibility")
{
    // max x1 subject to x1 <= 1
    LPModel bounded = tiny_model({row(coord(0b1), Relation::LessEqual, 1)}, coord(0b1),
                                 Sense::Maximize);
    LPSolution solution = solve(bounded);
    REQUIRE(solution.status == SolveStatus::Optimal);
    CHECK(solution.value == 1);
    CHECK(solution.primal[bounded.column_index(coord_key(0b1))] == 1);

    // an empty constraint list leaves the objective unconstrained
    LPModel free = tiny_model({}, coord(0b1), Sense::Maximize);
    CHECK(solve(free).status == SolveStatus::Unbounded);

    LPModel conflicted = tiny_model({row(coord(0b1), Relation::LessEqual, 0),
                                     row(coord(0b1), Relation::GreaterEqual, 1)},
                                    coord(0b1), Sense::Maximize);
    CHECK(solve(conflicted).status == SolveStatus::Infeasible);
}

TEST_CASE("solutions satisfy rows exactly and duals reproduce the value")
{
    // a small degenerate-ish program with an equality chain the presolve eats
    LinearExpression alias;  // h_1 = h_2
    alias.add_coord(0b01, 1);
    alias.add_coord(0b10, -1);
    LinearExpression cap;  // h_2 + h_3 <= 7/2
    cap.add_coord(0b010, 1);
    cap.add_coord(0b100, 1);
    LinearExpression balance;  // h_3 >= 1/2 h_1
    balance.add_coord(0b100, 1);
    balance.add_coord(0b001, Rational(-1, 2));

    LPModel model = tiny_model({row(alias, Relation::Equal, 0, Tag::Symmetry),
                                row(cap, Relation::LessEqual, Rational(7, 2)),
                                row(balance, Relation::GreaterEqual, 0)},
                               coord(0b001), Sense::Maximize);
    LPSolution solution = solve(model);
    REQUIRE(solution.status == SolveStatus::Optimal);
    CHECK(solution.value == Rational(7, 3));

    auto cert = dual_to_certificate(model, solution);
    CHECK(verify_aggregate(cert, model.objective, Sense::Maximize) == solution.value);
}

TEST_CASE("minimize-sense duals verify through the aggregate too")
{
    // min x subject to x >= h_1, x >= h_2, h_1 + h_2 = 3
    LinearExpression e1, e2, sum;
    e1.add_term(aux_key(0), 1);
    e1.add_coord(0b01, -1);
    e2.add_term(aux_key(0), 1);
    e2.add_coord(0b10, -1);
    sum.add_coord(0b01, 1);
    sum.add_coord(0b10, 1);
    LinearExpression x;
    x.add_term(aux_key(0), 1);

    LPModel model = tiny_model({row(e1, Relation::GreaterEqual, 0), row(e2, Relation::GreaterEqual, 0),
                                row(sum, Relation::Equal, 3)},
                               x, Sense::Minimize, {"x"});
    LPSolution solution = solve(model);
    REQUIRE(solution.status == SolveStatus::Optimal);
    CHECK(solution.value == Rational(3, 2));
    auto cert = dual_to_certificate(model, solution);
    CHECK(verify_aggregate(cert, model.objective, Sense::Minimize) == solution.value);
}

TEST_CASE("assemble deduplicates identical rows and restricts columns")
{
    std::vector<Constraint> rows = {row(coord(0b1), Relation::LessEqual, 1),
                                    row(coord(0b1), Relation::LessEqual, 1)};
    LPModel model = tiny_model(rows, coord(0b1), Sense::Maximize);
    CHECK(model.rows.size() == 1);
    CHECK(model.columns.size() == 1);

    LPModel wider = tiny_model({row(coord(0b1), Relation::LessEqual, 1),
                                row(coord(0b110), Relation::LessEqual, 2)},
                               coord(0b1), Sense::Maximize);
    CHECK(wider.columns.size() == 2);
}

TEST_CASE("export renders spec-format rows deterministically")
{
    VariableUniverse u = VariableUniverse::make({"X1", "X2", "X3", "X4", "X5"});
    LinearExpression submod;
    submod.add_coord(0b00001, 1);
    submod.add_coord(0b00010, 1);
    submod.add_coord(0b00011, -1);
    LPModel model = assemble(u, {{row(submod, Relation::GreaterEqual, 0)}}, coord(0b11111),
                             Sense::Maximize);
    std::string text = export_lp(model);
    CHECK(text.find("Maximize\n") != std::string::npos);
    CHECK(text.find("obj: + 1 h_1_2_3_4_5\n") != std::string::npos);
    CHECK(text.find("c1: + 1 h_1 + 1 h_2 - 1 h_1_2 >= 0\n") != std::string::npos);
    CHECK(text.find("h_1 free\n") != std::string::npos);
    CHECK(text.rfind("End\n") == text.size() - 4);
    CHECK(export_lp(model) == text);
}

TEST_CASE("export scales non-decimal rationals to integers with a comment")
{
    LinearExpression expr;
    expr.add_coord(0b1, Rational(1, 69));
    expr.add_coord(0b10, -1);
    LPModel model = tiny_model({row(expr, Relation::GreaterEqual, 0)}, coord(0b1),
                               Sense::Maximize);
    std::string text = export_lp(model);
    CHECK(text.find("\\ c1 scaled by 69 from: + 1/69 h_1 - 1 h_2 >= 0\n") != std::string::npos);
    CHECK(text.find("c1: + 1 h_1 - 69 h_2 >= 0\n") != std::string::npos);

    LinearExpression half;
    half.add_coord(0b1, Rational(1, 2));
    LPModel decimal = tiny_model({row(half, Relation::LessEqual, 1)}, coord(0b1), Sense::Maximize);
    CHECK(export_lp(decimal).find("c1: + 0.5 h_1 <= 1\n") != std::string::npos);
}

TEST_CASE("relabeling base variables preserves the optimum")
{
    GuessProblem c5 = catalog_graph("C5");
    LPModel model = build_guess_model(c5, {.use_symmetry = false, .use_copies = false});
    Rational value = solve(model).value;

    // rotate the cycle labels: an isomorphic graph must give the same value
    GuessProblem rotated = c5;
    rotated.graph = SightGraph(5);
    for (const auto& [a, b] : c5.graph.undirected_edges())
        rotated.graph.add_undirected((a + 2) % 5, (b + 2) % 5);
    LPModel rotated_model = build_guess_model(rotated, {.use_symmetry = false, .use_copies = false});
    CHECK(solve(rotated_model).value == value);
}

TEST_CASE("dual round trips hold on random elemental programs")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> subset(1, 15);
    VariableUniverse u = VariableUniverse::make({"X1", "X2", "X3", "X4"});
    auto elementals = elemental_inequalities(0b1111);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Constraint> extra;
        LinearExpression cap;
        cap.add_coord(0b1111, 1);
        extra.push_back(row(cap, Relation::LessEqual, 1 + trial));
        LinearExpression objective = coord(static_cast<VarSet>(subset(rng)));
        LPModel model = assemble(u, {extra, elementals}, objective, Sense::Maximize);
        LPSolution solution = solve(model);
        REQUIRE(solution.status == SolveStatus::Optimal);
        auto cert = dual_to_certificate(model, solution);
        CHECK(verify_aggregate(cert, model.objective, Sense::Maximize) == solution.value);
    }
}

TEST_CASE("the presolve-free path reaches the same optimum")
{
    GuessProblem c5 = catalog_graph("C5");
    LPModel model = build_guess_model(c5, {.use_symmetry = true, .use_copies = false});
    LPSolution raw = solve(model, {.presolve = false});
    REQUIRE(raw.status == SolveStatus::Optimal);
    CHECK(raw.value == Rational(5, 2));
    auto cert = dual_to_certificate(model, raw);
    CHECK(verify_aggregate(cert, model.objective, Sense::Maximize) == raw.value);
}

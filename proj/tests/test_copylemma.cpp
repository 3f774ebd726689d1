#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "entlp/copylemma.hpp"
#include "entlp/problem_io.hpp"

using namespace entlp;

namespace {

LinearExpression expr_of(std::initializer_list<std::pair<VarSet, int>> terms)
{
    LinearExpression out;
    for (const auto& [subset, coeff] : terms)
        out.add_coord(subset, coeff);
    return out;
}

} // namespace

TEST_CASE("the smallest copy step emits the lemma equalities verbatim")
{
    VariableUniverse u = VariableUniverse::make({"X1", "X2"});
    CopyStep step;
    step.z_vars = 0b10;
    step.x_vars = 0b01;
    step.new_names = {"X2'"};
    step.step_id = 0;

    auto result = apply_copy(u, step, 0b11);
    REQUIRE(result.new_indices == std::vector<int>{2});
    REQUIRE(result.constraints.size() == 3);

    // h_{2'} = h_2 and h_{12'} = h_{12}
    CHECK(result.constraints[0].expr == expr_of({{0b100, 1}, {0b010, -1}}));
    CHECK(result.constraints[1].expr == expr_of({{0b101, 1}, {0b011, -1}}));
    CHECK(result.constraints[0].tag == Tag::CopyMatch);
    // I(2' : 2 | 1) = 0 expanded over the block universe
    CHECK(result.constraints[2].expr ==
          expr_of({{0b101, 1}, {0b011, 1}, {0b111, -1}, {0b001, -1}}));
    CHECK(result.constraints[2].tag == Tag::CopyIndep);
    for (const auto& row : result.constraints) {
        CHECK(row.relation == Relation::Equal);
        CHECK(row.step == 0);
    }
}

TEST_CASE("matching equality counts follow the closed form")
{
    // |X| = 7, |Z| = 2 gives 2^9 - 2^7 = 384 matching equalities plus the
    // independence one
    std::vector<std::string> names;
    for (int i = 1; i <= 9; ++i)
        names.push_back("X" + std::to_string(i));
    VariableUniverse u = VariableUniverse::make(names);
    CopyStep step;
    step.z_vars = 0b000000011;
    step.x_vars = 0b111111100;
    step.new_names = {"X1'", "X2'"};
    auto result = apply_copy(u, step, u.base_mask());
    CHECK(result.constraints.size() == 384 + 1);
}

TEST_CASE("substituting copies back to originals cancels every matching row")
{
    GuessProblem rl = catalog_graph("RL");
    BlockExpansion expansion = collect_blocks(rl.universe, rl.blocks);
    int matches = 0;
    for (const auto& row : expansion.constraints) {
        if (row.tag != Tag::CopyMatch)
            continue;
        ++matches;
        REQUIRE(row.expr.term_count() == 2);
        // swap copy variables for their sources; the two terms must merge
        LinearExpression substituted;
        for (const auto& [key, coeff] : row.expr.terms()) {
            VarSet subset = key_subset(key);
            VarSet back = 0;
            for (int v = 0; v < rl.universe.size(); ++v)
                if (subset & bit(v))
                    back |= bit(rl.universe.is_copy(v) ? rl.universe.copy_source(v) : v);
            substituted.add_coord(back, coeff);
        }
        CHECK(substituted.is_zero());
        // every matching row mentions a copy variable
        bool mentions_copy = false;
        for (const auto& [key, coeff] : row.expr.terms())
            if (key_subset(key) & ~rl.universe.base_mask())
                mentions_copy = true;
        CHECK(mentions_copy);
    }
    CHECK(matches > 0);
}

TEST_CASE("recipe text parses into the canonical (Z, X) form")
{
    // the R-minus step in the W-sugar form, against ten base variables
    std::vector<std::string> names;
    for (int i = 1; i <= 10; ++i)
        names.push_back("X" + std::to_string(i));
    VariableUniverse u = VariableUniverse::make(names);

    CopyStep step = parse_copy_recipe("X2' be a X3-copy of X2", u, u.base_mask(), 0, 0);
    CHECK(step.z_vars == bit(1));
    CHECK(step.x_vars == (u.base_mask() & ~bit(1) & ~bit(2)));

    CopyStep wide = parse_copy_recipe(
        "(X4'',X5'') be a X10-copy of (X4,X5) over X1,X2,X3,X6,X7,X8,X9", u, u.base_mask(), 1, 1);
    CHECK(wide.z_vars == (bit(3) | bit(4)));
    CHECK(wide.x_vars == (bit(0) | bit(1) | bit(2) | bit(5) | bit(6) | bit(7) | bit(8)));
    CHECK(wide.new_names == std::vector<std::string>{"X4''", "X5''"});

    // a plain copy takes everything else as the conditioning set
    std::vector<std::string> s_names;
    for (int i = 0; i <= 7; ++i)
        s_names.push_back("S" + std::to_string(i));
    VariableUniverse s = VariableUniverse::make(s_names);
    CopyStep plain = parse_copy_recipe("(S0',S3',S4',S7') as a copy of (S0,S3,S4,S7)", s,
                                       s.base_mask(), 0, 0);
    CHECK(plain.z_vars == (bit(0) | bit(3) | bit(4) | bit(7)));
    CHECK(plain.x_vars == (bit(1) | bit(2) | bit(5) | bit(6)));

    CHECK_THROWS_AS(
        parse_copy_recipe("(S1') be a copy of (S1) over S1,S2", s, s.base_mask(), 0, 0), Error);
    CHECK_THROWS_AS(parse_copy_recipe("S9' be a copy of S9", s, s.base_mask(), 0, 0), Error);
}

TEST_CASE("block scopes for the catalog problems")
{
    GuessProblem rminus = catalog_graph("Rminus");
    auto scopes = block_scopes(rminus.universe, rminus.blocks);
    REQUIRE(scopes.size() == 3);
    CHECK(popcount(scopes[0]) == 11);
    CHECK(popcount(scopes[1]) == 13);
    CHECK(popcount(scopes[2]) == 13);

    GuessProblem rl = catalog_graph("RL");
    auto rl_scopes = block_scopes(rl.universe, rl.blocks);
    REQUIRE(rl_scopes.size() == 2);
    CHECK(popcount(rl_scopes[0]) == 14);
    CHECK(popcount(rl_scopes[1]) == 13);

    // no blocks: the single scope is the base set
    GuessProblem c5 = catalog_graph("C5");
    auto base_scopes = block_scopes(c5.universe, c5.blocks);
    REQUIRE(base_scopes.size() == 1);
    CHECK(base_scopes[0] == c5.universe.base_mask());
}

TEST_CASE("copy equality counts per step")
{
    // every applied step emits 2^{|X u Z|} - 2^{|X|} matching rows plus one
    GuessProblem rminus = catalog_graph("Rminus");
    BlockExpansion expansion = collect_blocks(rminus.universe, rminus.blocks);
    std::map<int, int> match_count, indep_count;
    for (const auto& row : expansion.constraints) {
        if (row.tag == Tag::CopyMatch)
            ++match_count[row.step];
        else if (row.tag == Tag::CopyIndep)
            ++indep_count[row.step];
    }
    std::map<int, int> expected;
    for (const auto& block : rminus.blocks)
        for (const auto& step : block.steps)
            expected[step.step_id] =
                (1 << popcount(step.x_vars | step.z_vars)) - (1 << popcount(step.x_vars));
    CHECK(match_count == expected);
    for (const auto& [step, count] : indep_count)
        CHECK(count == 1);
    CHECK(indep_count.size() == 5);
    // the first block's step has |X| = 8, |Z| = 1
    CHECK(match_count[0] == 256);
}

TEST_CASE("a W list that repeats the copied variables is ignored when over is explicit")
{
    std::vector<std::string> s_names;
    for (int i = 0; i <= 7; ++i)
        s_names.push_back("S" + std::to_string(i));
    VariableUniverse s = VariableUniverse::make(s_names);
    CopyStep step = parse_copy_recipe(
        "(S0',S2',S4',S6') be a (S0,S2,S4,S6)-copy of (S0,S2,S4,S6) over (S1,S3,S5,S7)", s,
        s.base_mask(), 0, 0);
    CHECK(step.z_vars == (bit(0) | bit(2) | bit(4) | bit(6)));
    CHECK(step.x_vars == (bit(1) | bit(3) | bit(5) | bit(7)));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "entlp/certificate.hpp"
#include "entlp/problem_io.hpp"

using namespace entlp;

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

const std::string kCertPath = std::string(ENTLP_DATA_DIR) + "/certificates/rminus_1847_276.cert";

} // namespace

TEST_CASE("token resolution against the R-minus universe")
{
    GuessProblem rminus = catalog_graph("Rminus");
    CHECK(resolve_token(rminus.universe, "a") == 0);
    CHECK(resolve_token(rminus.universe, "j") == 9);
    // b'0 is the step-0 copy of X2
    int b0 = resolve_token(rminus.universe, "b'0");
    CHECK(rminus.universe.is_copy(b0));
    CHECK(rminus.universe.copy_source(b0) == 1);
    CHECK(rminus.universe.copy_step(b0) == 0);
    for (const char* token : {"d'1", "e'1", "g'2", "f'3", "g'3", "h'4"})
        CHECK_NOTHROW(resolve_token(rminus.universe, token));
    CHECK_THROWS_AS(resolve_token(rminus.universe, "x"), CertificateError);
    CHECK_THROWS_AS(resolve_token(rminus.universe, "b'7"), CertificateError);
}

TEST_CASE("parsing single rows of the certificate grammar")
{
    GuessProblem rminus = catalog_graph("Rminus");
    auto rows = parse_certificate(
        "H{a.c.f.h.j} + H{b'0.c.f.h.j} - H{a.b'0.c.f.h.j} - H{c.f.h.j} >= 0\n"
        "with coefficient  -1/69\n"
        "\n"
        "H{a} <= 1 \n"
        "with coefficient 191/138\n"
        "\n"
        "H{b.d} -H{b'0.d}  = 0\n"
        "with coefficient 3\n",
        rminus.universe);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].expr.term_count() == 4);
    CHECK(rows[0].relation == Relation::GreaterEqual);
    CHECK(rows[0].multiplier == Rational(-1, 69));
    CHECK(rows[1].relation == Relation::LessEqual);
    CHECK(rows[1].rhs == 1);
    CHECK(rows[1].multiplier == Rational(191, 138));
    CHECK(rows[2].expr.term_count() == 2);

    CHECK_THROWS_AS(parse_certificate("H{x} >= 0\nwith coefficient 1\n", rminus.universe),
                    CertificateError);
    CHECK_THROWS_AS(parse_certificate("H{a} >= 0\n", rminus.universe), CertificateError);
    CHECK_THROWS_AS(parse_certificate("H{a} >= 0\nwith coefficient nonsense\n", rminus.universe),
                    CertificateError);
}

TEST_CASE("classification of the spec's example rows")
{
    GuessProblem rminus = catalog_graph("Rminus");
    auto classify_text = [&](const std::string& row_text) {
        auto rows = parse_certificate(row_text + "\nwith coefficient -1\n", rminus.universe);
        REQUIRE(rows.size() == 1);
        return classify_row(rows[0], rminus);
    };

    // sigma maps {1} to {8}
    CHECK(classify_text("H{a} - H{h} = 0").kind == RowKind::Symmetry);
    // N(6) = {1,5,7,8,9} inside S
    RowClass dep = classify_text("H{a.e.g.h.i} - H{a.e.f.g.h.i} >= 0");
    CHECK(dep.kind == RowKind::Dependence);
    CHECK(dep.vertex == 5);
    // copy-match of step 0 with S = {2,4}
    RowClass match = classify_text("H{b.d} - H{b'0.d} = 0");
    CHECK(match.kind == RowKind::CopyMatch);
    CHECK(match.step == 0);
    // elemental I(a : b'0 | c,f,h,j) over the first block scope
    RowClass elem =
        classify_text("H{a.c.f.h.j} + H{b'0.c.f.h.j} - H{a.b'0.c.f.h.j} - H{c.f.h.j} >= 0");
    CHECK(elem.kind == RowKind::Elemental);
    CHECK(popcount(elem.scope) == 11);
    // the block-1 independence row, exactly as printed
    RowClass indep = classify_text(
        "H{a.b'0.d.e.f.g.h.i.j} + H{a.b.c.d.e.f.g.h.i.j} - H{a.b.b'0.c.d.e.f.g.h.i.j} - "
        "H{a.d.e.f.g.h.i.j} = 0");
    CHECK(indep.kind == RowKind::CopyIndep);
    CHECK(indep.step == 0);

    // a vertex bound must have rhs one
    auto bound_rows = parse_certificate("H{f} <= 1\nwith coefficient 361/138\n", rminus.universe);
    CHECK(classify_row(bound_rows[0], rminus).kind == RowKind::VertexBound);

    // rejection names the nearest miss
    auto bad = parse_certificate("H{a} - H{b} = 0\nwith coefficient 1\n", rminus.universe);
    CHECK_THROWS_WITH_AS(classify_row(bad[0], rminus), doctest::Contains("no group element"),
                         CertificateError);
}

TEST_CASE("K2 hand certificate: two rows prove the bound 1")
{
    GuessProblem k2 = catalog_graph("K2");
    // h_1 - h_12 >= 0 (dependence for vertex 2), multiplier -1
    LinearExpression dep;
    dep.add_coord(0b01, 1);
    dep.add_coord(0b11, -1);
    // h_1 <= 1, multiplier 1
    LinearExpression cap;
    cap.add_coord(0b01, 1);
    std::vector<CertRow> rows = {{dep, Relation::GreaterEqual, 0, -1},
                                 {cap, Relation::LessEqual, 1, 1}};
    CHECK(verify(rows, k2) == 1);

    // flipping the dependence multiplier sign must be rejected
    rows[0].multiplier = 1;
    CHECK_THROWS_AS(verify(rows, k2), CertificateError);
}

TEST_CASE("the shipped certificate of 1847/276 verifies in full")
{
    GuessProblem rminus = catalog_graph("Rminus");
    auto rows = parse_certificate(read_file(kCertPath), rminus.universe);
    REQUIRE(rows.size() == 1920);

    Rational bound = verify(rows, rminus);
    CHECK(bound == Rational(1847, 276));

    // the three <=-row multipliers sum to the bound themselves
    Rational cap_sum = 0;
    for (const auto& row : rows)
        if (row.relation == Relation::LessEqual)
            cap_sum += row.multiplier;
    CHECK(cap_sum == Rational(1847, 276));

    // row order does not matter
    std::vector<CertRow> shuffled = rows;
    std::mt19937 rng(99);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(verify(shuffled, rminus) == Rational(1847, 276));
}

TEST_CASE("single-row tampering breaks the certificate")
{
    GuessProblem rminus = catalog_graph("Rminus");
    auto rows = parse_certificate(read_file(kCertPath), rminus.universe);
    std::mt19937 rng(4242);
    std::uniform_int_distribution<std::size_t> pick_row(0, rows.size() - 1);

    for (int trial = 0; trial < 20; ++trial) {
        std::vector<CertRow> mutated = rows;
        std::size_t target = pick_row(rng);
        if (trial % 2 == 0) {
            mutated[target].multiplier *= 2;
        } else {
            auto terms = mutated[target].expr.terms();
            std::uniform_int_distribution<std::size_t> pick_term(0, terms.size() - 1);
            auto [key, coeff] = terms[pick_term(rng)];
            mutated[target].expr.add_term(key, coeff * -2);  // flips one term's sign
        }
        CHECK_THROWS_AS(verify(mutated, rminus), CertificateError);
    }
}

TEST_CASE("solver duals for C5 round-trip through the guessing verifier")
{
    GuessProblem c5 = catalog_graph("C5");
    LPModel model = build_guess_model(c5, {.use_symmetry = false, .use_copies = false});
    LPSolution solution = solve(model);
    REQUIRE(solution.status == SolveStatus::Optimal);
    REQUIRE(solution.value == Rational(5, 2));
    auto cert = dual_to_certificate(model, solution);
    CHECK(verify(cert, c5) == Rational(5, 2));
}

#ifndef ENTLP_LP_HPP
#define ENTLP_LP_HPP

#include <string>
#include <vector>

#include "entlp/core.hpp"

namespace entlp {

enum class Sense { Maximize, Minimize };

// A fully assembled linear program over entropy coordinates plus optional
// auxiliary scalar variables (the epigraph variable of ratio programs).
// Column and row order are deterministic, so exports and extracted duals
// are reproducible.
struct LPModel {
    VariableUniverse universe;
    std::vector<ColumnKey> columns;      // ascending; coordinates then aux
    std::vector<std::string> aux_names;  // aux index -> display name
    std::vector<Constraint> rows;
    LinearExpression objective;
    Sense sense = Sense::Maximize;

    int column_index(ColumnKey key) const;  // -1 when absent
};

enum class SolveStatus { Optimal, Infeasible, Unbounded, Aborted };

struct LPSolution {
    SolveStatus status = SolveStatus::Aborted;
    Rational value;
    std::vector<Rational> primal;  // per model column; satisfies every row exactly
    std::vector<Rational> duals;   // per model row; reproduces value by weak duality
    std::string diagnostic;        // infeasibility / abort detail
    long pivots = 0;
};

// Concatenates constraint sets (provenance preserved), drops exactly
// identical duplicate rows, and restricts the column list to coordinates
// actually mentioned plus the objective's.
LPModel assemble(const VariableUniverse& universe,
                 const std::vector<std::vector<Constraint>>& constraint_sets,
                 LinearExpression objective, Sense sense,
                 std::vector<std::string> aux_names = {});

struct SolveOptions {
    long pivot_budget = 4'000'000;
    bool presolve = true;
};

// Exact rational optimum. Equality rows that reduce to variable aliases or
// fixings are substituted out first (the symmetry and copy equalities nearly
// always are), then the reduced program is handed to the simplex, oriented
// through its dual when that side has the smaller basis. The returned primal
// and duals are expressed against the original model rows and columns.
LPSolution solve(const LPModel& model, const SolveOptions& options = {});

// Deterministic text export in the common LP interchange dialect. Columns
// are named h_<tokens> (copy tokens like "2p0"); rows with non-integer
// coefficients are scaled to integers by the row denominator LCM, with the
// original row kept in a comment, unless they render exactly as terminating
// decimals.
std::string export_lp(const LPModel& model);

// One certificate row per nonzero dual multiplier.
struct CertRow {
    LinearExpression expr;
    Relation relation = Relation::GreaterEqual;
    Rational rhs;
    Rational multiplier;
};

std::vector<CertRow> dual_to_certificate(const LPModel& model, const LPSolution& solution);

// Checks sign admissibility of the multipliers against the sense, that the
// aggregate of multiplier * expression equals the objective functional
// exactly, and returns the proven bound (sum of multiplier * rhs): an upper
// bound for maximize problems, a lower bound for minimize ones.
Rational verify_aggregate(const std::vector<CertRow>& rows, const LinearExpression& objective,
                          Sense sense);

} // namespace entlp

#endif

#include "entlp/secret_sharing.hpp"

#include <algorithm>

namespace entlp {

AccessStructure AccessStructure::make(int participants, std::vector<VarSet> minimal_sets,
                                      bool allow_empty)
{
    if (participants < 1 || participants > 24)
        throw Error("participant count out of range");
    if (minimal_sets.empty() && !allow_empty)
        throw Error("an access structure needs at least one minimal authorized set");

    VarSet all = (VarSet{1} << participants) - 1;
    std::sort(minimal_sets.begin(), minimal_sets.end());
    minimal_sets.erase(std::unique(minimal_sets.begin(), minimal_sets.end()), minimal_sets.end());
    for (VarSet s : minimal_sets) {
        if (s == 0)
            throw Error("minimal authorized sets must be nonempty");
        if (s & ~all)
            throw Error("minimal authorized set names an unknown participant");
    }
    for (std::size_t i = 0; i < minimal_sets.size(); ++i)
        for (std::size_t j = 0; j < minimal_sets.size(); ++j)
            if (i != j && (minimal_sets[i] & minimal_sets[j]) == minimal_sets[i])
                throw Error("not an antichain: one minimal set contains another");

    AccessStructure out;
    out.n_ = participants;
    out.minimal_ = std::move(minimal_sets);
    return out;
}

bool AccessStructure::authorized(VarSet coalition) const
{
    for (VarSet s : minimal_)
        if ((coalition & s) == s)
            return true;
    return false;
}

bool AccessStructure::invariant_under(const Permutation& p) const
{
    if (p.domain_size() != n_)
        throw Error("permutation domain does not match the participant count");
    // a bijection preserves inclusion, so mapping the minimal family onto
    // itself is the same as preserving the authorized family
    std::vector<VarSet> image;
    image.reserve(minimal_.size());
    for (VarSet s : minimal_)
        image.push_back(p.apply(s));
    std::sort(image.begin(), image.end());
    return image == minimal_;
}

std::vector<Constraint> ss_constraints(const AccessStructure& structure)
{
    // participant i lives at universe index i, the secret at index 0
    int n = structure.participants();
    VarSet participants_mask = ((VarSet{1} << n) - 1);

    std::vector<Constraint> out;
    for (VarSet coalition = 1; coalition <= participants_mask; ++coalition) {
        VarSet shares = coalition << 1;  // shift into universe indexing
        LinearExpression expr;
        expr.add_coord(shares | bit(0), 1);
        expr.add_coord(shares, -1);
        if (!structure.authorized(coalition))
            expr.add_coord(bit(0), -1);
        out.push_back({std::move(expr), Relation::Equal, 0, Tag::Problem});
    }
    LinearExpression normalize;
    normalize.add_coord(bit(0), 1);
    out.push_back({std::move(normalize), Relation::Equal, 1, Tag::Problem});
    return out;
}

LPModel build_ratio_model(const RatioProblem& problem, const RatioModelOptions& options)
{
    const VariableUniverse& universe = problem.universe;
    int n = problem.structure.participants();

    std::vector<std::vector<Constraint>> sets;
    std::vector<Constraint> epigraph;
    for (int i = 1; i <= n; ++i) {
        LinearExpression expr;
        expr.add_term(aux_key(0), 1);
        expr.add_coord(bit(i), -1);
        epigraph.push_back({std::move(expr), Relation::GreaterEqual, 0, Tag::Bound});
    }
    sets.push_back(std::move(epigraph));
    sets.push_back(ss_constraints(problem.structure));
    if (options.use_symmetry)
        sets.push_back(symmetry_equalities(lift_fixing_zero(problem.group), universe));

    std::vector<CopyBlock> blocks = options.use_copies ? problem.blocks : std::vector<CopyBlock>{};
    BlockExpansion expansion = collect_blocks(universe, blocks);
    if (!expansion.constraints.empty())
        sets.push_back(std::move(expansion.constraints));
    for (VarSet scope : expansion.scopes)
        sets.push_back(elemental_inequalities(scope));

    LinearExpression objective;
    objective.add_term(aux_key(0), 1);
    return assemble(universe, sets, std::move(objective), Sense::Minimize, {"x"});
}

Rational ratio_lower_bound(const RatioProblem& problem, const RatioModelOptions& options,
                           const SolveOptions& solve_options)
{
    LPModel model = build_ratio_model(problem, options);
    LPSolution solution = solve(model, solve_options);
    switch (solution.status) {
    case SolveStatus::Optimal:
        return solution.value;
    case SolveStatus::Infeasible:
        throw InfeasibleError(solution.diagnostic);
    case SolveStatus::Unbounded:
        throw Error("ratio LP unbounded; the epigraph constraints are missing");
    case SolveStatus::Aborted:
        throw ResourceGuardError(solution.diagnostic);
    }
    throw Error("unreachable");
}

} // namespace entlp

#ifndef ENTLP_SECRET_SHARING_HPP
#define ENTLP_SECRET_SHARING_HPP

#include <string>
#include <vector>

#include "entlp/copylemma.hpp"
#include "entlp/core.hpp"
#include "entlp/lp.hpp"
#include "entlp/perm.hpp"

namespace entlp {

// A monotone access structure given by its minimal authorized coalitions
// (an antichain over participants 1..n, stored 0-based internally).
class AccessStructure {
public:
    static AccessStructure make(int participants, std::vector<VarSet> minimal_sets,
                                bool allow_empty = false);

    int participants() const { return n_; }
    const std::vector<VarSet>& minimal_sets() const { return minimal_; }

    bool authorized(VarSet coalition) const;

    // true iff the permutation maps the authorized family onto itself
    bool invariant_under(const Permutation& p) const;

    bool operator==(const AccessStructure&) const = default;

private:
    int n_ = 0;
    std::vector<VarSet> minimal_;  // sorted ascending
};

struct RatioProblem {
    std::string name;
    AccessStructure structure;
    PermutationGroup group;     // acts on the secret and shares, fixing the secret
    VariableUniverse universe;  // S0, S1..Sn plus copy variables
    std::vector<CopyBlock> blocks;
};

// The defining equalities of a secret sharing scheme, over the universe
// S0..Sn with the secret at index 0: for every nonempty coalition J,
// authorized ones give h_{J u 0} = h_J and forbidden ones
// h_{J u 0} = h_J + h_0, plus the normalization h_0 = 1.
std::vector<Constraint> ss_constraints(const AccessStructure& structure);

struct RatioModelOptions {
    bool use_symmetry = true;
    bool use_copies = true;
};

// The lower-bound LP of the secret sharing method: minimize the epigraph
// variable x subject to x >= h_{S_i} for every share, the scheme equalities,
// symmetry and copy equalities, and per-scope elemental inequalities.
LPModel build_ratio_model(const RatioProblem& problem, const RatioModelOptions& options = {});

// Exact LP optimum, a lower bound on the information ratio. Throws
// InfeasibleError with a family-naming diagnostic when the constraints
// conflict (the symmetry-versus-structure sanity check).
Rational ratio_lower_bound(const RatioProblem& problem, const RatioModelOptions& options = {},
                           const SolveOptions& solve_options = {});

} // namespace entlp

#endif

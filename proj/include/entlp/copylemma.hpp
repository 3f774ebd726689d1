#ifndef ENTLP_COPYLEMMA_HPP
#define ENTLP_COPYLEMMA_HPP

#include <string>
#include <vector>

#include "entlp/core.hpp"

namespace entlp {

// One application of the copy lemma: resample the variables Z against the
// shared conditioning set X, creating one fresh copy variable per member of
// Z. Later steps of the same block may reference copies made by earlier
// steps (both sets are over the block's current universe).
struct CopyStep {
    VarSet z_vars = 0;                   // the resampled variables
    VarSet x_vars = 0;                   // the conditioning set (disjoint from Z)
    std::vector<std::string> new_names;  // one per member of Z, ascending index order
    int block_id = 0;
    int step_id = 0;                     // global step index; names copy tokens
};

// A group of copy steps sharing one elemental-inequality scope. By default
// the scope is all base variables plus exactly the copies created in this
// block; an explicit override may widen or narrow it.
struct CopyBlock {
    std::vector<CopyStep> steps;
    std::vector<std::string> scope_override;  // variable names; empty = default
};

struct CopyStepResult {
    std::vector<int> new_indices;        // universe indices of the fresh copies
    std::vector<Constraint> constraints; // copy-match equalities then the one copy-indep
};

// Extends the universe with the step's copy variables and emits the
// equalities the lemma guarantees:
//   (a) h_{S with z -> z'} = h_S for every S in X u Z that meets Z
//       (2^|XuZ| - 2^|X| equalities, tagged copy-match);
//   (b) I(Z' : U \ X \ Z' | X) = 0 expanded over the block universe U,
//       tagged copy-indep.
// block_universe is the block's variable set before this step, including the
// base variables and this block's earlier copies.
CopyStepResult apply_copy(VariableUniverse& universe, const CopyStep& step, VarSet block_universe);

// Parses recipe text against the block's current universe:
//   "<new> be a [<W>-]copy of <Z> [over <V>]"
// ("as a" is accepted for "be a"). Z is the "of" list. X is V when "over" is
// present, otherwise everything in the current universe outside W and Z.
// Any overlap between the W list and Z is ignored. V must not meet Z.
CopyStep parse_copy_recipe(const std::string& text, const VariableUniverse& universe,
                           VarSet block_universe, int block_id, int step_id);

// The equalities of an already-applied step (the universe contains its
// copies). block_universe_before excludes the step's own copy variables.
std::vector<Constraint> copy_step_equalities(const VariableUniverse& universe,
                                             const CopyStep& step, VarSet block_universe_before);

struct BlockExpansion {
    std::vector<Constraint> constraints;  // all copy equalities, block by block
    std::vector<VarSet> scopes;           // one elemental scope per block
};

// Regenerates every block's equalities and scopes from a universe that
// already contains all copy variables. Blocks are independent: each starts
// from the base variables, so copies of different blocks never co-occur in
// any constraint coordinate.
BlockExpansion collect_blocks(const VariableUniverse& universe, const std::vector<CopyBlock>& blocks);

// Per-block elemental scope: all base variables plus the block's copies,
// unless the block overrides it explicitly.
std::vector<VarSet> block_scopes(const VariableUniverse& universe,
                                 const std::vector<CopyBlock>& blocks);

} // namespace entlp

#endif

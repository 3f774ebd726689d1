#include "entlp/copylemma.hpp"

#include <algorithm>

namespace entlp {

namespace {

// Maps z members of `subset` to their step copies, leaving the rest alone.
VarSet prime_subset(const VariableUniverse& universe, const CopyStep& step, VarSet subset)
{
    VarSet out = subset & ~step.z_vars;
    VarSet z_part = subset & step.z_vars;
    for (int v = 0; v < universe.size(); ++v) {
        if (!(z_part & bit(v)))
            continue;
        int copy = universe.find_copy(v, step.step_id);
        if (copy < 0)
            throw Error("copy variable missing for step " + std::to_string(step.step_id));
        out |= bit(copy);
    }
    return out;
}

std::vector<int> sorted_indices(VarSet mask)
{
    std::vector<int> out;
    for (int v = 0; v < 32; ++v)
        if (mask & bit(v))
            out.push_back(v);
    return out;
}

} // namespace

std::vector<Constraint> copy_step_equalities(const VariableUniverse& universe,
                                             const CopyStep& step, VarSet block_universe_before)
{
    VarSet primed_z = prime_subset(universe, step, step.z_vars) & ~step.z_vars;
    VarSet block_after = block_universe_before | primed_z;

    std::vector<Constraint> out;
    VarSet pool = step.x_vars | step.z_vars;

    // (a) matching entropies for every subset of X u Z that meets Z
    VarSet s = 0;
    while (true) {
        if (s & step.z_vars) {
            LinearExpression expr;
            expr.add_coord(prime_subset(universe, step, s), 1);
            expr.add_coord(s, -1);
            Constraint c{std::move(expr), Relation::Equal, 0, Tag::CopyMatch};
            c.step = step.step_id;
            out.push_back(std::move(c));
        }
        if (s == pool)
            break;
        s = (s - pool) & pool;
    }

    // (b) I(Z' : U \ X \ Z' | X) = 0 over the block universe U
    LinearExpression indep;
    indep.add_coord(step.x_vars | primed_z, 1);
    indep.add_coord(block_after & ~primed_z, 1);
    indep.add_coord(block_after, -1);
    indep.add_coord(step.x_vars, -1);
    Constraint c{std::move(indep), Relation::Equal, 0, Tag::CopyIndep};
    c.step = step.step_id;
    out.push_back(std::move(c));
    return out;
}

CopyStepResult apply_copy(VariableUniverse& universe, const CopyStep& step, VarSet block_universe)
{
    if (step.z_vars == 0)
        throw Error("copy step resamples nothing");
    if (step.z_vars & step.x_vars)
        throw Error("copy step: X and Z overlap");
    if ((step.z_vars | step.x_vars) & ~block_universe)
        throw Error("copy step references variables outside the block universe");
    std::vector<int> z_members = sorted_indices(step.z_vars);
    if (z_members.size() != step.new_names.size())
        throw Error("copy step: need exactly one new name per resampled variable");

    CopyStepResult result;
    for (std::size_t i = 0; i < z_members.size(); ++i)
        result.new_indices.push_back(universe.add_copy(step.new_names[i], z_members[i], step.step_id));

    result.constraints = copy_step_equalities(universe, step, block_universe);
    return result;
}

CopyStep parse_copy_recipe(const std::string& text, const VariableUniverse& universe,
                           VarSet block_universe, int block_id, int step_id)
{
    auto fail = [&](const std::string& why) -> Error {
        return Error("copy recipe '" + text + "': " + why);
    };

    auto split_names = [&](std::string list) {
        std::vector<std::string> names;
        std::string current;
        for (char c : list) {
            if (c == '(' || c == ')' || c == ',' || c == ' ' || c == '\t') {
                if (!current.empty())
                    names.push_back(std::move(current));
                current.clear();
            } else {
                current += c;
            }
        }
        if (!current.empty())
            names.push_back(std::move(current));
        return names;
    };

    std::size_t connector = text.find(" be a ");
    std::size_t connector_len = 6;
    if (connector == std::string::npos) {
        connector = text.find(" as a ");
        if (connector == std::string::npos)
            throw fail("expected 'be a' or 'as a'");
    }
    std::string head = text.substr(0, connector);
    std::string rest = text.substr(connector + connector_len);

    std::size_t copy_kw = rest.find("copy of");
    if (copy_kw == std::string::npos)
        throw fail("expected 'copy of'");
    std::string w_part = rest.substr(0, copy_kw);
    std::string tail = rest.substr(copy_kw + 7);

    // W list ends with '-' right before "copy"; plain "copy of" has none.
    std::vector<std::string> w_names;
    {
        std::size_t dash = w_part.rfind('-');
        if (dash != std::string::npos)
            w_names = split_names(w_part.substr(0, dash));
        else if (w_part.find_first_not_of(" \t") != std::string::npos)
            throw fail("unexpected text before 'copy of'");
    }

    std::string z_part = tail, v_part;
    if (std::size_t over = tail.find(" over "); over != std::string::npos) {
        z_part = tail.substr(0, over);
        v_part = tail.substr(over + 6);
    }

    std::vector<std::string> new_names = split_names(head);
    std::vector<std::string> z_names = split_names(z_part);
    std::vector<std::string> v_names = split_names(v_part);
    if (new_names.empty())
        throw fail("no new variable names");
    if (z_names.size() != new_names.size())
        throw fail("new-name list and copied list differ in length");

    auto resolve = [&](const std::vector<std::string>& names, const char* role) {
        VarSet mask = 0;
        for (const auto& n : names) {
            int idx;
            try {
                idx = universe.index_of(n);
            } catch (const Error&) {
                throw fail(std::string(role) + " list names unknown variable '" + n + "'");
            }
            if (!(block_universe & bit(idx)))
                throw fail(std::string(role) + " variable '" + n + "' is not in this block");
            mask |= bit(idx);
        }
        return mask;
    };

    CopyStep step;
    step.block_id = block_id;
    step.step_id = step_id;
    step.z_vars = resolve(z_names, "copied");

    if (!v_part.empty()) {
        step.x_vars = resolve(v_names, "over");
        if (step.x_vars & step.z_vars)
            throw fail("'over' list meets the copied list");
    } else {
        VarSet w = w_names.empty() ? 0 : resolve(w_names, "conditioning");
        step.x_vars = block_universe & ~w & ~step.z_vars;
    }

    // pair new names with copied variables positionally, then store them in
    // ascending index order of the copied variables
    std::vector<std::pair<int, std::string>> pairs;
    for (std::size_t i = 0; i < z_names.size(); ++i)
        pairs.emplace_back(universe.index_of(z_names[i]), new_names[i]);
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 1; i < pairs.size(); ++i)
        if (pairs[i].first == pairs[i - 1].first)
            throw fail("copied list repeats a variable");
    step.new_names.clear();
    for (auto& [idx, name] : pairs)
        step.new_names.push_back(std::move(name));
    return step;
}

std::vector<VarSet> block_scopes(const VariableUniverse& universe,
                                 const std::vector<CopyBlock>& blocks)
{
    std::vector<VarSet> scopes;
    for (const auto& block : blocks) {
        if (!block.scope_override.empty()) {
            VarSet scope = 0;
            for (const auto& name : block.scope_override)
                scope |= bit(universe.index_of(name));
            scopes.push_back(scope);
            continue;
        }
        VarSet scope = universe.base_mask();
        for (const auto& step : block.steps)
            for (const auto& name : step.new_names)
                scope |= bit(universe.index_of(name));
        scopes.push_back(scope);
    }
    if (blocks.empty())
        scopes.push_back(universe.base_mask());
    return scopes;
}

BlockExpansion collect_blocks(const VariableUniverse& universe, const std::vector<CopyBlock>& blocks)
{
    BlockExpansion out;
    for (const auto& block : blocks) {
        VarSet block_universe = universe.base_mask();
        for (const auto& step : block.steps) {
            auto rows = copy_step_equalities(universe, step, block_universe);
            for (int v : sorted_indices(step.z_vars)) {
                int copy = universe.find_copy(v, step.step_id);
                block_universe |= bit(copy);
            }
            for (auto& row : rows)
                out.constraints.push_back(std::move(row));
        }
    }
    out.scopes = block_scopes(universe, blocks);
    return out;
}

} // namespace entlp

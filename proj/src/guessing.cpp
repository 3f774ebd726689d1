#include "entlp/guessing.hpp"

#include <algorithm>
#include <map>

namespace entlp {

void SightGraph::add_undirected(int u, int v)
{
    if (u == v)
        throw Error("sight graphs are loopless");
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw Error("edge endpoint out of range");
    if (u > v)
        std::swap(u, v);
    auto edge = std::make_pair(u, v);
    auto it = std::lower_bound(undirected_.begin(), undirected_.end(), edge);
    if (it != undirected_.end() && *it == edge)
        return;
    undirected_.insert(it, edge);
}

void SightGraph::add_directed(int from, int to)
{
    if (from == to)
        throw Error("sight graphs are loopless");
    if (from < 0 || to < 0 || from >= n_ || to >= n_)
        throw Error("edge endpoint out of range");
    if (has_undirected(from, to))
        throw Error("edge already present as undirected");
    auto edge = std::make_pair(from, to);
    auto it = std::lower_bound(directed_.begin(), directed_.end(), edge);
    if (it != directed_.end() && *it == edge)
        return;
    directed_.insert(it, edge);
}

bool SightGraph::has_undirected(int u, int v) const
{
    if (u > v)
        std::swap(u, v);
    return std::binary_search(undirected_.begin(), undirected_.end(), std::make_pair(u, v));
}

bool SightGraph::has_directed(int from, int to) const
{
    return std::binary_search(directed_.begin(), directed_.end(), std::make_pair(from, to));
}

VarSet SightGraph::in_neighbors(int v) const
{
    VarSet out = 0;
    for (const auto& [a, b] : undirected_) {
        if (a == v)
            out |= bit(b);
        else if (b == v)
            out |= bit(a);
    }
    for (const auto& [from, to] : directed_)
        if (to == v)
            out |= bit(from);
    return out;
}

int SightGraph::degree(int v) const
{
    int d = 0;
    for (const auto& [a, b] : undirected_)
        if (a == v || b == v)
            ++d;
    return d;
}

bool SightGraph::invariant_under(const Permutation& p) const
{
    if (p.domain_size() != n_)
        throw Error("permutation domain does not match the vertex count");
    for (const auto& [a, b] : undirected_)
        if (!has_undirected(p.apply(a), p.apply(b)))
            return false;
    for (const auto& [from, to] : directed_)
        if (!has_directed(p.apply(from), p.apply(to)))
            return false;
    return true;
}

bool SightGraph::acyclic() const
{
    if (!undirected_.empty())
        return false;  // an undirected edge is a 2-cycle
    std::vector<int> indegree(n_, 0);
    for (const auto& [from, to] : directed_)
        ++indegree[to];
    std::vector<int> queue;
    for (int v = 0; v < n_; ++v)
        if (indegree[v] == 0)
            queue.push_back(v);
    std::size_t processed = 0;
    while (processed < queue.size()) {
        int v = queue[processed++];
        for (const auto& [from, to] : directed_)
            if (from == v && --indegree[to] == 0)
                queue.push_back(to);
    }
    return processed == static_cast<std::size_t>(n_);
}

std::vector<Constraint> guessing_constraints(const SightGraph& graph)
{
    std::vector<Constraint> out;
    for (int v = 0; v < graph.vertex_count(); ++v) {
        LinearExpression cap;
        cap.add_coord(bit(v), 1);
        out.push_back({std::move(cap), Relation::LessEqual, 1, Tag::Bound});
    }
    for (int v = 0; v < graph.vertex_count(); ++v) {
        VarSet seen = graph.in_neighbors(v);
        LinearExpression dep;
        dep.add_coord(seen | bit(v), 1);
        dep.add_coord(seen, -1);
        out.push_back({std::move(dep), Relation::Equal, 0, Tag::Problem});
    }
    return out;
}

LPModel build_guess_model(const GuessProblem& problem, const GuessModelOptions& options)
{
    const VariableUniverse& universe = problem.universe;
    std::vector<std::vector<Constraint>> sets;
    sets.push_back(guessing_constraints(problem.graph));
    if (options.use_symmetry)
        sets.push_back(symmetry_equalities(problem.group, universe));

    std::vector<CopyBlock> blocks = options.use_copies ? problem.blocks : std::vector<CopyBlock>{};
    BlockExpansion expansion = collect_blocks(universe, blocks);
    if (!expansion.constraints.empty())
        sets.push_back(std::move(expansion.constraints));
    for (VarSet scope : expansion.scopes)
        sets.push_back(elemental_inequalities(scope));

    LinearExpression objective;
    objective.add_coord(universe.base_mask(), 1);
    return assemble(universe, sets, std::move(objective), Sense::Maximize);
}

Rational guessing_upper_bound(const GuessProblem& problem, const GuessModelOptions& options,
                              const SolveOptions& solve_options)
{
    LPModel model = build_guess_model(problem, options);
    LPSolution solution = solve(model, solve_options);
    switch (solution.status) {
    case SolveStatus::Optimal:
        return solution.value;
    case SolveStatus::Infeasible:
        throw InfeasibleError(solution.diagnostic);
    case SolveStatus::Unbounded:
        throw Error("guessing LP unbounded; the graph constraints are missing");
    case SolveStatus::Aborted:
        throw ResourceGuardError(solution.diagnostic);
    }
    throw Error("unreachable");
}

std::vector<VarSet> enumerate_cliques(const SightGraph& graph)
{
    int n = graph.vertex_count();
    std::vector<VarSet> adjacency(n, 0);
    for (const auto& [a, b] : graph.undirected_edges()) {
        adjacency[a] |= bit(b);
        adjacency[b] |= bit(a);
    }
    std::vector<VarSet> cliques;
    // grow cliques by their highest vertex; candidates stay sorted ascending
    std::vector<std::pair<VarSet, VarSet>> stack;  // (clique, extension candidates)
    for (int v = n - 1; v >= 0; --v)
        stack.emplace_back(bit(v), adjacency[v] & (bit(v) - 1));
    while (!stack.empty()) {
        auto [clique, candidates] = stack.back();
        stack.pop_back();
        cliques.push_back(clique);
        for (int v = 0; v < n; ++v)
            if (candidates & bit(v))
                stack.emplace_back(clique | bit(v), candidates & adjacency[v] & (bit(v) - 1));
    }
    std::sort(cliques.begin(), cliques.end());
    return cliques;
}

Rational fractional_clique_cover_number(const SightGraph& graph)
{
    if (!graph.directed_edges().empty())
        throw Error("fractional clique cover is defined for undirected graphs");
    int n = graph.vertex_count();
    std::vector<VarSet> cliques = enumerate_cliques(graph);

    // weights live in auxiliary columns; vertex coverage rows are equalities
    VariableUniverse universe = VariableUniverse::make({"v"});
    std::vector<std::string> aux_names;
    aux_names.reserve(cliques.size());
    for (std::size_t k = 0; k < cliques.size(); ++k)
        aux_names.push_back("w" + std::to_string(k + 1));

    std::vector<Constraint> rows;
    for (int v = 0; v < n; ++v) {
        LinearExpression cover;
        for (std::size_t k = 0; k < cliques.size(); ++k)
            if (cliques[k] & bit(v))
                cover.add_term(aux_key(static_cast<int>(k)), 1);
        rows.push_back({std::move(cover), Relation::Equal, 1, Tag::Problem});
    }
    for (std::size_t k = 0; k < cliques.size(); ++k) {
        LinearExpression nonneg;
        nonneg.add_term(aux_key(static_cast<int>(k)), 1);
        rows.push_back({std::move(nonneg), Relation::GreaterEqual, 0, Tag::Bound});
    }

    LinearExpression total;
    for (std::size_t k = 0; k < cliques.size(); ++k)
        total.add_term(aux_key(static_cast<int>(k)), 1);

    LPModel model = assemble(universe, {rows}, std::move(total), Sense::Minimize, aux_names);
    LPSolution solution = solve(model);
    if (solution.status != SolveStatus::Optimal)
        throw Error("clique cover LP failed: " + solution.diagnostic);
    return solution.value;
}

int clique_cover_number(const SightGraph& graph)
{
    if (!graph.directed_edges().empty())
        throw Error("clique cover is defined for undirected graphs");
    int n = graph.vertex_count();
    if (n > 20)
        throw Error("clique cover dynamic programming is limited to 20 vertices");

    std::vector<VarSet> adjacency(n, 0);
    for (const auto& [a, b] : graph.undirected_edges()) {
        adjacency[a] |= bit(b);
        adjacency[b] |= bit(a);
    }
    VarSet full = (VarSet{1} << n) - 1;
    std::vector<int> best(full + 1, 0);
    for (VarSet s = 1; s <= full; ++s) {
        int low = __builtin_ctz(s);
        VarSet pool = s & adjacency[low];
        int value = 1 + best[s & ~bit(low)];  // {low} alone
        // cliques containing `low` inside s: extend over submasks of the
        // neighbourhood, keeping only sets that stay cliques
        for (VarSet sub = pool; sub != 0; sub = (sub - 1) & pool) {
            bool clique = true;
            for (VarSet rest = sub; rest && clique; rest &= rest - 1) {
                int v = __builtin_ctz(rest);
                if ((sub & ~bit(v)) & ~adjacency[v])
                    clique = false;
            }
            if (!clique)
                continue;
            value = std::min(value, 1 + best[s & ~sub & ~bit(low)]);
        }
        best[s] = value;
    }
    return best[full];
}

int independence_number(const SightGraph& graph)
{
    int n = graph.vertex_count();
    std::vector<VarSet> adjacency(n, 0);
    for (const auto& [a, b] : graph.undirected_edges()) {
        adjacency[a] |= bit(b);
        adjacency[b] |= bit(a);
    }
    // branch on the highest-degree vertex of the remaining set
    std::map<VarSet, int> memo;
    auto solve_set = [&](auto&& self, VarSet s) -> int {
        if (s == 0)
            return 0;
        auto it = memo.find(s);
        if (it != memo.end())
            return it->second;
        int pick = -1, pick_degree = -1;
        for (VarSet rest = s; rest; rest &= rest - 1) {
            int v = __builtin_ctz(rest);
            int d = popcount(adjacency[v] & s);
            if (d > pick_degree) {
                pick = v;
                pick_degree = d;
            }
        }
        int value;
        if (pick_degree == 0) {
            value = popcount(s);  // isolated remainder
        } else {
            int with = 1 + self(self, s & ~bit(pick) & ~adjacency[pick]);
            int without = self(self, s & ~bit(pick));
            value = std::max(with, without);
        }
        memo[s] = value;
        return value;
    };
    return solve_set(solve_set, (VarSet{1} << n) - 1);
}

CombinatorialBounds combinatorial_bounds(const SightGraph& graph)
{
    SightGraph undirected(graph.vertex_count());
    for (const auto& [a, b] : graph.undirected_edges())
        undirected.add_undirected(a, b);

    CombinatorialBounds out;
    out.lower = Rational(graph.vertex_count()) - fractional_clique_cover_number(undirected);
    out.upper_alpha = Rational(graph.vertex_count() - independence_number(undirected));
    out.acyclic_zero = graph.acyclic();
    return out;
}

SightGraph blow_up(const SightGraph& graph, int t)
{
    if (t < 1)
        throw Error("blow-up factor must be at least 1");
    int n = graph.vertex_count();
    SightGraph out(n * t);
    auto id = [&](int v, int i) { return v + n * i; };
    for (int i = 0; i < t; ++i) {
        for (int j = 0; j < t; ++j) {
            for (const auto& [a, b] : graph.undirected_edges())
                out.add_undirected(id(a, i), id(b, j));
            for (const auto& [from, to] : graph.directed_edges())
                out.add_directed(id(from, i), id(to, j));
        }
    }
    return out;
}

BruteForceResult brute_force_guessing_number(const SightGraph& graph, int colors,
                                             std::uint64_t guard)
{
    if (colors < 2)
        throw Error("the colour alphabet needs at least two colours");
    int n = graph.vertex_count();

    std::vector<std::vector<int>> seen_by(n);
    for (int v = 0; v < n; ++v) {
        VarSet mask = graph.in_neighbors(v);
        for (int u = 0; u < n; ++u)
            if (mask & bit(u))
                seen_by[v].push_back(u);
    }

    // strategy space: per vertex, colors^(colors^indegree) guessing tables
    std::uint64_t total_strategies = 1;
    std::vector<std::uint64_t> table_sizes(n), function_counts(n);
    for (int v = 0; v < n; ++v) {
        std::uint64_t configs = 1;
        for (std::size_t i = 0; i < seen_by[v].size(); ++i) {
            configs *= static_cast<std::uint64_t>(colors);
            if (configs > guard)
                throw ResourceGuardError("brute force: too many visible configurations");
        }
        table_sizes[v] = configs;
        std::uint64_t functions = 1;
        for (std::uint64_t i = 0; i < configs; ++i) {
            functions *= static_cast<std::uint64_t>(colors);
            if (functions > guard)
                throw ResourceGuardError("brute force: strategy space exceeds the guard");
        }
        function_counts[v] = functions;
        if (total_strategies > guard / functions)
            throw ResourceGuardError("brute force: strategy space exceeds the guard");
        total_strategies *= functions;
    }

    std::uint64_t config_count = 1;
    for (int v = 0; v < n; ++v) {
        config_count *= static_cast<std::uint64_t>(colors);
        if (config_count > (std::uint64_t{1} << 22))
            throw ResourceGuardError("brute force: too many colourings to enumerate");
    }

    // precompute every colouring and each vertex's visible index in it
    std::vector<std::vector<int>> colouring(config_count, std::vector<int>(n));
    std::vector<std::vector<std::uint64_t>> visible_index(config_count,
                                                          std::vector<std::uint64_t>(n));
    for (std::uint64_t c = 0; c < config_count; ++c) {
        std::uint64_t rest = c;
        for (int v = 0; v < n; ++v) {
            colouring[c][v] = static_cast<int>(rest % colors);
            rest /= colors;
        }
        for (int v = 0; v < n; ++v) {
            std::uint64_t index = 0;
            for (int u : seen_by[v])
                index = index * colors + colouring[c][u];
            visible_index[c][v] = index;
        }
    }

    std::vector<std::vector<int>> tables(n);
    for (int v = 0; v < n; ++v)
        tables[v].assign(table_sizes[v], 0);

    BruteForceResult result;
    result.colors = colors;

    std::uint64_t strategy = 0;
    while (true) {
        std::uint64_t wins = 0;
        for (std::uint64_t c = 0; c < config_count; ++c) {
            if (wins + (config_count - c) <= result.max_winning_configs)
                break;  // cannot beat the best any more
            bool all_correct = true;
            for (int v = 0; v < n && all_correct; ++v)
                all_correct = tables[v][visible_index[c][v]] == colouring[c][v];
            if (all_correct)
                ++wins;
        }
        result.max_winning_configs = std::max(result.max_winning_configs, wins);

        // next strategy tuple: mixed-radix increment over all table entries
        if (++strategy >= total_strategies)
            break;
        int v = 0;
        std::size_t slot = 0;
        while (true) {
            if (++tables[v][slot] < colors)
                break;
            tables[v][slot] = 0;
            if (++slot == tables[v].size()) {
                slot = 0;
                ++v;
            }
        }
    }
    return result;
}

} // namespace entlp

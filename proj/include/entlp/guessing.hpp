#ifndef ENTLP_GUESSING_HPP
#define ENTLP_GUESSING_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "entlp/copylemma.hpp"
#include "entlp/core.hpp"
#include "entlp/lp.hpp"
#include "entlp/perm.hpp"

namespace entlp {

// A loopless sight graph. Vertices are 0-based; a directed edge (u, v) means
// the information flows u -> v, that is, v sees u.
class SightGraph {
public:
    SightGraph() = default;
    explicit SightGraph(int vertex_count) : n_(vertex_count)
    {
        if (vertex_count < 0 || vertex_count > kMaxUniverseSize)
            throw Error("vertex count out of range");
    }

    int vertex_count() const { return n_; }

    void add_undirected(int u, int v);
    void add_directed(int from, int to);  // `to` sees `from`

    const std::vector<std::pair<int, int>>& undirected_edges() const { return undirected_; }
    const std::vector<std::pair<int, int>>& directed_edges() const { return directed_; }

    bool has_undirected(int u, int v) const;
    bool has_directed(int from, int to) const;

    VarSet in_neighbors(int v) const;   // everyone v sees
    int degree(int v) const;            // undirected degree

    // true iff the permutation maps the undirected edge set to itself and
    // the directed edge set to itself respecting direction
    bool invariant_under(const Permutation& p) const;

    // true iff the relation (undirected edges as 2-cycles) has no directed cycle
    bool acyclic() const;

    bool operator==(const SightGraph&) const = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> undirected_;  // u < v, sorted
    std::vector<std::pair<int, int>> directed_;    // sorted
};

struct GuessProblem {
    std::string name;
    SightGraph graph;
    PermutationGroup group;           // validated against the graph
    VariableUniverse universe;        // X1..Xn plus copy variables
    std::vector<CopyBlock> blocks;
};

// Per vertex: the colour bound h_v <= 1 and the dependence equality
// h_{N(v) u {v}} = h_{N(v)}, which degenerates to h_v = 0 for an isolated
// vertex.
std::vector<Constraint> guessing_constraints(const SightGraph& graph);

struct GuessModelOptions {
    bool use_symmetry = true;
    bool use_copies = true;
};

// The upper-bound LP of the guessing method: maximize h over the full base
// set subject to the game constraints, symmetry equalities, copy-block
// equalities and per-scope elemental inequalities.
LPModel build_guess_model(const GuessProblem& problem, const GuessModelOptions& options = {});

// Exact LP optimum, an upper bound on the asymptotic guessing number.
Rational guessing_upper_bound(const GuessProblem& problem, const GuessModelOptions& options = {},
                              const SolveOptions& solve_options = {});

// All cliques of the undirected graph as vertex masks (singletons included),
// ascending.
std::vector<VarSet> enumerate_cliques(const SightGraph& graph);

// Exact optimum of the fractional clique cover LP, where every vertex must
// be covered with total weight exactly one. Rejects graphs with directed
// edges.
Rational fractional_clique_cover_number(const SightGraph& graph);

// Minimum clique partition size via subset dynamic programming (n <= 20).
int clique_cover_number(const SightGraph& graph);

// Largest independent set of the undirected part.
int independence_number(const SightGraph& graph);

struct CombinatorialBounds {
    Rational lower;        // n - cp_f on the undirected part
    Rational upper_alpha;  // n - alpha
    bool acyclic_zero;     // acyclic graphs have guessing number zero
};

CombinatorialBounds combinatorial_bounds(const SightGraph& graph);

// Vertex set V x {1..t}; copies of adjacent vertices are fully joined,
// copies of one vertex stay non-adjacent.
SightGraph blow_up(const SightGraph& graph, int t);

struct BruteForceResult {
    std::uint64_t max_winning_configs = 0;
    int colors = 0;  // gn = log_s(max_winning_configs) with s = colors
};

// Exhaustive strategy search: every tuple of deterministic guessing
// functions, counting winning colourings, keeping the maximum. The guard
// bounds the number of strategy tuples.
BruteForceResult brute_force_guessing_number(const SightGraph& graph, int colors,
                                             std::uint64_t guard = 100'000'000);

} // namespace entlp

#endif

#include "entlp/problem_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace entlp {

namespace {

std::string trim(const std::string& s)
{
    std::size_t start = s.find_first_not_of(" \t\r");
    if (start == std::string::npos)
        return "";
    std::size_t end = s.find_last_not_of(" \t\r");
    return s.substr(start, end - start + 1);
}

std::vector<std::string> split_ws(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string token;
    while (in >> token)
        out.push_back(token);
    return out;
}

} // namespace

Problem parse_problem(const std::string& text, const std::string& name)
{
    std::string kind;
    std::vector<std::string> vars;
    std::vector<std::string> minset_lines, edge_lines, symmetry_lines, copy_lines, scope_lines;

    std::string section;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#')
            continue;
        if (line.rfind("kind:", 0) == 0) {
            kind = trim(line.substr(5));
            section.clear();
            continue;
        }
        if (line.rfind("vars:", 0) == 0) {
            vars = split_ws(trim(line.substr(5)));
            section.clear();
            continue;
        }
        if (line == "minsets:" || line == "edges:" || line == "symmetry:" || line == "copies:" ||
            line == "scopes:") {
            section = line.substr(0, line.size() - 1);
            continue;
        }
        if (section == "minsets")
            minset_lines.push_back(line);
        else if (section == "edges")
            edge_lines.push_back(line);
        else if (section == "symmetry")
            symmetry_lines.push_back(line);
        else if (section == "copies")
            copy_lines.push_back(line);
        else if (section == "scopes")
            scope_lines.push_back(line);
        else
            throw Error("problem file: line outside any section: '" + line + "'");
    }

    if (vars.empty())
        throw Error("problem file: missing vars:");

    Problem problem;
    problem.name = name;

    VariableUniverse universe = VariableUniverse::make(vars);
    int base = universe.base_count();

    // copy blocks apply against the growing universe
    std::vector<CopyBlock> blocks;
    {
        int step_id = 0;
        VarSet block_universe = universe.base_mask();
        bool block_open = false;
        for (const auto& line : copy_lines) {
            if (line == "block") {
                blocks.emplace_back();
                block_universe = universe.base_mask();
                block_open = true;
                continue;
            }
            if (!block_open) {
                blocks.emplace_back();
                block_universe = universe.base_mask();
                block_open = true;
            }
            CopyStep step = parse_copy_recipe(line, universe, block_universe,
                                              static_cast<int>(blocks.size()) - 1, step_id);
            CopyStepResult applied = apply_copy(universe, step, block_universe);
            for (int idx : applied.new_indices)
                block_universe |= bit(idx);
            blocks.back().steps.push_back(std::move(step));
            ++step_id;
        }
    }
    for (std::size_t i = 0; i < scope_lines.size(); ++i) {
        if (i >= blocks.size())
            throw Error("problem file: more scope lines than copy blocks");
        blocks[i].scope_override = split_ws(scope_lines[i]);
        for (const auto& n : blocks[i].scope_override)
            universe.index_of(n);  // must resolve
    }

    if (kind == "guessing") {
        problem.kind = Problem::Kind::Guessing;
        GuessProblem& guess = problem.guess;
        guess.name = name;
        guess.graph = SightGraph(base);
        for (const auto& line : edge_lines) {
            auto tokens = split_ws(line);
            if (tokens.size() != 3 || (tokens[1] != "--" && tokens[1] != "->"))
                throw Error("problem file: bad edge line '" + line + "'");
            int u = std::stoi(tokens[0]), v = std::stoi(tokens[2]);
            if (u < 1 || v < 1 || u > base || v > base)
                throw Error("problem file: edge endpoint out of range in '" + line + "'");
            if (tokens[1] == "--")
                guess.graph.add_undirected(u - 1, v - 1);
            else
                guess.graph.add_directed(u - 1, v - 1);
        }
        if (!minset_lines.empty())
            throw Error("problem file: minsets: section in a guessing problem");
        std::vector<Permutation> generators;
        for (const auto& line : symmetry_lines)
            generators.push_back(Permutation::parse_cycles(line, base));
        guess.group = PermutationGroup::closure(std::move(generators), base);
        guess.universe = std::move(universe);
        guess.blocks = std::move(blocks);
    } else if (kind == "secret-sharing") {
        problem.kind = Problem::Kind::SecretSharing;
        RatioProblem& ratio = problem.ratio;
        ratio.name = name;
        int participants = base - 1;
        if (participants < 1)
            throw Error("problem file: a secret sharing problem needs a secret and shares");
        if (!edge_lines.empty())
            throw Error("problem file: edges: section in a secret-sharing problem");
        std::vector<VarSet> minimal;
        for (const auto& line : minset_lines) {
            VarSet mask = 0;
            for (const auto& token : split_ws(line)) {
                int p = std::stoi(token);
                if (p < 1 || p > participants)
                    throw Error("problem file: participant out of range in '" + line + "'");
                mask |= bit(p - 1);
            }
            minimal.push_back(mask);
        }
        ratio.structure = AccessStructure::make(participants, std::move(minimal));
        std::vector<Permutation> generators;
        for (const auto& line : symmetry_lines)
            generators.push_back(Permutation::parse_cycles(line, participants));
        ratio.group = PermutationGroup::closure(std::move(generators), participants);
        ratio.universe = std::move(universe);
        ratio.blocks = std::move(blocks);
    } else {
        throw Error("problem file: kind must be 'guessing' or 'secret-sharing'");
    }
    return problem;
}

namespace {

std::string name_list(const VariableUniverse& universe, VarSet mask, bool parenthesize)
{
    std::vector<std::string> names;
    for (int v = 0; v < universe.size(); ++v)
        if (mask & bit(v))
            names.push_back(universe.name(v));
    std::string joined;
    for (std::size_t i = 0; i < names.size(); ++i)
        joined += (i ? "," : "") + names[i];
    if (parenthesize && names.size() > 1)
        return "(" + joined + ")";
    return joined;
}

void serialize_copies(std::ostringstream& out, const VariableUniverse& universe,
                      const std::vector<CopyBlock>& blocks)
{
    if (blocks.empty())
        return;
    out << "copies:\n";
    for (const auto& block : blocks) {
        out << "block\n";
        for (const auto& step : block.steps) {
            std::string new_names;
            for (std::size_t i = 0; i < step.new_names.size(); ++i)
                new_names += (i ? "," : "") + step.new_names[i];
            if (step.new_names.size() > 1)
                new_names = "(" + new_names + ")";
            out << new_names << " be a copy of " << name_list(universe, step.z_vars, true)
                << " over " << name_list(universe, step.x_vars, false) << "\n";
        }
    }
    bool any_override = false;
    for (const auto& block : blocks)
        any_override = any_override || !block.scope_override.empty();
    if (any_override) {
        out << "scopes:\n";
        for (const auto& block : blocks) {
            std::string line;
            std::vector<std::string> names = block.scope_override;
            for (std::size_t i = 0; i < names.size(); ++i)
                line += (i ? " " : "") + names[i];
            out << line << "\n";
        }
    }
}

} // namespace

std::string serialize_problem(const Problem& problem)
{
    std::ostringstream out;
    if (problem.kind == Problem::Kind::Guessing) {
        const GuessProblem& guess = problem.guess;
        out << "kind: guessing\n";
        out << "vars:";
        for (int v = 0; v < guess.universe.base_count(); ++v)
            out << " " << guess.universe.name(v);
        out << "\n";
        out << "edges:\n";
        for (const auto& [a, b] : guess.graph.undirected_edges())
            out << (a + 1) << " -- " << (b + 1) << "\n";
        for (const auto& [a, b] : guess.graph.directed_edges())
            out << (a + 1) << " -> " << (b + 1) << "\n";
        if (!guess.group.generators().empty()) {
            out << "symmetry:\n";
            for (const auto& g : guess.group.generators())
                out << g.to_cycles() << "\n";
        }
        serialize_copies(out, guess.universe, guess.blocks);
    } else {
        const RatioProblem& ratio = problem.ratio;
        out << "kind: secret-sharing\n";
        out << "vars:";
        for (int v = 0; v < ratio.universe.base_count(); ++v)
            out << " " << ratio.universe.name(v);
        out << "\n";
        out << "minsets:\n";
        for (VarSet s : ratio.structure.minimal_sets()) {
            std::string line;
            for (int p = 0; p < ratio.structure.participants(); ++p)
                if (s & bit(p))
                    line += (line.empty() ? "" : " ") + std::to_string(p + 1);
            out << line << "\n";
        }
        if (!ratio.group.generators().empty()) {
            out << "symmetry:\n";
            for (const auto& g : ratio.group.generators())
                out << g.to_cycles() << "\n";
        }
        serialize_copies(out, ratio.universe, ratio.blocks);
    }
    return out.str();
}

std::vector<std::string> validate_problem(const Problem& problem)
{
    std::vector<std::string> issues;
    if (problem.kind == Problem::Kind::Guessing) {
        for (const auto& g : problem.guess.group.generators())
            if (!problem.guess.graph.invariant_under(g))
                issues.push_back("generator " + g.to_cycles() + " is not an automorphism of the graph");
    } else {
        for (const auto& g : problem.ratio.group.generators())
            if (!problem.ratio.structure.invariant_under(g))
                issues.push_back("generator " + g.to_cycles() +
                                 " does not preserve the access structure");
    }
    return issues;
}

// ---------------------------------------------------------------------------
// Catalog. The R-minus edge list is the unique 26-edge graph consistent
// with its degree structure (vertices 1 and 8 of degree six, the rest of
// degree five, with the stated mix of degree-six neighbours), invariance
// under both symmetry generators, and every functional-dependence row of
// the shipped certificate; common drawings omit the six inner edges
// 2-3, 2-7, 3-4, 4-5, 5-6, 6-7.
// ---------------------------------------------------------------------------

namespace {

const std::map<std::string, std::string>& catalog()
{
    static const std::map<std::string, std::string> entries = {
        {"C5", R"(kind: guessing
vars: X1 X2 X3 X4 X5
edges:
1 -- 2
1 -- 5
2 -- 3
3 -- 4
4 -- 5
symmetry:
(12345)
(25)(34)
)"},
        {"K2", R"(kind: guessing
vars: X1 X2
edges:
1 -- 2
symmetry:
(12)
)"},
        {"K3", R"(kind: guessing
vars: X1 X2 X3
edges:
1 -- 2
1 -- 3
2 -- 3
symmetry:
(123)
(12)
)"},
        {"Rminus", R"(kind: guessing
vars: X1 X2 X3 X4 X5 X6 X7 X8 X9 X10
edges:
1 -- 2
1 -- 3
1 -- 4
1 -- 5
1 -- 6
1 -- 7
2 -- 3
2 -- 7
2 -- 9
2 -- 10
3 -- 4
3 -- 8
3 -- 9
4 -- 5
4 -- 8
4 -- 10
5 -- 6
5 -- 9
5 -- 10
6 -- 7
6 -- 8
6 -- 9
7 -- 8
7 -- 10
8 -- 9
8 -- 10
symmetry:
(18)(2 10 5 9)(3746)
(25)(36)(47)
copies:
block
X2' be a copy of X2 over X1,X4,X5,X6,X7,X8,X9,X10
block
(X4'',X5'') be a copy of (X4,X5) over X1,X2,X3,X6,X7,X8,X9
X7''' be a copy of X7 over X1,X2,X3,X4,X6,X8,X9,X5''
block
(X6'''',X7'''') be a copy of (X6,X7) over X1,X2,X3,X4,X5,X8,X9,X10
X8''''' be a copy of X8 over X1,X2,X3,X4,X5,X6,X9,X10,X6''''
)"},
        {"R", R"(kind: guessing
vars: X1 X2 X3 X4 X5 X6 X7 X8 X9 X10
edges:
1 -- 2
1 -- 3
1 -- 4
1 -- 5
1 -- 6
1 -- 7
2 -- 3
2 -- 7
2 -- 9
2 -- 10
3 -- 4
3 -- 8
3 -- 9
4 -- 5
4 -- 8
4 -- 10
5 -- 6
5 -- 9
5 -- 10
6 -- 7
6 -- 8
6 -- 9
7 -- 8
7 -- 10
8 -- 9
8 -- 10
9 -- 10
symmetry:
(25)(36)(47)
(26)(35)(8 10)
(24)(57)(89)
)"},
        {"RS", R"(kind: guessing
vars: X1 X2 X3 X4 X5 X6 X7 X8 X9 X10
edges:
1 -- 2
1 -- 3
1 -- 4
1 -- 5
1 -- 6
1 -- 7
2 -- 3
2 -- 7
2 -- 9
2 -- 10
3 -- 4
3 -- 8
3 -- 9
4 -- 5
4 -- 8
4 -- 10
5 -- 6
5 -- 9
5 -- 10
6 -- 7
6 -- 8
6 -- 9
7 -- 8
7 -- 10
8 -- 9
8 -- 10
9 -- 10
1 -> 8
1 -> 9
1 -> 10
symmetry:
(25)(36)(47)
(26)(35)(8 10)
(24)(57)(89)
)"},
        {"RL", R"(kind: guessing
vars: X1 X2 X3 X4 X5 X6 X7 X8 X9 X10
edges:
1 -- 2
1 -- 3
1 -- 4
1 -- 5
1 -- 6
1 -- 7
2 -- 3
2 -- 7
2 -- 9
2 -- 10
3 -- 4
3 -- 8
3 -- 9
4 -- 5
4 -- 8
4 -- 10
5 -- 6
5 -- 9
5 -- 10
6 -- 7
6 -- 8
6 -- 9
7 -- 8
7 -- 10
8 -- 9
8 -- 10
9 -- 10
8 -> 1
9 -> 1
10 -> 1
symmetry:
(25)(36)(47)
(26)(35)(8 10)
(24)(57)(89)
copies:
block
(X4',X5') be a copy of (X4,X5) over X1,X2,X3,X6,X7,X8,X9,X10
X5'' be a copy of X5 over X2,X3,X6,X7,X8,X9,X10,X5'
X1''' be a copy of X1 over X2,X3,X5,X6,X7,X8,X9,X10,X5',X5''
block
(X2'''',X7'''') be a copy of (X2,X7) over X1,X3,X4,X5,X6,X8,X9,X10
X1''''' be a copy of X1 over X2,X3,X4,X5,X6,X8,X9,X10,X2''''
)"},
        {"V", R"(kind: secret-sharing
vars: S0 S1 S2 S3 S4 S5 S6 S7
minsets:
1 2 3
1 4 5
1 2 4 6
1 3 4 6
2 3 4 6
1 2 5 6
1 3 5 6
2 3 5 6
2 4 5 6
3 4 5 6
1 2 4 7
1 3 4 7
2 3 4 7
1 2 5 7
1 3 5 7
2 3 5 7
2 4 5 7
3 4 5 7
1 2 6 7
1 3 6 7
1 4 6 7
2 4 6 7
3 4 6 7
1 5 6 7
2 5 6 7
3 5 6 7
symmetry:
(24)(35)
(23)
(45)
(67)
)"},
        {"A", R"(kind: secret-sharing
vars: S0 S1 S2 S3 S4 S5 S6 S7
minsets:
1 2 3
1 4 5
2 4 6
3 5 6
1 2 4 7
3 4 7
2 5 7
1 6 7
symmetry:
(12)(56)
(14)(36)
(17)(35)
copies:
block
(S0',S3',S4',S7') be a copy of (S0,S3,S4,S7) over S1,S2,S5,S6
)"},
        {"Astar", R"(kind: secret-sharing
vars: S0 S1 S2 S3 S4 S5 S6 S7
minsets:
1 2 3
1 4 5
2 4 6
1 3 5 6
2 3 5 6
3 4 5 6
3 4 7
2 5 7
1 6 7
3 5 6 7
symmetry:
(12)(56)
(14)(36)
(17)(35)
copies:
block
(S0',S3') be a copy of (S0,S3) over S1,S2,S4,S7
(S1'',S2'') be a copy of (S1,S2) over S4,S5,S6,S7
)"},
        {"F", R"(kind: secret-sharing
vars: S0 S1 S2 S3 S4 S5 S6 S7
minsets:
1 2 3
1 4 5
2 4 6
1 2 5 6
3 5 6
1 2 4 7
3 4 7
2 5 7
1 6 7
symmetry:
(12)(4576)
(46)(57)
copies:
block
(S0',S2',S4',S6') be a copy of (S0,S2,S4,S6) over S1,S3,S5,S7
)"},
        {"Fstar", R"(kind: secret-sharing
vars: S0 S1 S2 S3 S4 S5 S6 S7
minsets:
1 2 3
1 4 5
2 4 6
1 3 5 6
2 3 5 6
3 4 5 6
1 3 4 7
2 3 4 7
2 5 7
3 4 5 7
1 6 7
3 4 6 7
3 5 6 7
symmetry:
(12)(4576)
(46)(57)
copies:
block
(S0',S4') be a copy of (S0,S4) over S1,S2,S5,S6
(S1'',S4'') be a copy of (S1,S4) over S2,S3,S6,S7
)"},
        {"Fhat", R"(kind: secret-sharing
vars: S0 S1 S2 S3 S4 S5 S6 S7
minsets:
1 2 3
1 4 5
2 4 6
1 2 5 6
1 3 5 6
2 3 5 6
3 4 5 6
3 4 7
2 5 7
1 6 7
3 5 6 7
symmetry:
(12)(47)
(12)(56)
copies:
block
(S0',S4') be a copy of (S0,S4) over S1,S3,S5,S7
(S1'',S4'') be a copy of (S1,S4) over S2,S3,S6,S7
)"},
        {"Q", R"(kind: secret-sharing
vars: S0 S1 S2 S3 S4 S5 S6 S7
minsets:
1 2 3
1 4 5
2 4 6
1 2 5 6
1 3 5 6
2 3 5 6
3 4 5 6
1 2 4 7
3 4 7
2 5 7
1 6 7
3 5 6 7
symmetry:
(12)(47)
(12)(56)
copies:
block
(S0',S2',S4',S6') be a copy of (S0,S2,S4,S6) over S1,S3,S5,S7
(S0'',S2'',S4'',S6'') be a copy of (S0,S2,S4,S6) over S1,S3,S5,S7
)"},
        {"Qstar", R"(kind: secret-sharing
vars: S0 S1 S2 S3 S4 S5 S6 S7
minsets:
1 2 3
1 4 5
2 4 6
1 3 5 6
2 3 5 6
3 4 5 6
1 2 4 7
1 3 4 7
2 3 4 7
2 5 7
3 4 5 7
1 6 7
3 4 6 7
3 5 6 7
symmetry:
(12)(47)
(12)(56)
copies:
block
(S0',S4') be a copy of (S0,S4) over S1,S2,S5,S6
(S1'',S5'') be a copy of (S1,S5) over S2,S3,S6,S7
)"},
    };
    return entries;
}

std::string canonical_name(const std::string& name)
{
    if (name == "A*")
        return "Astar";
    if (name == "F*")
        return "Fstar";
    if (name == "Q*")
        return "Qstar";
    if (name == "R-")
        return "Rminus";
    return name;
}

} // namespace

std::vector<std::string> catalog_names()
{
    std::vector<std::string> names;
    for (const auto& [name, text] : catalog())
        names.push_back(name);
    return names;
}

const std::string& catalog_text(const std::string& name)
{
    auto it = catalog().find(canonical_name(name));
    if (it == catalog().end())
        throw Error("unknown catalog entry '" + name + "'");
    return it->second;
}

Problem load_problem(const std::string& spec)
{
    if (spec.rfind("catalog:", 0) == 0) {
        std::string name = canonical_name(spec.substr(8));
        return parse_problem(catalog_text(name), name);
    }
    std::ifstream in(spec);
    if (!in)
        throw Error("cannot open problem file '" + spec + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_problem(buffer.str(), spec);
}

RatioProblem catalog_structure(const std::string& name)
{
    Problem problem = parse_problem(catalog_text(name), canonical_name(name));
    if (problem.kind != Problem::Kind::SecretSharing)
        throw Error("catalog entry '" + name + "' is not an access structure");
    return problem.ratio;
}

GuessProblem catalog_graph(const std::string& name)
{
    Problem problem = parse_problem(catalog_text(name), canonical_name(name));
    if (problem.kind != Problem::Kind::Guessing)
        throw Error("catalog entry '" + name + "' is not a sight graph");
    return problem.guess;
}

} // namespace entlp

#include "entlp/perm.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace entlp {

Permutation Permutation::identity(int domain_size)
{
    std::vector<int> map(domain_size);
    for (int i = 0; i < domain_size; ++i)
        map[i] = i;
    return Permutation(std::move(map));
}

Permutation Permutation::from_map(std::vector<int> map)
{
    std::vector<bool> seen(map.size(), false);
    for (int v : map) {
        if (v < 0 || v >= static_cast<int>(map.size()) || seen[v])
            throw Error("permutation map is not a bijection");
        seen[v] = true;
    }
    return Permutation(std::move(map));
}

Permutation Permutation::parse_cycles(const std::string& text, int domain_size)
{
    std::vector<std::vector<int>> cycles;
    std::size_t pos = 0;
    while (pos < text.size()) {
        char c = text[pos];
        if (c == ' ' || c == '\t') {
            ++pos;
            continue;
        }
        if (c != '(')
            throw Error("cycle notation: expected '(' in '" + text + "'");
        std::size_t close = text.find(')', pos);
        if (close == std::string::npos)
            throw Error("cycle notation: unbalanced '(' in '" + text + "'");
        std::string body = text.substr(pos + 1, close - pos - 1);
        pos = close + 1;

        bool spaced = body.find(' ') != std::string::npos;
        std::vector<int> cycle;
        std::size_t i = 0;
        while (i < body.size()) {
            if (body[i] == ' ') {
                ++i;
                continue;
            }
            if (body[i] < '0' || body[i] > '9')
                throw Error("cycle notation: unexpected character in '" + text + "'");
            std::size_t j = i;
            while (j < body.size() && body[j] >= '0' && body[j] <= '9')
                ++j;
            std::string token = body.substr(i, j - i);
            i = j;
            long value = std::stol(token);
            if (spaced && value >= 1 && value <= domain_size) {
                cycle.push_back(static_cast<int>(value));
            } else {
                for (char d : token)
                    cycle.push_back(d - '0');
            }
        }
        if (!cycle.empty())
            cycles.push_back(std::move(cycle));
    }

    std::vector<int> map(domain_size);
    for (int i = 0; i < domain_size; ++i)
        map[i] = i;
    for (const auto& cycle : cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int from = cycle[i] - 1;
            int to = cycle[(i + 1) % cycle.size()] - 1;
            if (from < 0 || from >= domain_size || to < 0 || to >= domain_size)
                throw Error("cycle notation: label out of range in '" + text + "'");
            if (map[from] != from)
                throw Error("cycle notation: label repeated in '" + text + "'");
            map[from] = to;
        }
    }

    std::vector<bool> seen(domain_size, false);
    for (int v : map) {
        if (seen[v])
            throw Error("cycle notation: not a bijection in '" + text + "'");
        seen[v] = true;
    }
    return Permutation(std::move(map));
}

VarSet Permutation::apply(VarSet subset) const
{
    VarSet out = 0;
    for (int i = 0; i < domain_size(); ++i)
        if (subset & bit(i))
            out |= bit(map_[i]);
    // indices beyond the domain are fixed
    out |= subset & ~((VarSet{1} << domain_size()) - 1);
    return out;
}

Permutation Permutation::after(const Permutation& first) const
{
    if (domain_size() != first.domain_size())
        throw Error("permutation domain mismatch");
    std::vector<int> map(map_.size());
    for (int i = 0; i < domain_size(); ++i)
        map[i] = map_[first.map_[i]];
    return Permutation(std::move(map));
}

Permutation Permutation::inverse() const
{
    std::vector<int> map(map_.size());
    for (int i = 0; i < domain_size(); ++i)
        map[map_[i]] = i;
    return Permutation(std::move(map));
}

bool Permutation::is_identity() const
{
    for (int i = 0; i < domain_size(); ++i)
        if (map_[i] != i)
            return false;
    return true;
}

std::string Permutation::to_cycles() const
{
    std::string out;
    std::vector<bool> seen(map_.size(), false);
    for (int start = 0; start < domain_size(); ++start) {
        if (seen[start] || map_[start] == start)
            continue;
        std::vector<int> cycle;
        int v = start;
        while (!seen[v]) {
            seen[v] = true;
            cycle.push_back(v + 1);
            v = map_[v];
        }
        bool spaced = false;
        for (int label : cycle)
            if (label >= 10)
                spaced = true;
        out += "(";
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i > 0 && spaced)
                out += " ";
            out += std::to_string(cycle[i]);
        }
        out += ")";
    }
    if (out.empty())
        out = "()";
    return out;
}

PermutationGroup PermutationGroup::trivial(int domain_size)
{
    return closure({}, domain_size);
}

PermutationGroup PermutationGroup::closure(std::vector<Permutation> generators, int domain_size)
{
    for (const auto& g : generators)
        if (g.domain_size() != domain_size)
            throw Error("generator domain does not match the group domain");

    std::set<Permutation> elements;
    std::vector<Permutation> frontier;
    Permutation id = Permutation::identity(domain_size);
    elements.insert(id);
    frontier.push_back(id);

    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& e : frontier) {
            for (const auto& g : generators) {
                Permutation candidate = g.after(e);
                if (elements.insert(candidate).second)
                    next.push_back(candidate);
            }
        }
        frontier = std::move(next);
    }

    PermutationGroup group;
    group.domain_size_ = domain_size;
    group.generators_ = std::move(generators);
    group.elements_.assign(elements.begin(), elements.end());
    return group;
}

std::vector<SubsetOrbit> subset_orbits(const PermutationGroup& group, int base_count)
{
    if (group.domain_size() > base_count)
        throw Error("group index exceeds the base-variable count");
    if (base_count > 24)
        throw Error("orbit enumeration is limited to 24 base variables");

    VarSet limit = (base_count == 32) ? ~VarSet{0} : (VarSet{1} << base_count) - 1;
    std::vector<char> visited(static_cast<std::size_t>(limit) + 1, 0);
    std::vector<SubsetOrbit> orbits;

    for (VarSet s = 1; s <= limit; ++s) {
        if (visited[s])
            continue;
        SubsetOrbit orbit;
        std::set<VarSet> members;
        for (const auto& g : group.elements())
            members.insert(g.apply(s));
        orbit.representative = *members.begin();
        orbit.members.assign(members.begin(), members.end());
        for (VarSet m : orbit.members)
            visited[m] = 1;
        orbits.push_back(std::move(orbit));
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const SubsetOrbit& a, const SubsetOrbit& b) { return a.representative < b.representative; });
    return orbits;
}

Permutation lift_fixing_zero(const Permutation& p)
{
    std::vector<int> map(p.domain_size() + 1);
    map[0] = 0;
    for (int i = 0; i < p.domain_size(); ++i)
        map[i + 1] = p.apply(i) + 1;
    return Permutation::from_map(std::move(map));
}

PermutationGroup lift_fixing_zero(const PermutationGroup& group)
{
    std::vector<Permutation> lifted;
    lifted.reserve(group.generators().size());
    for (const auto& g : group.generators())
        lifted.push_back(lift_fixing_zero(g));
    return PermutationGroup::closure(std::move(lifted), group.domain_size() + 1);
}

std::vector<Constraint> symmetry_equalities(const PermutationGroup& group,
                                            const VariableUniverse& universe)
{
    if (group.domain_size() > universe.base_count())
        throw Error("group index exceeds the base-variable count");

    std::vector<Constraint> out;
    for (const auto& orbit : subset_orbits(group, universe.base_count())) {
        for (VarSet member : orbit.members) {
            if (member == orbit.representative)
                continue;
            LinearExpression expr;
            expr.add_coord(member, 1);
            expr.add_coord(orbit.representative, -1);
            out.push_back({std::move(expr), Relation::Equal, 0, Tag::Symmetry});
        }
    }
    return out;
}

} // namespace entlp

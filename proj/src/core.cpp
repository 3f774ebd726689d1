#include "entlp/core.hpp"

#include <algorithm>

namespace entlp {

VariableUniverse VariableUniverse::make(std::vector<std::string> base_names)
{
    if (base_names.empty())
        throw Error("universe needs at least one base variable");
    if (base_names.size() > kMaxUniverseSize)
        throw Error("universe exceeds the hard cap of 30 variables");
    VariableUniverse u;
    u.base_count_ = static_cast<int>(base_names.size());
    u.names_ = std::move(base_names);
    for (std::size_t i = 0; i < u.names_.size(); ++i)
        for (std::size_t j = i + 1; j < u.names_.size(); ++j)
            if (u.names_[i] == u.names_[j])
                throw Error("duplicate variable name '" + u.names_[i] + "'");
    return u;
}

int VariableUniverse::add_copy(const std::string& name, int source_index, int step)
{
    if (contains(name))
        throw Error("variable name collision: '" + name + "'");
    if (size() >= kMaxUniverseSize)
        throw Error("universe exceeds the hard cap of 30 variables");
    if (source_index < 0 || source_index >= size())
        throw Error("copy source index out of range");
    names_.push_back(name);
    copy_source_.push_back(source_index);
    copy_step_.push_back(step);
    return size() - 1;
}

int VariableUniverse::index_of(const std::string& name) const
{
    for (int i = 0; i < size(); ++i)
        if (names_[i] == name)
            return i;
    throw Error("unknown variable '" + name + "'");
}

bool VariableUniverse::contains(const std::string& name) const
{
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

int VariableUniverse::copy_source(int index) const
{
    if (!is_copy(index))
        throw Error("not a copy variable: " + name(index));
    return copy_source_[index - base_count_];
}

int VariableUniverse::copy_step(int index) const
{
    if (!is_copy(index))
        throw Error("not a copy variable: " + name(index));
    return copy_step_[index - base_count_];
}

int VariableUniverse::find_copy(int source_index, int step) const
{
    for (int i = base_count_; i < size(); ++i)
        if (copy_source_[i - base_count_] == source_index && copy_step_[i - base_count_] == step)
            return i;
    return -1;
}

std::string VariableUniverse::token(int index) const
{
    if (is_copy(index))
        return token(copy_source(index)) + "p" + std::to_string(copy_step(index));
    const std::string& n = names_[index];
    std::size_t pos = n.size();
    while (pos > 0 && n[pos - 1] >= '0' && n[pos - 1] <= '9')
        --pos;
    if (pos == n.size() || pos == 0)
        return n;  // no digit suffix, or all digits
    return n.substr(pos);
}

VarSet coordinate_of(const VariableUniverse& universe, const std::vector<std::string>& names)
{
    if (names.empty())
        throw Error("coordinate of the empty set is not defined");
    VarSet mask = 0;
    for (const auto& n : names)
        mask |= bit(universe.index_of(n));
    return mask;
}

std::vector<std::string> coordinate_names(const VariableUniverse& universe, VarSet subset)
{
    std::vector<std::string> out;
    for (int i = 0; i < universe.size(); ++i)
        if (subset & bit(i))
            out.push_back(universe.name(i));
    return out;
}

void LinearExpression::add_term(ColumnKey key, const Rational& coefficient)
{
    if (coefficient == 0)
        return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const auto& term, ColumnKey k) { return term.first < k; });
    if (it != terms_.end() && it->first == key) {
        it->second += coefficient;
        if (it->second == 0)
            terms_.erase(it);
    } else {
        terms_.insert(it, {key, coefficient});
    }
}

void LinearExpression::add_coord(VarSet subset, const Rational& coefficient)
{
    if (subset == 0)
        return;  // H(emptyset) = 0
    add_term(coord_key(subset), coefficient);
}

void LinearExpression::add(const LinearExpression& other, const Rational& scale)
{
    if (scale == 0)
        return;
    for (const auto& [key, coeff] : other.terms_)
        add_term(key, coeff * scale);
}

const Rational LinearExpression::coefficient(ColumnKey key) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const auto& term, ColumnKey k) { return term.first < k; });
    if (it != terms_.end() && it->first == key)
        return it->second;
    return 0;
}

LinearExpression LinearExpression::negated() const
{
    LinearExpression out;
    out.terms_.reserve(terms_.size());
    for (const auto& [key, coeff] : terms_)
        out.terms_.emplace_back(key, -coeff);
    return out;
}

std::strong_ordering LinearExpression::operator<=>(const LinearExpression& other) const
{
    std::size_t n = std::min(terms_.size(), other.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (terms_[i].first != other.terms_[i].first)
            return terms_[i].first <=> other.terms_[i].first;
        int c = cmp(terms_[i].second, other.terms_[i].second);
        if (c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return terms_.size() <=> other.terms_.size();
}

const char* relation_text(Relation relation)
{
    switch (relation) {
    case Relation::GreaterEqual: return ">=";
    case Relation::Equal: return "=";
    case Relation::LessEqual: return "<=";
    }
    return "?";
}

const char* tag_name(Tag tag)
{
    switch (tag) {
    case Tag::Elemental: return "elemental";
    case Tag::CopyMatch: return "copy-match";
    case Tag::CopyIndep: return "copy-indep";
    case Tag::Symmetry: return "symmetry";
    case Tag::Problem: return "problem";
    case Tag::Bound: return "bound";
    }
    return "?";
}

LinearExpression cond_entropy_expr(VarSet a, VarSet b)
{
    if (a == 0)
        throw Error("conditional entropy of an empty set");
    LinearExpression expr;
    expr.add_coord(a | b, 1);
    expr.add_coord(b, -1);
    return expr;
}

LinearExpression mutual_info_expr(VarSet i, VarSet j, VarSet k)
{
    if (i == 0 || j == 0)
        throw Error("mutual information over an empty set");
    LinearExpression expr;
    expr.add_coord(i | k, 1);
    expr.add_coord(j | k, 1);
    expr.add_coord(i | j | k, -1);
    expr.add_coord(k, -1);
    return expr;
}

std::vector<Constraint> elemental_inequalities(VarSet scope)
{
    if (scope == 0)
        throw Error("elemental inequalities need a nonempty scope");

    std::vector<int> members;
    for (int v = 0; v < 32; ++v)
        if (scope & bit(v))
            members.push_back(v);

    std::vector<Constraint> out;
    out.reserve(elemental_count(static_cast<int>(members.size())));

    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            VarSet pair = bit(members[a]) | bit(members[b]);
            VarSet pool = scope & ~pair;
            // enumerate K over subsets of scope \ {i,j}, ascending by mask
            VarSet k = 0;
            while (true) {
                out.push_back({mutual_info_expr(bit(members[a]), bit(members[b]), k),
                               Relation::GreaterEqual, 0, Tag::Elemental, scope});
                if (k == pool)
                    break;
                k = (k - pool) & pool;  // next submask in increasing order
            }
        }
    }
    for (int v : members)
        out.push_back({cond_entropy_expr(bit(v), scope & ~bit(v)),
                       Relation::GreaterEqual, 0, Tag::Elemental, scope});
    return out;
}

std::size_t elemental_count(int m)
{
    if (m < 1)
        return 0;
    if (m == 1)
        return 1;
    std::size_t pairs = static_cast<std::size_t>(m) * (m - 1) / 2;
    return pairs * (std::size_t{1} << (m - 2)) + static_cast<std::size_t>(m);
}

} // namespace entlp

#ifndef ENTLP_CORE_HPP
#define ENTLP_CORE_HPP

#include <compare>
#include <string>
#include <vector>

#include "entlp/common.hpp"

namespace entlp {

// A subset of universe variables as a bitmask over universe index order.
// The universe is capped at 30 variables so every nonempty subset fits in
// a 32-bit mask and the 2^n-1 coordinates stay addressable.
using VarSet = std::uint32_t;

constexpr int kMaxUniverseSize = 30;

inline int popcount(VarSet s) { return __builtin_popcount(s); }
inline VarSet bit(int index) { return VarSet{1} << index; }

// Named variables of one problem: base variables first (problem order),
// copy variables after them in creation order. A copy variable remembers
// which variable it copies and the global copy-step index that created it,
// which is what certificate tokens like "b'0" refer to.
class VariableUniverse {
public:
    static VariableUniverse make(std::vector<std::string> base_names);

    // Appends a copy variable; returns its universe index.
    int add_copy(const std::string& name, int source_index, int step);

    int size() const { return static_cast<int>(names_.size()); }
    int base_count() const { return base_count_; }

    int index_of(const std::string& name) const;   // throws on unknown name
    bool contains(const std::string& name) const;
    const std::string& name(int index) const { return names_.at(index); }

    bool is_copy(int index) const { return index >= base_count_; }
    int copy_source(int index) const;              // index of the copied variable
    int copy_step(int index) const;                // global step that created it
    // Universe index of the copy of `source_index` created at `step`, or -1.
    int find_copy(int source_index, int step) const;

    // Short column token: trailing digits of the name for names like "X2" or
    // "S0", the full name otherwise; copies append "p<step>" to the source
    // token ("2p0" for the step-0 copy of X2).
    std::string token(int index) const;

    VarSet base_mask() const { return (VarSet{1} << base_count_) - 1; }
    VarSet full_mask() const { return size() == 32 ? ~VarSet{0} : (VarSet{1} << size()) - 1; }

    bool operator==(const VariableUniverse&) const = default;

private:
    std::vector<std::string> names_;
    int base_count_ = 0;
    std::vector<int> copy_source_;  // parallel to copy part of names_
    std::vector<int> copy_step_;
};

// Canonical coordinate (bitmask) of a named variable subset.
VarSet coordinate_of(const VariableUniverse& universe, const std::vector<std::string>& names);

// Recovers the sorted member names of a coordinate.
std::vector<std::string> coordinate_names(const VariableUniverse& universe, VarSet subset);

// Column key space of LP expressions: entropy coordinates are their masks,
// auxiliary scalar variables (the epigraph variable of ratio programs) live
// above kAuxBase. H(emptyset) = 0 is implicit: there is no empty coordinate
// and terms over the empty set are dropped during construction.
using ColumnKey = std::uint64_t;
constexpr ColumnKey kAuxBase = ColumnKey{1} << 40;

inline ColumnKey coord_key(VarSet subset) { return subset; }
inline ColumnKey aux_key(int index) { return kAuxBase + static_cast<ColumnKey>(index); }
inline bool is_aux_key(ColumnKey key) { return key >= kAuxBase; }
inline VarSet key_subset(ColumnKey key) { return static_cast<VarSet>(key); }

// Sparse exact-rational functional over coordinates. Zero coefficients are
// never stored; all arithmetic is exact.
class LinearExpression {
public:
    LinearExpression() = default;

    void add_term(ColumnKey key, const Rational& coefficient);
    void add_coord(VarSet subset, const Rational& coefficient);  // drops the empty set
    void add(const LinearExpression& other, const Rational& scale = 1);

    const Rational coefficient(ColumnKey key) const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Terms in ascending key order.
    const std::vector<std::pair<ColumnKey, Rational>>& terms() const { return terms_; }

    LinearExpression negated() const;

    bool operator==(const LinearExpression&) const = default;
    std::strong_ordering operator<=>(const LinearExpression& other) const;

private:
    std::vector<std::pair<ColumnKey, Rational>> terms_;
};

enum class Relation { GreaterEqual, Equal, LessEqual };

const char* relation_text(Relation relation);  // ">=", "=", "<="

// Provenance of a constraint; certificate row validation keys off it.
enum class Tag { Elemental, CopyMatch, CopyIndep, Symmetry, Problem, Bound };

const char* tag_name(Tag tag);

struct Constraint {
    LinearExpression expr;
    Relation relation = Relation::GreaterEqual;
    Rational rhs = 0;
    Tag tag = Tag::Problem;
    VarSet scope = 0;  // elemental generation scope, when tag == Elemental
    int step = -1;     // copy step, when tag is CopyMatch or CopyIndep
};

// H(A|B) as a functional: h_{A u B} - h_B. Empty B gives plain h_A; A inside
// B cancels to the zero expression.
LinearExpression cond_entropy_expr(VarSet a, VarSet b);

// I(I:J|K) expanded as h_{IK} + h_{JK} - h_{IJK} - h_K, with exact
// cancellation for coinciding sets and no term for an empty K.
LinearExpression mutual_info_expr(VarSet i, VarSet j, VarSet k);

// The elemental Shannon inequalities over one scope: I(i:j|K) >= 0 for every
// unordered pair i != j in the scope and every K inside scope minus {i,j},
// plus H(i | scope minus {i}) >= 0 per member. Exactly C(m,2) 2^(m-2) + m
// constraints for a scope of size m.
std::vector<Constraint> elemental_inequalities(VarSet scope);

std::size_t elemental_count(int scope_size);

} // namespace entlp

#endif

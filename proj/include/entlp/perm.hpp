#ifndef ENTLP_PERM_HPP
#define ENTLP_PERM_HPP

#include <string>
#include <vector>

#include "entlp/core.hpp"

namespace entlp {

// A bijection on base-variable indices 0..n-1. Acts on subsets elementwise
// and hence on entropy coordinates by relabeling.
class Permutation {
public:
    static Permutation identity(int domain_size);
    static Permutation from_map(std::vector<int> map);  // validates bijectivity
    // Cycle notation over 1-based labels, e.g. "(18)(2 10 5 9)(3746)".
    // Within a cycle, multi-digit labels are space-separated; a run of digits
    // without spaces is read label by label.
    static Permutation parse_cycles(const std::string& text, int domain_size);

    int domain_size() const { return static_cast<int>(map_.size()); }
    int apply(int index) const { return map_.at(index); }
    VarSet apply(VarSet subset) const;

    Permutation after(const Permutation& first) const;  // this(first(x))
    Permutation inverse() const;
    bool is_identity() const;

    // Canonical cycle notation (fixed points omitted; "()" for the identity).
    std::string to_cycles() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    explicit Permutation(std::vector<int> map) : map_(std::move(map)) {}
    std::vector<int> map_;
};

// Closure of a generator list under composition and inverse, with a
// deterministic element order. The empty generator list yields the
// identity-only group; generators over mismatched domains are rejected.
class PermutationGroup {
public:
    static PermutationGroup closure(std::vector<Permutation> generators, int domain_size);
    static PermutationGroup trivial(int domain_size);

    std::size_t order() const { return elements_.size(); }
    int domain_size() const { return domain_size_; }
    const std::vector<Permutation>& elements() const { return elements_; }
    const std::vector<Permutation>& generators() const { return generators_; }

private:
    int domain_size_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
};

struct SubsetOrbit {
    VarSet representative = 0;        // minimal bitmask of the orbit
    std::vector<VarSet> members;      // ascending, includes the representative
};

// Partition of all nonempty subsets of 0..base_count-1 into orbits of the
// group action, ordered by representative.
std::vector<SubsetOrbit> subset_orbits(const PermutationGroup& group, int base_count);

// One equality h_I = h_rep per non-representative subset per orbit. The
// group must act on the base variables of the universe only; coordinates
// that involve copy variables are never symmetrized.
std::vector<Constraint> symmetry_equalities(const PermutationGroup& group,
                                            const VariableUniverse& universe);

// Shifts a permutation on 0..n-1 to one on 0..n fixing index 0. Secret
// sharing groups act on the participants; the universe puts the secret
// at index 0 in front of them.
Permutation lift_fixing_zero(const Permutation& p);
PermutationGroup lift_fixing_zero(const PermutationGroup& group);

} // namespace entlp

#endif

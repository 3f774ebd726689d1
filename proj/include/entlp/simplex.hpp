#ifndef ENTLP_SIMPLEX_HPP
#define ENTLP_SIMPLEX_HPP

#include <vector>

#include "entlp/common.hpp"

namespace entlp {

// Equality-standard-form program: min c.z subject to A z = b, z >= 0,
// with b >= 0 (callers normalize row signs).
struct StandardLP {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<Rational>> a;  // rows x cols
    std::vector<Rational> b;
    std::vector<Rational> c;
};

enum class SimplexStatus { Optimal, Infeasible, Unbounded, Aborted };

struct SimplexResult {
    SimplexStatus status = SimplexStatus::Aborted;
    Rational value;              // optimal objective (Optimal only)
    std::vector<Rational> z;     // primal point (Optimal only)
    std::vector<Rational> pi;    // row multipliers c_B B^-1 (Optimal),
                                 // or a Farkas certificate (Infeasible)
    std::vector<Rational> ray;   // improving ray in z-space (Unbounded; may
                                 // be empty if it involves artificials)
    long pivots = 0;
};

// Exact two-phase tableau simplex. Pivot selection starts with the most
// negative reduced cost and falls back permanently to Bland's rule once the
// warm budget is spent, which guarantees termination. Aborts with status
// Aborted when the pivot budget runs out.
SimplexResult solve_standard(const StandardLP& lp, long pivot_budget);

} // namespace entlp

#endif

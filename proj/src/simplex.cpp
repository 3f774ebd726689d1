#include "entlp/simplex.hpp"

namespace entlp {

namespace {

class Tableau {
public:
    Tableau(const StandardLP& lp, long pivot_budget)
        : m_(lp.rows), n_(lp.cols), budget_(pivot_budget)
    {
        // columns: structural 0..n-1, artificial n..n+m-1, then rhs
        width_ = n_ + m_;
        rows_.assign(m_, std::vector<Rational>(width_ + 1));
        basis_.resize(m_);
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < n_; ++j)
                rows_[i][j] = lp.a[i][j];
            rows_[i][n_ + i] = 1;
            rows_[i][width_] = lp.b[i];
            basis_[i] = n_ + i;
        }
        cost_.assign(width_ + 1, Rational(0));
    }

    // phase 1: minimize the sum of artificials
    bool run_phase_one()
    {
        for (int j = 0; j <= width_; ++j)
            cost_[j] = 0;
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j <= width_; ++j)
                cost_[j] -= rows_[i][j];
        for (int i = 0; i < m_; ++i)
            cost_[n_ + i] = 0;
        allow_artificials_ = true;
        artificial_cost_ = 1;
        return iterate();
    }

    Rational phase_one_value() const { return -cost_[width_]; }

    // Degenerate pivots that remove artificials from the basis. A row where
    // this is impossible is zero on every structural column, so it can never
    // participate in a later pivot.
    void drive_out_artificials()
    {
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < n_)
                continue;
            for (int j = 0; j < n_; ++j) {
                if (rows_[i][j] != 0) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    // phase 2 with the true costs; artificial columns may not enter
    bool run_phase_two(const std::vector<Rational>& c)
    {
        drive_out_artificials();
        for (int j = 0; j < width_; ++j)
            cost_[j] = (j < n_) ? c[j] : Rational(0);
        cost_[width_] = 0;
        for (int i = 0; i < m_; ++i) {
            int bj = basis_[i];
            Rational cb = (bj < n_) ? c[bj] : Rational(0);
            if (cb != 0)
                for (int j = 0; j <= width_; ++j)
                    cost_[j] -= cb * rows_[i][j];
        }
        allow_artificials_ = false;
        artificial_cost_ = 0;
        return iterate();
    }

    Rational objective() const { return -cost_[width_]; }

    std::vector<Rational> primal() const
    {
        std::vector<Rational> z(n_, Rational(0));
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < n_)
                z[basis_[i]] = rows_[i][width_];
        return z;
    }

    // c_B B^-1, read off the artificial columns: the reduced cost of the
    // artificial unit column e_i is its phase cost minus pi_i
    std::vector<Rational> multipliers() const
    {
        std::vector<Rational> pi(m_);
        for (int i = 0; i < m_; ++i)
            pi[i] = artificial_cost_ - cost_[n_ + i];
        return pi;
    }

    // improving direction for the entering column found unbounded; empty if
    // it would move an artificial variable
    std::vector<Rational> ray() const
    {
        if (unbounded_col_ < 0)
            return {};
        std::vector<Rational> d(n_, Rational(0));
        d[unbounded_col_] = 1;
        for (int i = 0; i < m_; ++i) {
            if (rows_[i][unbounded_col_] == 0)
                continue;
            if (basis_[i] >= n_)
                return {};
            d[basis_[i]] = -rows_[i][unbounded_col_];
        }
        return d;
    }

    bool unbounded() const { return unbounded_col_ >= 0; }
    bool aborted() const { return aborted_; }
    long pivots() const { return pivots_; }

private:
    int entering_column() const
    {
        bool bland = pivots_ >= warm_budget();
        int best = -1;
        for (int j = 0; j < width_; ++j) {
            if (!allow_artificials_ && j >= n_)
                break;
            if (cost_[j] >= 0)
                continue;
            if (bland)
                return j;
            if (best < 0 || cost_[j] < cost_[best])
                best = j;
        }
        return best;
    }

    int leaving_row(int col) const
    {
        int best = -1;
        Rational best_ratio;
        for (int i = 0; i < m_; ++i) {
            if (rows_[i][col] <= 0)
                continue;
            Rational ratio = rows_[i][width_] / rows_[i][col];
            if (best < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis_[i] < basis_[best])) {
                best = i;
                best_ratio = ratio;
            }
        }
        return best;
    }

    long warm_budget() const { return 20L * m_ + 1000; }

    // returns true when an optimal basis was reached
    bool iterate()
    {
        unbounded_col_ = -1;
        while (true) {
            int col = entering_column();
            if (col < 0)
                return true;
            int row = leaving_row(col);
            if (row < 0) {
                unbounded_col_ = col;
                return false;
            }
            if (++pivots_ > budget_) {
                aborted_ = true;
                return false;
            }
            pivot(row, col);
        }
    }

    void pivot(int row, int col)
    {
        std::vector<Rational>& pr = rows_[row];
        Rational inv = pr[col];
        if (inv != 1)
            for (int j = 0; j <= width_; ++j)
                if (pr[j] != 0)
                    pr[j] /= inv;
        for (int i = 0; i < m_; ++i) {
            if (i == row || rows_[i][col] == 0)
                continue;
            Rational factor = rows_[i][col];
            for (int j = 0; j <= width_; ++j)
                if (pr[j] != 0)
                    rows_[i][j] -= factor * pr[j];
        }
        if (cost_[col] != 0) {
            Rational factor = cost_[col];
            for (int j = 0; j <= width_; ++j)
                if (pr[j] != 0)
                    cost_[j] -= factor * pr[j];
        }
        basis_[row] = col;
    }

    int m_, n_, width_;
    long budget_;
    long pivots_ = 0;
    bool allow_artificials_ = true;
    bool aborted_ = false;
    Rational artificial_cost_ = 1;
    int unbounded_col_ = -1;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> cost_;   // reduced costs plus negated objective
    std::vector<int> basis_;
};

} // namespace

SimplexResult solve_standard(const StandardLP& lp, long pivot_budget)
{
    for (const auto& bi : lp.b)
        if (bi < 0)
            throw Error("solve_standard: negative right-hand side");

    SimplexResult result;
    Tableau tableau(lp, pivot_budget);

    bool ok = tableau.run_phase_one();
    if (!ok) {
        result.status = SimplexStatus::Aborted;  // phase 1 cannot be unbounded
        result.pivots = tableau.pivots();
        return result;
    }
    if (tableau.phase_one_value() != 0) {
        result.status = SimplexStatus::Infeasible;
        result.pi = tableau.multipliers();
        result.pivots = tableau.pivots();
        return result;
    }

    ok = tableau.run_phase_two(lp.c);
    result.pivots = tableau.pivots();
    if (!ok) {
        if (tableau.aborted()) {
            result.status = SimplexStatus::Aborted;
        } else {
            result.status = SimplexStatus::Unbounded;
            result.ray = tableau.ray();
        }
        return result;
    }
    result.status = SimplexStatus::Optimal;
    result.value = tableau.objective();
    result.z = tableau.primal();
    result.pi = tableau.multipliers();
    return result;
}

} // namespace entlp

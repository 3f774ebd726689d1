#include "entlp/lp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "entlp/simplex.hpp"

namespace entlp {

namespace {

std::string key_name(const LPModel& model, ColumnKey key)
{
    if (is_aux_key(key)) {
        std::size_t index = static_cast<std::size_t>(key - kAuxBase);
        return model.aux_names.at(index);
    }
    std::string out = "h";
    VarSet subset = key_subset(key);
    for (int v = 0; v < model.universe.size(); ++v)
        if (subset & bit(v))
            out += "_" + model.universe.token(v);
    return out;
}

struct RowKey {
    Relation relation;
    Rational rhs;
    const LinearExpression* expr;

    bool operator<(const RowKey& other) const
    {
        if (relation != other.relation)
            return relation < other.relation;
        if (int c = cmp(rhs, other.rhs); c != 0)
            return c < 0;
        return *expr < *other.expr;
    }
};

} // namespace

int LPModel::column_index(ColumnKey key) const
{
    auto it = std::lower_bound(columns.begin(), columns.end(), key);
    if (it == columns.end() || *it != key)
        return -1;
    return static_cast<int>(it - columns.begin());
}

LPModel assemble(const VariableUniverse& universe,
                 const std::vector<std::vector<Constraint>>& constraint_sets,
                 LinearExpression objective, Sense sense,
                 std::vector<std::string> aux_names)
{
    LPModel model;
    model.universe = universe;
    model.sense = sense;
    model.aux_names = std::move(aux_names);

    auto check_keys = [&](const LinearExpression& expr, const char* what) {
        for (const auto& [key, coeff] : expr.terms()) {
            if (is_aux_key(key)) {
                if (key - kAuxBase >= model.aux_names.size())
                    throw Error(std::string(what) + " references an undeclared auxiliary variable");
            } else if (key_subset(key) & ~universe.full_mask()) {
                throw Error(std::string(what) + " references a coordinate outside the universe");
            }
        }
    };
    check_keys(objective, "objective");

    std::set<RowKey> seen;
    std::set<ColumnKey> keys;
    for (const auto& set : constraint_sets) {
        for (const auto& row : set) {
            check_keys(row.expr, "constraint");
            if (!seen.insert({row.relation, row.rhs, &row.expr}).second)
                continue;  // exact duplicate
            model.rows.push_back(row);
            for (const auto& [key, coeff] : row.expr.terms())
                keys.insert(key);
        }
    }
    // the RowKeys above point into the source sets; rebuild against the
    // stored rows is unnecessary because we only needed membership
    for (const auto& [key, coeff] : objective.terms())
        keys.insert(key);
    model.columns.assign(keys.begin(), keys.end());
    model.objective = std::move(objective);
    return model;
}

namespace {

// ---------------------------------------------------------------------------
// Presolve: substitute out equality rows of at most two terms (variable
// fixings and aliases). Every rewrite step is an exact row operation
//     row -= (gamma / alpha) * record_row
// so eliminated rows can be given exact dual multipliers afterwards.
// ---------------------------------------------------------------------------

struct Record {
    ColumnKey key = 0;          // eliminated column
    int orig_row = -1;          // model row the substitution came from
    LinearExpression expr;      // the row as rewritten at creation time
    Rational rhs;
    std::map<int, Rational> applications;  // earlier records used to rewrite it
    Tag tag = Tag::Problem;
};

struct WorkRow {
    int orig_index = -1;
    LinearExpression expr;
    Relation relation = Relation::GreaterEqual;
    Rational rhs;
    std::map<int, Rational> applications;
    bool dropped = false;
};

class Presolver {
public:
    explicit Presolver(const LPModel& model) : model_(model)
    {
        rows_.reserve(model.rows.size());
        for (std::size_t i = 0; i < model.rows.size(); ++i) {
            WorkRow row;
            row.orig_index = static_cast<int>(i);
            row.expr = model.rows[i].expr;
            row.relation = model.rows[i].relation;
            row.rhs = model.rows[i].rhs;
            rows_.push_back(std::move(row));
        }
        objective_.orig_index = -1;
        objective_.expr = model.objective;
        objective_.relation = Relation::Equal;
        objective_.rhs = 0;
    }

    // May set infeasible_ with a diagnostic instead of finishing.
    void run()
    {
        bool changed = true;
        while (changed && !infeasible_) {
            changed = false;
            for (auto& row : rows_) {
                if (row.dropped)
                    continue;
                rewrite(row);
                if (row.expr.is_zero()) {
                    if (!trivially_satisfied(row)) {
                        mark_infeasible(row);
                        return;
                    }
                    row.dropped = true;
                    continue;
                }
                if (row.relation == Relation::Equal && row.expr.term_count() <= 2) {
                    adopt_record(row);
                    changed = true;
                }
            }
        }
        rewrite(objective_);
    }

    bool infeasible() const { return infeasible_; }
    const std::string& diagnostic() const { return diagnostic_; }

    const std::vector<WorkRow>& rows() const { return rows_; }
    const WorkRow& objective_row() const { return objective_; }
    const std::vector<Record>& records() const { return records_; }

    // objective value = reduced objective . h + offset
    Rational objective_offset() const { return -objective_.rhs; }

private:
    bool trivially_satisfied(const WorkRow& row) const
    {
        switch (row.relation) {
        case Relation::Equal: return row.rhs == 0;
        case Relation::GreaterEqual: return row.rhs <= 0;
        case Relation::LessEqual: return row.rhs >= 0;
        }
        return false;
    }

    void mark_infeasible(const WorkRow& row)
    {
        infeasible_ = true;
        std::set<std::string> families;
        families.insert(tag_name(model_.rows[row.orig_index].tag));
        for (const auto& [record, coeff] : row.applications)
            families.insert(tag_name(records_[record].tag));
        std::ostringstream out;
        out << "infeasible: row " << (row.orig_index + 1) << " ("
            << tag_name(model_.rows[row.orig_index].tag) << ") reduces to the contradiction 0 "
            << relation_text(row.relation) << " " << rational_to_string(row.rhs)
            << "; constraint families involved:";
        for (const auto& f : families)
            out << " " << f;
        diagnostic_ = out.str();
    }

    void adopt_record(WorkRow& row)
    {
        Record record;
        record.orig_row = row.orig_index;
        record.expr = row.expr;
        record.rhs = row.rhs;
        record.applications = row.applications;
        record.tag = model_.rows[row.orig_index].tag;
        // eliminate the larger key so canonical representatives stay minimal
        record.key = row.expr.terms().back().first;
        int id = static_cast<int>(records_.size());
        records_.push_back(std::move(record));
        substitution_[records_.back().key] = id;
        row.dropped = true;
    }

    void rewrite(WorkRow& row)
    {
        while (true) {
            int record_id = -1;
            Rational gamma;
            for (const auto& [key, coeff] : row.expr.terms()) {
                auto it = substitution_.find(key);
                if (it != substitution_.end()) {
                    record_id = it->second;
                    gamma = coeff;
                    break;
                }
            }
            if (record_id < 0)
                return;
            const Record& record = records_[record_id];
            Rational factor = gamma / record.expr.coefficient(record.key);
            row.expr.add(record.expr, -factor);
            row.rhs -= factor * record.rhs;
            row.applications[record_id] += factor;
        }
    }

    const LPModel& model_;
    std::vector<WorkRow> rows_;
    WorkRow objective_;
    std::vector<Record> records_;
    std::map<ColumnKey, int> substitution_;
    bool infeasible_ = false;
    std::string diagnostic_;
};

// Reduced program handed to the simplex after presolve.
struct ReducedLP {
    std::vector<ColumnKey> columns;
    std::vector<const WorkRow*> rows;          // kept, deduplicated
    LinearExpression objective;                // over reduced columns
};

struct InnerSolution {
    SolveStatus status = SolveStatus::Aborted;
    Rational value;                            // of the reduced objective
    std::map<ColumnKey, Rational> primal;
    std::vector<Rational> duals;               // per reduced row
    std::vector<int> farkas_rows;              // reduced row ids (Infeasible)
    bool retry_primal = false;                 // dual path could not classify
    long pivots = 0;
};

int reduced_col(const std::vector<ColumnKey>& columns, ColumnKey key)
{
    auto it = std::lower_bound(columns.begin(), columns.end(), key);
    return static_cast<int>(it - columns.begin());
}

// Direct standard-form conversion: free columns split into differences,
// slack and surplus columns per inequality row.
InnerSolution solve_primal_path(const ReducedLP& lp, Sense sense, long budget)
{
    int m = static_cast<int>(lp.rows.size());
    int n = static_cast<int>(lp.columns.size());

    StandardLP std_lp;
    std_lp.rows = m;
    std_lp.cols = 2 * n;  // slacks appended below
    std_lp.a.assign(m, {});
    std_lp.b.assign(m, Rational(0));

    std::vector<int> flip(m, 1);
    int slack_count = 0;
    for (int i = 0; i < m; ++i)
        if (lp.rows[i]->relation != Relation::Equal)
            ++slack_count;
    std_lp.cols = 2 * n + slack_count;
    for (auto& row : std_lp.a)
        row.assign(std_lp.cols, Rational(0));

    int slack = 2 * n;
    for (int i = 0; i < m; ++i) {
        const WorkRow& row = *lp.rows[i];
        Rational sign = 1;
        if (row.rhs < 0) {
            sign = -1;
            flip[i] = -1;
        }
        for (const auto& [key, coeff] : row.expr.terms()) {
            int j = reduced_col(lp.columns, key);
            std_lp.a[i][2 * j] = coeff * sign;
            std_lp.a[i][2 * j + 1] = -coeff * sign;
        }
        std_lp.b[i] = row.rhs * sign;
        Relation rel = row.relation;
        if (flip[i] < 0) {
            if (rel == Relation::LessEqual)
                rel = Relation::GreaterEqual;
            else if (rel == Relation::GreaterEqual)
                rel = Relation::LessEqual;
        }
        if (rel == Relation::LessEqual)
            std_lp.a[i][slack++] = 1;
        else if (rel == Relation::GreaterEqual)
            std_lp.a[i][slack++] = -1;
    }

    std_lp.c.assign(std_lp.cols, Rational(0));
    for (const auto& [key, coeff] : lp.objective.terms()) {
        int j = reduced_col(lp.columns, key);
        Rational c = (sense == Sense::Maximize) ? -coeff : coeff;
        std_lp.c[2 * j] = c;
        std_lp.c[2 * j + 1] = -c;
    }

    SimplexResult res = solve_standard(std_lp, budget);
    InnerSolution out;
    out.pivots = res.pivots;
    switch (res.status) {
    case SimplexStatus::Aborted:
        out.status = SolveStatus::Aborted;
        return out;
    case SimplexStatus::Unbounded:
        out.status = SolveStatus::Unbounded;
        return out;
    case SimplexStatus::Infeasible:
        out.status = SolveStatus::Infeasible;
        for (int i = 0; i < m; ++i)
            if (res.pi[i] != 0)
                out.farkas_rows.push_back(i);
        return out;
    case SimplexStatus::Optimal:
        break;
    }

    out.status = SolveStatus::Optimal;
    out.value = (sense == Sense::Maximize) ? Rational(-res.value) : res.value;
    for (int j = 0; j < n; ++j) {
        Rational v = res.z[2 * j] - res.z[2 * j + 1];
        if (v != 0)
            out.primal[lp.columns[j]] = v;
    }
    out.duals.assign(m, Rational(0));
    for (int i = 0; i < m; ++i) {
        Rational y = (sense == Sense::Maximize) ? Rational(-res.pi[i]) : res.pi[i];
        out.duals[i] = y * flip[i];
    }
    return out;
}

// Solves through the dual when the model has many more rows than columns:
// the dual's basis has one element per column, which is what the simplex
// iteration cost scales with.
InnerSolution solve_dual_path(const ReducedLP& lp, Sense sense, long budget)
{
    int m = static_cast<int>(lp.rows.size());
    int n = static_cast<int>(lp.columns.size());

    // canonicalize to a maximize problem
    LinearExpression objective = (sense == Sense::Maximize) ? lp.objective : lp.objective.negated();

    // dual variable layout: one entry per primal row, equalities get a
    // split pair
    struct DualVar {
        int row;
        int orientation;  // +1: y_i >= 0 share, -1: the negated share
    };
    std::vector<DualVar> vars;
    for (int i = 0; i < m; ++i) {
        switch (lp.rows[i]->relation) {
        case Relation::LessEqual:
            vars.push_back({i, +1});
            break;
        case Relation::GreaterEqual:
            vars.push_back({i, -1});
            break;
        case Relation::Equal:
            vars.push_back({i, +1});
            vars.push_back({i, -1});
            break;
        }
    }

    StandardLP std_lp;
    std_lp.rows = n;
    std_lp.cols = static_cast<int>(vars.size());
    std_lp.a.assign(n, std::vector<Rational>(std_lp.cols, Rational(0)));
    std_lp.b.assign(n, Rational(0));
    std_lp.c.assign(std_lp.cols, Rational(0));

    std::vector<int> flip(n, 1);
    for (int j = 0; j < n; ++j) {
        Rational cj = objective.coefficient(lp.columns[j]);
        if (cj < 0) {
            flip[j] = -1;
            cj = -cj;
        }
        std_lp.b[j] = cj;
    }
    for (int k = 0; k < std_lp.cols; ++k) {
        const WorkRow& row = *lp.rows[vars[k].row];
        for (const auto& [key, coeff] : row.expr.terms()) {
            int j = reduced_col(lp.columns, key);
            std_lp.a[j][k] = coeff * vars[k].orientation * flip[j];
        }
        std_lp.c[k] = row.rhs * vars[k].orientation;
    }

    SimplexResult res = solve_standard(std_lp, budget);
    InnerSolution out;
    out.pivots = res.pivots;
    switch (res.status) {
    case SimplexStatus::Aborted:
        out.status = SolveStatus::Aborted;
        return out;
    case SimplexStatus::Unbounded:
        // unbounded dual certifies an infeasible primal
        out.status = SolveStatus::Infeasible;
        if (!res.ray.empty())
            for (int k = 0; k < std_lp.cols; ++k)
                if (res.ray[k] != 0)
                    out.farkas_rows.push_back(vars[k].row);
        return out;
    case SimplexStatus::Infeasible:
        // dual infeasible: primal unbounded or infeasible; let the caller
        // settle it on the primal path
        out.retry_primal = true;
        return out;
    case SimplexStatus::Optimal:
        break;
    }

    out.status = SolveStatus::Optimal;
    Rational value = res.value;
    std::vector<Rational> y(m, Rational(0));
    for (int k = 0; k < std_lp.cols; ++k)
        y[vars[k].row] += res.z[k] * vars[k].orientation;
    std::map<ColumnKey, Rational> primal;
    for (int j = 0; j < n; ++j) {
        Rational v = res.pi[j] * flip[j];
        if (v != 0)
            primal[lp.columns[j]] = v;
    }
    if (sense == Sense::Minimize) {
        value = -value;
        for (auto& yi : y)
            yi = -yi;
    }
    out.value = value;
    out.primal = std::move(primal);
    out.duals = std::move(y);
    return out;
}

} // namespace

LPSolution solve(const LPModel& model, const SolveOptions& options)
{
    Presolver presolver(model);
    if (options.presolve)
        presolver.run();

    LPSolution solution;
    if (presolver.infeasible()) {
        solution.status = SolveStatus::Infeasible;
        solution.diagnostic = presolver.diagnostic();
        return solution;
    }

    // collect kept rows, dropping exact duplicates
    ReducedLP reduced;
    {
        std::set<RowKey> seen;
        for (const auto& row : presolver.rows()) {
            if (row.dropped)
                continue;
            if (!seen.insert({row.relation, row.rhs, &row.expr}).second)
                continue;
            reduced.rows.push_back(&row);
        }
        std::set<ColumnKey> keys;
        for (const WorkRow* row : reduced.rows)
            for (const auto& [key, coeff] : row->expr.terms())
                keys.insert(key);
        for (const auto& [key, coeff] : presolver.objective_row().expr.terms())
            keys.insert(key);
        reduced.columns.assign(keys.begin(), keys.end());
        reduced.objective = presolver.objective_row().expr;
    }
    Rational offset = presolver.objective_offset();

    InnerSolution inner;
    if (reduced.rows.empty()) {
        if (!reduced.objective.is_zero()) {
            solution.status = SolveStatus::Unbounded;
            solution.diagnostic = "unbounded: the objective is unconstrained";
            return solution;
        }
        inner.status = SolveStatus::Optimal;
        inner.value = 0;
    } else {
        bool prefer_dual = reduced.rows.size() > reduced.columns.size();
        inner = prefer_dual ? solve_dual_path(reduced, model.sense, options.pivot_budget)
                            : solve_primal_path(reduced, model.sense, options.pivot_budget);
        if (inner.retry_primal)
            inner = solve_primal_path(reduced, model.sense, options.pivot_budget);
    }

    solution.pivots = inner.pivots;
    switch (inner.status) {
    case SolveStatus::Aborted:
        solution.status = SolveStatus::Aborted;
        solution.diagnostic = "aborted: pivot budget exceeded";
        return solution;
    case SolveStatus::Unbounded:
        solution.status = SolveStatus::Unbounded;
        solution.diagnostic = "unbounded linear program";
        return solution;
    case SolveStatus::Infeasible: {
        solution.status = SolveStatus::Infeasible;
        std::set<std::string> families;
        for (int i : inner.farkas_rows)
            families.insert(tag_name(model.rows[reduced.rows[i]->orig_index].tag));
        for (int i : inner.farkas_rows)
            for (const auto& [record, coeff] : reduced.rows[i]->applications)
                families.insert(tag_name(presolver.records()[record].tag));
        std::ostringstream out;
        out << "infeasible: no point satisfies the combined constraints";
        if (!families.empty()) {
            out << "; constraint families involved:";
            for (const auto& f : families)
                out << " " << f;
        }
        solution.diagnostic = out.str();
        return solution;
    }
    case SolveStatus::Optimal:
        break;
    }

    solution.status = SolveStatus::Optimal;
    solution.value = inner.value + offset;

    // ----- primal reconstruction -----
    std::map<ColumnKey, Rational> values = inner.primal;
    const auto& records = presolver.records();
    for (auto it = records.rbegin(); it != records.rend(); ++it) {
        Rational residual = it->rhs;
        Rational alpha;
        for (const auto& [key, coeff] : it->expr.terms()) {
            if (key == it->key) {
                alpha = coeff;
                continue;
            }
            auto found = values.find(key);
            if (found != values.end())
                residual -= coeff * found->second;
        }
        values[it->key] = residual / alpha;
    }
    solution.primal.assign(model.columns.size(), Rational(0));
    for (std::size_t j = 0; j < model.columns.size(); ++j) {
        auto it = values.find(model.columns[j]);
        if (it != values.end())
            solution.primal[j] = it->second;
    }

    // ----- dual reconstruction -----
    solution.duals.assign(model.rows.size(), Rational(0));
    std::vector<Rational> record_weight(records.size(), Rational(0));
    for (std::size_t i = 0; i < reduced.rows.size(); ++i) {
        const WorkRow* row = reduced.rows[i];
        if (inner.duals.empty())
            continue;
        Rational y = inner.duals[i];
        if (y == 0)
            continue;
        solution.duals[row->orig_index] += y;
        for (const auto& [record, coeff] : row->applications)
            record_weight[record] += y * coeff;
    }
    for (const auto& [record, coeff] : presolver.objective_row().applications)
        record_weight[record] -= coeff;
    // expand record weights back onto original rows, newest first, since a
    // record row may have been rewritten through older records
    for (int k = static_cast<int>(records.size()) - 1; k >= 0; --k) {
        Rational w = -record_weight[k];
        if (w == 0)
            continue;
        solution.duals[records[k].orig_row] += w;
        for (const auto& [older, coeff] : records[k].applications)
            record_weight[older] += w * coeff;
    }

    // ----- exactness checks: the LPSolution contract -----
    for (std::size_t i = 0; i < model.rows.size(); ++i) {
        const Constraint& row = model.rows[i];
        Rational lhs = 0;
        for (const auto& [key, coeff] : row.expr.terms()) {
            int j = model.column_index(key);
            lhs += coeff * solution.primal[j];
        }
        bool ok = true;
        switch (row.relation) {
        case Relation::Equal: ok = lhs == row.rhs; break;
        case Relation::GreaterEqual: ok = lhs >= row.rhs; break;
        case Relation::LessEqual: ok = lhs <= row.rhs; break;
        }
        if (!ok)
            throw Error("internal: reconstructed primal violates row " + std::to_string(i + 1));
    }
    Rational check_value = 0;
    for (const auto& [key, coeff] : model.objective.terms())
        check_value += coeff * solution.primal[model.column_index(key)];
    if (check_value != solution.value)
        throw Error("internal: objective value mismatch after reconstruction");

    LinearExpression aggregate;
    Rational bound = 0;
    for (std::size_t i = 0; i < model.rows.size(); ++i) {
        if (solution.duals[i] == 0)
            continue;
        aggregate.add(model.rows[i].expr, solution.duals[i]);
        bound += solution.duals[i] * model.rows[i].rhs;
    }
    if (aggregate != model.objective)
        throw Error("internal: dual aggregate does not match the objective");
    if (bound != solution.value)
        throw Error("internal: weak-duality bound does not match the optimum");

    return solution;
}

namespace {

struct RenderedCoeff {
    std::string sign;
    std::string magnitude;
};

RenderedCoeff render_coeff(const Rational& value)
{
    Rational magnitude = abs(value);
    RenderedCoeff out;
    out.sign = value < 0 ? "-" : "+";
    if (magnitude.get_den() == 1) {
        out.magnitude = magnitude.get_num().get_str();
    } else {
        out.magnitude = decimal_string(magnitude);  // terminating by caller's check
    }
    return out;
}

bool terminating(const Rational& value)
{
    mpz_class rest = value.get_den();
    while (rest % 2 == 0)
        rest /= 2;
    while (rest % 5 == 0)
        rest /= 5;
    return rest == 1;
}

mpz_class row_denominator_lcm(const Constraint& row)
{
    mpz_class l = row.rhs.get_den();
    for (const auto& [key, coeff] : row.expr.terms())
        l = lcm(l, coeff.get_den());
    return l;
}

std::string render_expr(const LPModel& model, const LinearExpression& expr, const Rational& scale)
{
    std::string out;
    for (const auto& [key, coeff] : expr.terms()) {
        RenderedCoeff r = render_coeff(coeff * scale);
        if (!out.empty())
            out += " ";
        out += r.sign + " " + r.magnitude + " " + key_name(model, key);
    }
    return out;
}

std::string render_rhs(const Rational& value)
{
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return decimal_string(value);
}

} // namespace

std::string export_lp(const LPModel& model)
{
    std::ostringstream out;
    out << "\\ entropy linear program\n";
    out << "\\ columns: " << model.columns.size() << " rows: " << model.rows.size() << "\n";
    out << (model.sense == Sense::Maximize ? "Maximize\n" : "Minimize\n");

    for (const auto& [key, coeff] : model.objective.terms())
        if (!terminating(coeff))
            throw Error("export_lp: objective coefficients must have terminating decimals");
    out << "obj: " << render_expr(model, model.objective, 1) << "\n";

    out << "Subject To\n";
    for (std::size_t i = 0; i < model.rows.size(); ++i) {
        const Constraint& row = model.rows[i];
        std::string name = "c" + std::to_string(i + 1);
        mpz_class l = row_denominator_lcm(row);
        bool all_terminating = terminating(row.rhs);
        for (const auto& [key, coeff] : row.expr.terms())
            all_terminating = all_terminating && terminating(coeff);

        if (l == 1 || all_terminating) {
            out << name << ": " << render_expr(model, row.expr, 1) << " "
                << relation_text(row.relation) << " " << render_rhs(row.rhs) << "\n";
        } else {
            Rational scale(l);
            out << "\\ " << name << " scaled by " << l.get_str() << " from:";
            for (const auto& [key, coeff] : row.expr.terms())
                out << " " << (coeff < 0 ? "- " : "+ ") << rational_to_string(abs(coeff))
                    << " " << key_name(model, key);
            out << " " << relation_text(row.relation) << " " << rational_to_string(row.rhs) << "\n";
            out << name << ": " << render_expr(model, row.expr, scale) << " "
                << relation_text(row.relation) << " " << render_rhs(row.rhs * scale) << "\n";
        }
    }

    out << "Bounds\n";
    for (ColumnKey key : model.columns)
        out << key_name(model, key) << " free\n";
    out << "End\n";
    return out.str();
}

std::vector<CertRow> dual_to_certificate(const LPModel& model, const LPSolution& solution)
{
    if (solution.status != SolveStatus::Optimal)
        throw Error("dual_to_certificate needs an optimal solution");
    if (solution.duals.size() != model.rows.size())
        throw Error("dual_to_certificate: missing duals");
    std::vector<CertRow> rows;
    for (std::size_t i = 0; i < model.rows.size(); ++i) {
        if (solution.duals[i] == 0)
            continue;
        rows.push_back({model.rows[i].expr, model.rows[i].relation, model.rows[i].rhs,
                        solution.duals[i]});
    }
    return rows;
}

Rational verify_aggregate(const std::vector<CertRow>& rows, const LinearExpression& objective,
                          Sense sense)
{
    LinearExpression aggregate;
    Rational bound = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const CertRow& row = rows[i];
        bool ok = true;
        if (sense == Sense::Maximize) {
            if (row.relation == Relation::GreaterEqual)
                ok = row.multiplier <= 0;
            else if (row.relation == Relation::LessEqual)
                ok = row.multiplier >= 0;
        } else {
            if (row.relation == Relation::GreaterEqual)
                ok = row.multiplier >= 0;
            else if (row.relation == Relation::LessEqual)
                ok = row.multiplier <= 0;
        }
        if (!ok)
            throw Error("certificate row " + std::to_string(i + 1) +
                        ": multiplier sign is inadmissible for its relation");
        aggregate.add(row.expr, row.multiplier);
        bound += row.multiplier * row.rhs;
    }
    if (aggregate != objective) {
        LinearExpression residual = aggregate;
        residual.add(objective, -1);
        std::ostringstream out;
        out << "certificate aggregate does not equal the objective; " << residual.term_count()
            << " residual coordinates";
        throw Error(out.str());
    }
    return bound;
}

} // namespace entlp

#include "entlp/certificate.hpp"

#include <algorithm>
#include <sstream>

namespace entlp {

int resolve_token(const VariableUniverse& universe, const std::string& token)
{
    if (token.empty())
        throw CertificateError("empty token");
    char letter = token[0];
    if (letter < 'a' || letter >= 'a' + universe.base_count())
        throw CertificateError("unknown token '" + token + "'");
    int base = letter - 'a';
    if (token.size() == 1)
        return base;
    if (token[1] != '\'')
        throw CertificateError("unknown token '" + token + "'");
    std::string digits = token.substr(2);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw CertificateError("malformed copy token '" + token + "'");
    int step = std::stoi(digits);
    int index = universe.find_copy(base, step);
    if (index < 0)
        throw CertificateError("token '" + token + "' names a copy this problem never makes");
    return index;
}

namespace {

std::string trim(const std::string& s)
{
    std::size_t start = s.find_first_not_of(" \t\r");
    if (start == std::string::npos)
        return "";
    std::size_t end = s.find_last_not_of(" \t\r");
    return s.substr(start, end - start + 1);
}

LinearExpression parse_row_expr(const std::string& text, const VariableUniverse& universe,
                                Relation& relation, Rational& rhs, int row_number)
{
    auto fail = [&](const std::string& why) -> CertificateError {
        return CertificateError("certificate row " + std::to_string(row_number) + ": " + why);
    };

    LinearExpression expr;
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
    };

    int sign = +1;
    bool have_sign = false;
    bool any_term = false;
    while (true) {
        skip_space();
        if (pos >= text.size())
            throw fail("missing relation");
        char c = text[pos];
        if (c == '+' || c == '-') {
            if (have_sign)
                throw fail("two signs in a row");
            sign = (c == '+') ? +1 : -1;
            have_sign = true;
            ++pos;
            continue;
        }
        if (c == 'H') {
            if (pos + 1 >= text.size() || text[pos + 1] != '{')
                throw fail("expected H{...}");
            std::size_t close = text.find('}', pos);
            if (close == std::string::npos)
                throw fail("unterminated H{...}");
            std::string body = text.substr(pos + 2, close - pos - 2);
            pos = close + 1;

            VarSet subset = 0;
            std::string token;
            std::istringstream tokens(body);
            while (std::getline(tokens, token, '.')) {
                token = trim(token);
                subset |= bit(resolve_token(universe, token));
            }
            if (subset == 0)
                throw fail("empty term");
            expr.add_coord(subset, sign);
            any_term = true;
            sign = +1;
            have_sign = false;
            continue;
        }
        break;  // relation starts here
    }
    if (!any_term)
        throw fail("no terms");
    if (have_sign)
        throw fail("dangling sign");

    skip_space();
    if (text.compare(pos, 2, ">=") == 0) {
        relation = Relation::GreaterEqual;
        pos += 2;
    } else if (text.compare(pos, 2, "<=") == 0) {
        relation = Relation::LessEqual;
        pos += 2;
    } else if (text.compare(pos, 1, "=") == 0) {
        relation = Relation::Equal;
        pos += 1;
    } else {
        throw fail("expected one of >=, =, <=");
    }

    std::string rest = trim(text.substr(pos));
    if (rest.empty())
        throw fail("missing right-hand side");
    try {
        rhs = parse_rational(rest);
    } catch (const Error& e) {
        throw fail(e.what());
    }
    return expr;
}

} // namespace

std::vector<CertRow> parse_certificate(const std::string& text, const VariableUniverse& universe)
{
    std::vector<CertRow> rows;
    std::istringstream in(text);
    std::string line;
    std::string pending;
    int pending_number = 0;
    int line_number = 0;

    while (std::getline(in, line)) {
        ++line_number;
        std::string body = trim(line);
        if (body.empty())
            continue;
        if (pending.empty()) {
            pending = body;
            pending_number = static_cast<int>(rows.size()) + 1;
            continue;
        }
        const std::string keyword = "with coefficient";
        if (body.compare(0, keyword.size(), keyword) != 0)
            throw CertificateError("certificate row " + std::to_string(pending_number) +
                                   ": missing 'with coefficient' line");
        Rational multiplier;
        try {
            multiplier = parse_rational(body.substr(keyword.size()));
        } catch (const Error& e) {
            throw CertificateError("certificate row " + std::to_string(pending_number) + ": " +
                                   e.what());
        }

        CertRow row;
        row.expr = parse_row_expr(pending, universe, row.relation, row.rhs, pending_number);
        row.multiplier = multiplier;
        rows.push_back(std::move(row));
        pending.clear();
    }
    if (!pending.empty())
        throw CertificateError("certificate row " + std::to_string(pending_number) +
                               ": missing coefficient line at end of input");
    return rows;
}

namespace {

bool unit_coefficients(const LinearExpression& expr)
{
    for (const auto& [key, coeff] : expr.terms())
        if (coeff != 1 && coeff != -1)
            return false;
    return true;
}

VarSet term_subset(const std::pair<ColumnKey, Rational>& term)
{
    return key_subset(term.first);
}

struct StepInfo {
    const CopyStep* step;
    VarSet primed_z;         // the copy variables the step creates
    LinearExpression indep;  // the emitted independence equality
};

// h_S -> h_{S with z replaced by the step's copy}
VarSet prime_subset(const VariableUniverse& universe, const CopyStep& step, VarSet subset)
{
    VarSet out = subset & ~step.z_vars;
    for (int v = 0; v < universe.size(); ++v)
        if (subset & step.z_vars & bit(v))
            out |= bit(universe.find_copy(v, step.step_id));
    return out;
}

} // namespace

RowClass classify_row(const CertRow& row, const GuessProblem& problem)
{
    const VariableUniverse& universe = problem.universe;
    VarSet base = universe.base_mask();
    std::vector<std::string> hints;

    auto fail = [&]() -> CertificateError {
        std::ostringstream out;
        out << "row does not match any constraint family";
        if (!hints.empty()) {
            out << " (nearest miss:";
            for (const auto& h : hints)
                out << " " << h << ";";
            out << ")";
        }
        return CertificateError(out.str());
    };

    const auto& terms = row.expr.terms();

    // vertex bound: h_v <= 1
    if (row.relation == Relation::LessEqual) {
        if (row.rhs == 1 && terms.size() == 1 && terms[0].second == 1 &&
            popcount(term_subset(terms[0])) == 1 && (term_subset(terms[0]) & base)) {
            RowClass out{RowKind::VertexBound};
            out.vertex = __builtin_ctz(term_subset(terms[0]));
            return out;
        }
        hints.push_back("a <= row must be a single h_v with rhs 1");
        throw fail();
    }

    if (row.rhs != 0) {
        hints.push_back("nonzero rhs outside a vertex bound");
        throw fail();
    }
    if (!unit_coefficients(row.expr)) {
        hints.push_back("coefficients are not all +1/-1");
        throw fail();
    }

    // elemental over one of the declared scopes
    if (row.relation == Relation::GreaterEqual) {
        std::vector<VarSet> positive, negative;
        for (const auto& term : terms)
            (term.second > 0 ? positive : negative).push_back(term_subset(term));

        VarSet i_set = 0, j_set = 0, k_set = 0;
        bool shaped = false;
        if (positive.size() == 2 && negative.size() == 2) {
            VarSet p1 = positive[0], p2 = positive[1];
            if ((p1 | p2) == std::max(negative[0], negative[1]) &&
                (p1 & p2) == std::min(negative[0], negative[1])) {
                k_set = p1 & p2;
                i_set = p1 & ~k_set;
                j_set = p2 & ~k_set;
                shaped = true;
            }
        } else if (positive.size() == 2 && negative.size() == 1) {
            VarSet p1 = positive[0], p2 = positive[1];
            if ((p1 & p2) == 0 && (p1 | p2) == negative[0]) {
                i_set = p1;
                j_set = p2;
                k_set = 0;
                shaped = true;
            }
        } else if (positive.size() == 1 && negative.size() == 1) {
            // H(i | scope minus i): positive on the full scope
            VarSet p = positive[0], m = negative[0];
            if ((m & ~p) == 0 && popcount(p & ~m) == 1) {
                for (VarSet scope : block_scopes(universe, problem.blocks))
                    if (p == scope)
                        return {RowKind::Elemental, scope};
                i_set = p & ~m;
                hints.push_back("monotonicity row is not over a declared scope");
            }
        }
        if (shaped && popcount(i_set) == 1 && popcount(j_set) == 1 && i_set != j_set) {
            VarSet all = i_set | j_set | k_set;
            for (VarSet scope : block_scopes(universe, problem.blocks))
                if ((all & ~scope) == 0)
                    return {RowKind::Elemental, scope};
            hints.push_back("I(i:j|K) shape outside every declared scope");
        }

        // dependence relaxation: h_S - h_{S u v} >= 0 with N(v) inside S
        if (positive.size() == 1 && negative.size() == 1) {
            VarSet s = positive[0], big = negative[0];
            if ((s & ~big) == 0 && popcount(big & ~s) == 1) {
                int v = __builtin_ctz(big & ~s);
                if ((bit(v) & base) && (problem.graph.in_neighbors(v) & ~s) == 0) {
                    RowClass out{RowKind::Dependence};
                    out.vertex = v;
                    return out;
                }
                hints.push_back("h_S - h_{S u v} with the neighbourhood of v not inside S");
            }
        }
        throw fail();
    }

    // equality families: orientation-free
    if (row.relation == Relation::Equal) {
        // copy equalities
        std::vector<StepInfo> steps;
        {
            for (const auto& block : problem.blocks) {
                VarSet block_universe = universe.base_mask();
                for (const auto& step : block.steps) {
                    StepInfo info;
                    info.step = &step;
                    info.primed_z = prime_subset(universe, step, step.z_vars) & ~step.z_vars;
                    VarSet after = block_universe | info.primed_z;
                    info.indep = LinearExpression();
                    info.indep.add_coord(step.x_vars | info.primed_z, 1);
                    info.indep.add_coord(after & ~info.primed_z, 1);
                    info.indep.add_coord(after, -1);
                    info.indep.add_coord(step.x_vars, -1);
                    block_universe = after;
                    steps.push_back(std::move(info));
                }
            }
        }

        for (const auto& info : steps) {
            if (row.expr == info.indep || row.expr == info.indep.negated())
                return {RowKind::CopyIndep, 0, info.step->step_id};
        }
        if (terms.size() == 2 && terms[0].second + terms[1].second == 0) {
            VarSet c1 = term_subset(terms[0]);
            VarSet c2 = term_subset(terms[1]);
            for (const auto& info : steps) {
                const CopyStep& step = *info.step;
                for (auto [original, primed] : {std::make_pair(c1, c2), std::make_pair(c2, c1)}) {
                    if ((original & step.z_vars) == 0)
                        continue;
                    if (original & ~(step.x_vars | step.z_vars))
                        continue;
                    if (prime_subset(universe, step, original) == primed)
                        return {RowKind::CopyMatch, 0, step.step_id};
                }
            }

            // symmetry: some group element maps one side to the other
            if ((c1 & ~base) == 0 && (c2 & ~base) == 0) {
                for (const auto& g : problem.group.elements())
                    if (g.apply(c1) == c2)
                        return {RowKind::Symmetry};
                hints.push_back("no group element maps one side to the other");
            }

            // the graph equality itself: h_{N(v) u v} = h_{N(v)} or wider
            for (auto [small, big] : {std::make_pair(c1, c2), std::make_pair(c2, c1)}) {
                if ((small & ~big) == 0 && popcount(big & ~small) == 1) {
                    int v = __builtin_ctz(big & ~small);
                    if ((bit(v) & base) && (problem.graph.in_neighbors(v) & ~small) == 0) {
                        RowClass out{RowKind::Dependence};
                        out.vertex = v;
                        return out;
                    }
                }
            }
        }
        hints.push_back("equality row matches no copy, symmetry or dependence equality");
        throw fail();
    }
    throw fail();
}

Rational verify(const std::vector<CertRow>& rows, const GuessProblem& problem)
{
    for (std::size_t i = 0; i < rows.size(); ++i) {
        try {
            classify_row(rows[i], problem);
        } catch (const CertificateError& e) {
            throw CertificateError("row " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    LinearExpression objective;
    objective.add_coord(problem.universe.base_mask(), 1);
    try {
        return verify_aggregate(rows, objective, Sense::Maximize);
    } catch (const Error& e) {
        throw CertificateError(e.what());
    }
}

} // namespace entlp

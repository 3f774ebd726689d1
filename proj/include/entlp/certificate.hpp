#ifndef ENTLP_CERTIFICATE_HPP
#define ENTLP_CERTIFICATE_HPP

#include <string>
#include <vector>

#include "entlp/guessing.hpp"
#include "entlp/lp.hpp"

namespace entlp {

struct CertificateError : Error {
    explicit CertificateError(const std::string& what) : Error(what) {}
};

// Resolves a certificate token against a universe: letters name the base
// variables by position ("a" is the first), and "<letter>'<digit>" names the
// copy of that variable created at the given copy step ("b'0" is the step-0
// copy of the second base variable).
int resolve_token(const VariableUniverse& universe, const std::string& token);

// Parses the certificate text grammar: each row is
//     TERM ((+|-) TERM)* REL RHS
// on one line, followed by a line "with coefficient <rational>"; TERM is
// H{tok(.tok)*} with an optional leading sign, REL is >=, = or <=, and blank
// lines separate rows. Whitespace around signs is arbitrary.
std::vector<CertRow> parse_certificate(const std::string& text,
                                       const VariableUniverse& universe);

enum class RowKind { Elemental, Dependence, CopyMatch, CopyIndep, Symmetry, VertexBound };

struct RowClass {
    RowKind kind;
    VarSet scope = 0;  // Elemental: the declared scope it belongs to
    int step = -1;     // CopyMatch / CopyIndep: the copy step
    int vertex = -1;   // Dependence / VertexBound: the vertex
};

// Decides which constraint family of the problem admits this row:
//   elemental     I(i:j|K) or H(i | scope minus i) over a declared scope
//   dependence    h_S - h_{S u v} with the in-neighbourhood of v inside S
//   copy-match /  exactly an equality emitted by a copy step (either
//   copy-indep    orientation)
//   symmetry      h_A - h_B with a group element mapping A to B
//   vertex-bound  h_v <= 1
// Anything else is rejected with a diagnostic naming the nearest miss.
RowClass classify_row(const CertRow& row, const GuessProblem& problem);

// Full certificate check for a maximize-sense guessing problem: every row
// classifies, multiplier signs are admissible, and the exact aggregate of
// multiplier * expression equals the objective functional h_{all base}.
// Returns the proven upper bound, the sum of multiplier * rhs.
Rational verify(const std::vector<CertRow>& rows, const GuessProblem& problem);

} // namespace entlp

#endif

#ifndef ENTLP_PROBLEM_IO_HPP
#define ENTLP_PROBLEM_IO_HPP

#include <string>
#include <vector>

#include "entlp/guessing.hpp"
#include "entlp/secret_sharing.hpp"

namespace entlp {

// One parsed problem-description file. Exactly the member matching `kind`
// is meaningful.
struct Problem {
    enum class Kind { SecretSharing, Guessing };
    Kind kind = Kind::Guessing;
    std::string name;
    RatioProblem ratio;
    GuessProblem guess;
};

// Line-oriented format with sections  kind: / vars: / minsets: or edges: /
// symmetry: / copies: / scopes:  — see the README for the grammar. Copy
// recipes use the textual notation and "block" lines group steps.
Problem parse_problem(const std::string& text, const std::string& name);

// Canonical form: parse(serialize(p)) serializes back byte-identically.
std::string serialize_problem(const Problem& problem);

// Non-fatal validation findings (a generator that is not an automorphism of
// the structure or graph, for instance). Such problems still build LPs; a
// wrong symmetry group surfaces as an infeasible program.
std::vector<std::string> validate_problem(const Problem& problem);

// "catalog:NAME" or a path to a problem file.
Problem load_problem(const std::string& spec);

std::vector<std::string> catalog_names();
const std::string& catalog_text(const std::string& name);  // canonical file text

RatioProblem catalog_structure(const std::string& name);  // V A A* F F* Fhat Q Q*
GuessProblem catalog_graph(const std::string& name);      // C5 K2 K3 R Rminus RS RL

} // namespace entlp

#endif

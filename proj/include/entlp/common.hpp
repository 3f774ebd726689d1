#ifndef ENTLP_COMMON_HPP
#define ENTLP_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace entlp {

// Every coefficient, bound and solution value in this library is an exact
// arbitrary-precision fraction. No floating point participates in any
// computation; decimals are produced for display only.
using Rational = mpq_class;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a linear program has no solution; carries a diagnostic that
// names the constraint families involved in the contradiction.
struct InfeasibleError : Error {
    explicit InfeasibleError(const std::string& what) : Error(what) {}
};

// Raised when a configurable resource guard (pivot budget, enumeration
// guard) is exceeded.
struct ResourceGuardError : Error {
    explicit ResourceGuardError(const std::string& what) : Error(what) {}
};

// Parses "p/q", "-p/q" or a plain integer. Rejects anything else.
Rational parse_rational(const std::string& text);

// "p/q", or just "p" for integers.
std::string rational_to_string(const Rational& value);

// Display form: exact terminating decimal when the reduced denominator is of
// the form 2^a 5^b ("2.5"), otherwise "≈" plus the value rounded to nine
// decimal places ("≈6.692028986").
std::string decimal_string(const Rational& value);

} // namespace entlp

#endif

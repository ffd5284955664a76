#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "m0n/polynomial.hpp"

namespace m0n {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses expressions in the canonical rendering, extended with parentheses
/// and integer powers of sub-expressions, e.g. "(D{1,2,3,4}+D{2,3,4})^2 + a2*a3".
/// Every generator is validated against n.
Polynomial parse_polynomial(std::string_view text, int n);

/// Parses a single monomial (coefficient must be 1).
Monomial parse_monomial(std::string_view text, int n);

}  // namespace m0n

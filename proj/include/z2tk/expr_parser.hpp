#pragma once

#include "z2tk/exact_arith.hpp"

#include <map>
#include <string>
#include <string_view>

namespace z2tk {

class ParseError : public Error {
  public:
    using Error::Error;
};

/// Linear combination of named symbols with rational-function coefficients.
/// The empty key holds the scalar part.
using LinearCombination = std::map<std::string, RationalFunction>;

/// Parses expressions such as "E^2*v1 - E*v2 - i/(2*lambda)*(lambda-2*E^2)*v7".
/// Reserved identifiers: E, lambda, i. Any other identifier is a symbol and may
/// only appear linearly.
LinearCombination parse_linear_combination(std::string_view text);

/// Scalar-only variant: rejects symbols.
RationalFunction parse_rational_function(std::string_view text);

/// Constant-only variant for CLI literals of the form "a/b+c/d*i".
GaussianRational parse_gaussian_rational(std::string_view text);

} // namespace z2tk

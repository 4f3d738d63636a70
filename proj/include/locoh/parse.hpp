#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "locoh/nested_poly.hpp"

namespace locoh {

/// Text form shared by the CLI and the test fixtures:
///
///   poly   := [+|-] term { (+|-) term }
///   term   := factor { '*' factor }
///   factor := integer [ '/' integer ] | var [ '^' integer ]
///   var    := X<i> | U<i> | X | Y | Z | U | V | W
///
/// X, Y, Z alias X1, X2, X3 and U, V, W alias U1, U2, U3. Whitespace is
/// ignored. Generator lists are separated by ',' or ';'.

struct VariableCounts {
  std::size_t x_vars = 0;
  std::size_t u_vars = 0;
};

/// Highest X- and U-indices mentioned in `text`.
VariableCounts scan_variables(std::string_view text);

NestedPolynomial parse_polynomial(std::string_view text, const CoefficientRing& ring, std::size_t u_vars);
std::vector<NestedPolynomial> parse_generators(std::string_view text, const CoefficientRing& ring,
                                               std::size_t u_vars);
/// An element of R_0; U-variables are rejected.
Poly parse_coefficient(std::string_view text, const CoefficientRing& ring);

std::string format(const Poly& p);
std::string format(const NestedPolynomial& f);

}  // namespace locoh

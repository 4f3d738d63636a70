#include "locoh/builtins.hpp"

#include <algorithm>

#include "locoh/error.hpp"
#include "locoh/parse.hpp"

namespace locoh {

const std::vector<BuiltinExample>& builtin_examples() {
  static const std::vector<BuiltinExample> examples{
      {"singh", "X*U+Y*V+Z*W", 3, 3, false, "K[X,Y,Z][U,V,W]/(XU+YV+ZW), s = 3"},
      {"section3", "2*X^2*V^2+2*X*Y*U*V+Y^2*U^2", 2, 2, false, "K[X,Y][U,V]/(2X^2V^2+2XYUV+Y^2U^2), s = 2"},
      {"remark16", "X*U^2+Y*U*V, X*U*V+Y*V^2", 2, 2, true, "U_i(X_1U_1+X_2U_2), i = 1, 2; content ideal only"},
  };
  return examples;
}

const BuiltinExample& builtin_example(std::string_view name) {
  for (const auto& ex : builtin_examples())
    if (ex.name == name) return ex;
  std::string known;
  for (const auto& ex : builtin_examples()) known += (known.empty() ? "" : ", ") + ex.name;
  throw Error(ErrorKind::InvalidArgument, "unknown builtin '" + std::string(name) + "' (known: " + known + ")");
}

GradedIdeal builtin_ideal(std::string_view name, const ScalarDomain& base) {
  const auto& ex = builtin_example(name);
  return parse_ideal(ex.generators, base, ex.x_vars, ex.u_vars);
}

GradedIdeal parse_ideal(std::string_view text, const ScalarDomain& base, std::optional<std::size_t> x_vars,
                        std::optional<std::size_t> u_vars) {
  const VariableCounts used = scan_variables(text);
  if (x_vars && *x_vars < used.x_vars) {
    throw Error(ErrorKind::InvalidArgument, "--m " + std::to_string(*x_vars) + " but the input uses X" +
                                                std::to_string(used.x_vars));
  }
  if (u_vars && *u_vars < used.u_vars) {
    throw Error(ErrorKind::InvalidArgument, "--s " + std::to_string(*u_vars) + " but the input uses U" +
                                                std::to_string(used.u_vars));
  }
  const CoefficientRing ring{base, x_vars.value_or(used.x_vars)};
  const std::size_t s = u_vars.value_or(std::max<std::size_t>(used.u_vars, 1));
  return GradedIdeal(ring, s, parse_generators(text, ring, s));
}

}  // namespace locoh

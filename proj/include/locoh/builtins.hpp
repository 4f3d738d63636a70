#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locoh/nested_poly.hpp"

namespace locoh {

struct BuiltinExample {
  std::string name;
  std::string generators;  // parseable text
  std::size_t x_vars;
  std::size_t u_vars;
  bool content_only;       // only the content ideal is meaningful
  std::string summary;
};

const std::vector<BuiltinExample>& builtin_examples();

/// Throws InvalidArgument for an unknown name.
const BuiltinExample& builtin_example(std::string_view name);

GradedIdeal builtin_ideal(std::string_view name, const ScalarDomain& base = ScalarDomain::rationals());

/// Parses comma-separated generators. Variable counts default to the largest
/// index used; explicit counts smaller than that are rejected.
GradedIdeal parse_ideal(std::string_view text, const ScalarDomain& base, std::optional<std::size_t> x_vars = {},
                        std::optional<std::size_t> u_vars = {});

}  // namespace locoh

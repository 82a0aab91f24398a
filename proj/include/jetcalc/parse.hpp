#pragma once

#include "jetcalc/ring.hpp"

#include <map>
#include <string>
#include <string_view>

namespace jetcalc {

// Polynomial expressions such as "a1^3 - 2*a1^2*c1 + 2/3*a1^3". Identifiers are
// looked up in env first, then among the table's generators.
GradedClass parse_class(const TablePtr& table, std::string_view text,
                        const std::map<std::string, GradedClass>& env = {});

Scalar parse_scalar(std::string_view text);

}  // namespace jetcalc

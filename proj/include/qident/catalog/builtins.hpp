#pragma once

#include <map>
#include <string>
#include <vector>

#include "qident/qseries.hpp"

namespace qident::catalog {

/// Builds a series the DSL cannot express directly. Arguments are monomials
/// already evaluated in the entry's environment; missing ones default to 0.
QSeries builtin_builder(const std::string& name, const std::map<std::string, Monomial>& args, int order,
                        Mode mode);

bool has_builtin(const std::string& name);
const std::vector<std::string>& builtin_names();

}  // namespace qident::catalog

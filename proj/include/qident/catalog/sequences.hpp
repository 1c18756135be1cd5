#pragma once

#include <string>
#include <vector>

#include "qident/rational.hpp"

namespace qident::catalog {

/// Closed-form integer sequences built from the enumeration counters, indexed
/// from n = 1.
BigRational sequence_value(const std::string& name, int n);

bool has_sequence(const std::string& name);
const std::vector<std::string>& sequence_names();

}  // namespace qident::catalog

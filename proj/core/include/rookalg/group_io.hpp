#pragma once

#include <string>

#include "rookalg/group_table.hpp"

namespace rookalg {

/// Loads and fully validates a group definition file. Throws
/// std::invalid_argument with a located message on the first failure.
FiniteGroupTable loadGroupFile(const std::string& path);

/// Same, from JSON text.
FiniteGroupTable parseGroupJson(const std::string& text);

std::string groupToJson(const FiniteGroupTable& g);

void writeGroupFile(const FiniteGroupTable& g, const std::string& path);

}  // namespace rookalg

#pragma once

#include <cstddef>
#include <string_view>

namespace scamwatch::attribution {

// Levenshtein distance over bytes (insert, delete, substitute; unit costs).
std::size_t levenshtein(std::string_view a, std::string_view b);

}  // namespace scamwatch::attribution

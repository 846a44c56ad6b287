#pragma once

// External word syntax: "e" for the identity, digits "121" for rank <= 9,
// comma-separated letters "1,2,10" otherwise. Letters are 1-based.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rcsa/weyl_group.hpp"

namespace rcsa {

/// 0-based letters of a word; the word need not be reduced. Throws
/// std::invalid_argument on malformed input.
std::vector<int> parse_word(std::string_view text, int rank);

std::string format_word(const GroupTable& t, Element w);

/// 1-based letters as a JSON array.
nlohmann::json word_json(const GroupTable& t, Element w);

/// Subset of simple roots as 1-based indices.
std::vector<int> simple_indices(SimpleSet s);

}  // namespace rcsa

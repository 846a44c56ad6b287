#include "rcsa/words.hpp"

#include <charconv>
#include <stdexcept>

namespace rcsa {

namespace {

int parse_letter(std::string_view token, int rank) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
    throw std::invalid_argument("malformed word letter '" + std::string(token) + "'");
  if (value < 1 || value > rank)
    throw std::invalid_argument("word letter " + std::string(token) + " out of range 1.." +
                                std::to_string(rank));
  return value - 1;
}

}  // namespace

std::vector<int> parse_word(std::string_view text, int rank) {
  if (text == "e") return {};
  if (text.empty()) throw std::invalid_argument("empty word; use 'e' for the identity");
  std::vector<int> letters;
  if (text.find(',') != std::string_view::npos || rank > 9) {
    std::size_t start = 0;
    while (true) {
      std::size_t comma = text.find(',', start);
      letters.push_back(parse_letter(text.substr(start, comma - start), rank));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return letters;
  }
  for (char c : text) letters.push_back(parse_letter(std::string_view(&c, 1), rank));
  return letters;
}

std::string format_word(const GroupTable& t, Element w) {
  auto letters = t.word(w);
  if (letters.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (t.rank() > 9 && k > 0) out += ',';
    out += std::to_string(letters[k] + 1);
  }
  return out;
}

nlohmann::json word_json(const GroupTable& t, Element w) {
  auto j = nlohmann::json::array();
  for (auto letter : t.word(w)) j.push_back(letter + 1);
  return j;
}

std::vector<int> simple_indices(SimpleSet s) {
  std::vector<int> out;
  for (int i = 0; s != 0; ++i, s >>= 1)
    if (s & 1u) out.push_back(i + 1);
  return out;
}

}  // namespace rcsa

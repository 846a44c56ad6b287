#pragma once

// Fully enumerated finite Weyl groups.
//
// Every element is fingerprinted by its inversion set
//   Phi+(w) = { beta in Phi+ : w^{-1} beta < 0 },
// stored as a bitset over positive-root indices. Elements are indexed by
// length, then by canonical (lexicographically smallest) reduced word; the
// identity is index 0.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "rcsa/root_system.hpp"

namespace rcsa {

/// Bit i stands for the simple root alpha_{i+1}.
using SimpleSet = std::uint32_t;

inline int popcount(SimpleSet s) { return std::popcount(s); }

/// Bitset over positive-root indices. Two words cover every group the
/// enumerator accepts.
class InversionSet {
 public:
  static constexpr int kCapacity = 128;

  bool test(int k) const { return (bits_[k >> 6] >> (k & 63)) & 1u; }
  void set(int k) { bits_[k >> 6] |= std::uint64_t{1} << (k & 63); }
  void reset(int k) { bits_[k >> 6] &= ~(std::uint64_t{1} << (k & 63)); }
  int count() const { return std::popcount(bits_[0]) + std::popcount(bits_[1]); }
  bool subset_of(const InversionSet& other) const {
    return (bits_[0] & ~other.bits_[0]) == 0 && (bits_[1] & ~other.bits_[1]) == 0;
  }
  std::uint64_t word(int i) const { return bits_[i]; }
  std::vector<int> indices() const;

  friend bool operator==(const InversionSet&, const InversionSet&) = default;

  struct Hash {
    std::size_t operator()(const InversionSet& s) const {
      std::uint64_t h = s.bits_[0] * 0x9E3779B97F4A7C15ull;
      h ^= (s.bits_[1] + 0x632BE59BD9B4E019ull) * 0xC2B2AE3D27D4EB4Full;
      return static_cast<std::size_t>(h ^ (h >> 31));
    }
  };

 private:
  std::array<std::uint64_t, 2> bits_{};
};

/// Handle to an element of a GroupTable.
struct Element {
  std::uint32_t index = 0;
  friend auto operator<=>(Element, Element) = default;
};

/// Expanded view of one element.
struct WeylElement {
  std::vector<SignedRoot> perm;  // w(beta_k) for every positive root beta_k
  InversionSet inv;
  int length = 0;
  std::vector<int> word;  // canonical reduced word, 0-based letters
};

class GroupTable {
 public:
  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank(); }
  std::size_t size() const { return length_.size(); }

  Element identity() const { return {0}; }
  Element longest() const { return {static_cast<std::uint32_t>(size() - 1)}; }

  const InversionSet& inversions(Element w) const { return inv_[w.index]; }
  int length(Element w) const { return length_[w.index]; }
  std::span<const std::uint8_t> word(Element w) const {
    return {word_arena_.data() + word_offset_[w.index],
            word_arena_.data() + word_offset_[w.index + 1]};
  }

  /// w s_i and s_i w.
  Element right_mult(Element w, int i) const { return {right_[w.index * stride() + i]}; }
  Element left_mult(Element w, int i) const { return {left_[w.index * stride() + i]}; }
  Element inverse(Element w) const { return {inverse_[w.index]}; }

  /// Elements [0, length_end(l)) are exactly those of length <= l.
  std::size_t length_end(int l) const { return layer_end_[l]; }
  int max_length() const { return static_cast<int>(layer_end_.size()) - 1; }

  std::optional<Element> find(const InversionSet& inv) const;

  /// Product of an arbitrary (not necessarily reduced) word of 0-based letters.
  Element from_word(std::span<const int> letters) const;

  WeylElement element(Element w) const;

 private:
  friend GroupTable enumerate_group(const RootSystem& rs, std::size_t cap);
  explicit GroupTable(RootSystem rs) : rs_(std::move(rs)) {}
  std::size_t stride() const { return static_cast<std::size_t>(rs_.rank()); }

  RootSystem rs_;
  std::vector<InversionSet> inv_;
  std::vector<std::uint16_t> length_;
  std::vector<std::uint32_t> word_offset_;
  std::vector<std::uint8_t> word_arena_;
  std::vector<std::uint32_t> right_;
  std::vector<std::uint32_t> left_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> layer_end_;
  std::unordered_map<InversionSet, std::uint32_t, InversionSet::Hash> lookup_;
};

inline constexpr std::size_t kDefaultGroupCap = 10'000'000;

/// Breadth-first closure of the identity under right multiplication by simple
/// reflections. Throws std::length_error once more than `cap` elements appear.
GroupTable enumerate_group(const RootSystem& rs, std::size_t cap = kDefaultGroupCap);

Element multiply(const GroupTable& t, Element a, Element b);
inline Element inverse(const GroupTable& t, Element a) { return t.inverse(a); }
inline int length(const GroupTable& t, Element a) { return t.length(a); }

/// {alpha : l(s_alpha a) < l(a)}; these are the simple roots in Phi+(a).
SimpleSet left_descents(const GroupTable& t, Element a);
/// {alpha : l(a s_alpha) < l(a)}.
SimpleSet right_descents(const GroupTable& t, Element a);

/// w applied to a root, following the canonical word.
SignedRoot act(const GroupTable& t, Element w, SignedRoot r);

/// Phi+(w) by its definition: the positive roots beta with w^{-1} beta < 0.
std::vector<int> phi_plus(const GroupTable& t, Element w);

/// Phi+(w) as {beta_k = s_{i_1} ... s_{i_{k-1}} alpha_{i_k}} read off the
/// canonical reduced word s_{i_1} ... s_{i_t}.
std::vector<int> phi_plus_from_word(const GroupTable& t, Element w);

/// u <=_R x in the right weak order, via Phi+(u) subset of Phi+(x).
inline bool leq_weak(const GroupTable& t, Element u, Element x) {
  return t.inversions(u).subset_of(t.inversions(x));
}

/// u <=_R x straight from the definition: x = u y with l(x) = l(u) + l(y).
/// The only candidate is y = u^{-1} x.
bool leq_weak_definitional(const GroupTable& t, Element u, Element x);

/// All prefixes of x: elements reachable from x by repeatedly dropping the
/// last letter of a reduced word. Entry u is nonzero iff u <=_R x.
std::vector<char> prefixes_of(const GroupTable& t, Element x);

/// Longest element w_J of the parabolic subgroup W_J.
Element longest_parabolic(const GroupTable& t, SimpleSet J);

/// Pi cap x Pi = {beta in Pi : beta = x alpha for some alpha in Pi}.
SimpleSet pi_cap_xpi(const GroupTable& t, Element x);

/// Same set via {beta : s_beta = x s_alpha x^{-1} with l(x s_alpha) = l(x) + 1}.
SimpleSet pi_cap_xpi_by_conjugation(const GroupTable& t, Element x);

/// {"word":[...],"length":n,"inversions":[...]}; word letters are 1-based.
nlohmann::json element_json(const GroupTable& t, Element w);

}  // namespace rcsa

#pragma once

// Finite root systems built from Cartan matrices.
//
// Roots are integer coordinate vectors over the simple roots. Positive roots
// are indexed 0..N-1 with the simple roots first (index i is alpha_{i+1}),
// then ordered by height and, within a height, lexicographically.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "json.hpp"

namespace rcsa {

using Rational = boost::rational<std::int64_t>;
using Root = std::vector<int>;

/// Integer Cartan matrix of finite type. Convention: the simple reflection
/// s_i acts by s_i(alpha_j) = alpha_j - a(i,j) alpha_i.
class CartanMatrix {
 public:
  CartanMatrix(std::vector<std::vector<int>> rows, std::string label = "custom");

  /// Built-in types "A1".."A8", "B2".."B7", "C2".."C7", "D4".."D7", "E6",
  /// "F4", "G2" in Bourbaki numbering. Other ranks of the classical
  /// families are accepted too.
  static CartanMatrix from_label(std::string_view label);

  /// Either a bare integer matrix or {"label": ..., "cartan": [[...]]}.
  static CartanMatrix from_json(const nlohmann::json& j);

  int rank() const { return rank_; }
  int operator()(int i, int j) const { return entries_[i * rank_ + j]; }
  const std::string& label() const { return label_; }

 private:
  int rank_;
  std::vector<int> entries_;
  std::string label_;
};

/// Labels of every built-in Cartan type, in census order.
const std::vector<std::string>& builtin_labels();

/// A root given by index into the positive roots plus a sign.
struct SignedRoot {
  int index = 0;
  bool negative = false;

  SignedRoot operator-() const { return {index, !negative}; }
  friend bool operator==(SignedRoot, SignedRoot) = default;
};

class RootSystem {
 public:
  /// Closure of the simple roots under simple reflections. Throws
  /// std::invalid_argument("... not finite type") when the closure does not
  /// terminate within the coefficient bound every finite type satisfies.
  explicit RootSystem(CartanMatrix cartan);

  const CartanMatrix& cartan() const { return cartan_; }
  int rank() const { return cartan_.rank(); }
  int num_positive() const { return static_cast<int>(positive_.size()); }
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& root(int index) const { return positive_[index]; }
  int height(int index) const;

  /// Index and sign of a root, or nothing if r is not a root.
  std::optional<SignedRoot> find(const Root& r) const;
  Root coords(SignedRoot r) const;

  /// s_i applied to the positive root with the given index; O(1).
  SignedRoot reflect(int i, int index) const {
    return reflections_[static_cast<std::size_t>(i) * positive_.size() + index];
  }
  SignedRoot reflect(int i, SignedRoot r) const {
    SignedRoot img = reflect(i, r.index);
    return r.negative ? -img : img;
  }

  /// Bilinear form on simple roots; short roots of each component have
  /// squared length 2.
  Rational form(int i, int j) const { return form_[i * rank() + j]; }

  nlohmann::json to_json() const;

 private:
  CartanMatrix cartan_;
  std::vector<Root> positive_;
  std::map<Root, int> index_;
  std::vector<SignedRoot> reflections_;
  std::vector<Rational> form_;
};

RootSystem build_root_system(const CartanMatrix& cartan);

/// s_{alpha_{i+1}}(r). Throws std::invalid_argument if r is not a root.
Root reflect(const RootSystem& rs, int i, const Root& r);

/// Invariant scalar product of two roots.
Rational pairing(const RootSystem& rs, const Root& beta, const Root& gamma);

}  // namespace rcsa

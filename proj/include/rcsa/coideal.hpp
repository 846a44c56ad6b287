#pragma once

// Parameters of homogeneous right coideal subalgebras.
//
// B(W) is the set of triples (x, u, J) with J a subset of Pi cap x Pi and
// u^{-1} <=_R x. A(W) is the set of pairs (v, w) in the image of
//   (x, u, J) |-> (u w_J, u w_J x),
// and pair_to_triple decides membership by inverting that map.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rcsa/weyl_group.hpp"

namespace rcsa {

struct Triple {
  Element x;
  Element u;
  SimpleSet J = 0;
  friend bool operator==(const Triple&, const Triple&) = default;
};

struct Pair {
  Element v;
  Element w;
  friend bool operator==(const Pair&, const Pair&) = default;
};

/// J subset of Pi cap x Pi and u^{-1} <=_R x. Throws std::invalid_argument
/// if J names an index outside Pi.
bool is_triple_valid(const GroupTable& t, const Triple& tr);

/// (v, w) = (u w_J, u w_J x). Throws std::invalid_argument for an invalid
/// triple and std::logic_error if l(v) = l(u) + l(w_J) or
/// l(w) = l(x) + l(w_J) - l(u) fails.
Pair triple_to_pair(const GroupTable& t, const Triple& tr);

/// The unique triple mapping to p, or nothing when p is not in A(W).
///
///   x = v^{-1} w,  M = Pi cap x Pi,  v = u m  with u minimal in v W_M,
///   J = left descents of m;  accept iff m = w_J and u^{-1} <=_R x.
std::optional<Triple> pair_to_triple(const GroupTable& t, const Pair& p);

/// Shortest element of the left coset w W_M.
Element min_coset_rep(const GroupTable& t, Element w, SimpleSet M);

/// Calls yield(triple) for each element of B(W) in (x, u, J) lexicographic
/// order, J compared as a bitmask.
template <class F>
void enumerate_triples(const GroupTable& t, F&& yield) {
  for (std::uint32_t xi = 0; xi < t.size(); ++xi) {
    const Element x{xi};
    const SimpleSet M = pi_cap_xpi(t, x);
    const std::size_t end = t.length_end(t.length(x));
    for (std::uint32_t ui = 0; ui < t.size(); ++ui) {
      const Element u{ui};
      const Element uinv = t.inverse(u);
      if (uinv.index >= end || !leq_weak(t, uinv, x)) continue;
      for (SimpleSet J = 0;; J = (J - M) & M) {
        yield(Triple{x, u, J});
        if (J == M) break;
      }
    }
  }
}

std::uint64_t count_triples(const GroupTable& t);

/// {"x":[...],"u":[...],"J":[...],"J_mask":n,"v":[...],"w":[...]}
nlohmann::json triple_json(const GroupTable& t, const Triple& tr);

struct LemmaCheck {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> counterexamples;  // first few, verbatim
  bool passed() const { return failures == 0; }
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;
  bool passed() const;
};

/// Exhaustive check, over all of W x W, of the statements membership in A(W)
/// must satisfy: symmetry, transfer of s_alpha between v and w, the descent
/// restriction alpha in v Pi cap w Pi, and the w_J characterization.
/// Quadratic in |W|.
LemmaReport check_lemma_suite(const GroupTable& t);

}  // namespace rcsa

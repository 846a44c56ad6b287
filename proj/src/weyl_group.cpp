#include "rcsa/weyl_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

namespace rcsa {

std::vector<int> InversionSet::indices() const {
  std::vector<int> out;
  for (int w = 0; w < 2; ++w) {
    for (std::uint64_t b = bits_[w]; b != 0; b &= b - 1)
      out.push_back(64 * w + std::countr_zero(b));
  }
  return out;
}

namespace {

// Calls f(k) for every k in s.
template <class F>
void for_each_bit(const InversionSet& s, F&& f) {
  for (int w = 0; w < 2; ++w)
    for (std::uint64_t b = s.word(w); b != 0; b &= b - 1) f(64 * w + std::countr_zero(b));
}

}  // namespace

GroupTable enumerate_group(const RootSystem& rs, std::size_t cap) {
  const int n = rs.rank();
  const int N = rs.num_positive();
  if (N > InversionSet::kCapacity)
    throw std::length_error(rs.cartan().label() + ": more than 128 positive roots is unsupported");

  // Discovery order: layer by layer, so lengths are nondecreasing in id.
  std::vector<InversionSet> inv{InversionSet{}};
  std::vector<std::uint16_t> len{0};
  std::vector<std::uint32_t> right(n, 0);
  std::unordered_map<InversionSet, std::uint32_t, InversionSet::Hash> lookup{{InversionSet{}, 0}};

  std::vector<std::uint32_t> layer{0};
  std::vector<SignedRoot> perms(N);
  for (int k = 0; k < N; ++k) perms[k] = {k, false};

  for (std::uint16_t l = 0; !layer.empty(); ++l) {
    std::vector<std::uint32_t> next;
    std::vector<SignedRoot> next_perms;
    for (std::size_t a = 0; a < layer.size(); ++a) {
      const std::uint32_t w = layer[a];
      const SignedRoot* p = perms.data() + a * N;
      for (int i = 0; i < n; ++i) {
        const SignedRoot img = p[i];  // w(alpha_i)
        InversionSet s = inv[w];
        if (img.negative) {
          s.reset(img.index);
          right[w * n + i] = lookup.at(s);
          continue;
        }
        s.set(img.index);
        auto [it, fresh] = lookup.try_emplace(s, static_cast<std::uint32_t>(inv.size()));
        if (fresh) {
          if (inv.size() >= cap)
            throw std::length_error(rs.cartan().label() + ": group order exceeds the cap of " +
                                    std::to_string(cap) + " elements");
          inv.push_back(s);
          len.push_back(static_cast<std::uint16_t>(l + 1));
          right.resize(inv.size() * n);
          next.push_back(it->second);
          // (w s_i)(beta_k) = w(s_i beta_k)
          for (int k = 0; k < N; ++k) {
            SignedRoot r = rs.reflect(i, k);
            SignedRoot q = p[r.index];
            next_perms.push_back(r.negative ? -q : q);
          }
        }
        right[w * n + i] = it->second;
      }
    }
    layer = std::move(next);
    perms = std::move(next_perms);
  }

  const std::size_t order = inv.size();

  // s_i w: Phi+(s_i w) is s_i(Phi+(w) \ {alpha_i}), plus alpha_i when i is not
  // a left descent of w.
  std::vector<std::uint32_t> left(order * n);
  for (std::size_t w = 0; w < order; ++w) {
    for (int i = 0; i < n; ++i) {
      InversionSet s;
      if (!inv[w].test(i)) s.set(i);
      for_each_bit(inv[w], [&](int k) {
        if (k != i) s.set(rs.reflect(i, k).index);
      });
      left[w * n + i] = lookup.at(s);
    }
  }

  // Canonical word = smallest left descent, then the canonical word of the
  // rest. Within a layer the words therefore sort by (first letter, rank of
  // the tail in the previous layer).
  std::vector<std::uint8_t> first(order, 0);
  std::vector<std::uint32_t> tail(order, 0);
  for (std::size_t w = 1; w < order; ++w) {
    first[w] = static_cast<std::uint8_t>(std::countr_zero(inv[w].word(0)));
    tail[w] = left[w * n + first[w]];
  }

  std::vector<std::uint32_t> new_of_old(order), old_of_new(order);
  std::vector<std::uint32_t> layer_end;
  for (std::size_t begin = 0; begin < order;) {
    std::size_t end = begin;
    while (end < order && len[end] == len[begin]) ++end;
    std::vector<std::uint32_t> ids(end - begin);
    std::iota(ids.begin(), ids.end(), static_cast<std::uint32_t>(begin));
    std::sort(ids.begin(), ids.end(), [&](std::uint32_t a, std::uint32_t b) {
      return std::tuple(first[a], new_of_old[tail[a]]) < std::tuple(first[b], new_of_old[tail[b]]);
    });
    for (std::size_t k = 0; k < ids.size(); ++k) {
      old_of_new[begin + k] = ids[k];
      new_of_old[ids[k]] = static_cast<std::uint32_t>(begin + k);
    }
    layer_end.push_back(static_cast<std::uint32_t>(end));
    begin = end;
  }

  GroupTable t(rs);
  t.inv_.resize(order);
  t.length_.resize(order);
  t.right_.resize(order * n);
  t.left_.resize(order * n);
  t.inverse_.assign(order, 0);
  t.word_offset_.assign(order + 1, 0);
  t.layer_end_ = std::move(layer_end);
  t.lookup_.reserve(order);
  for (std::size_t w = 0; w < order; ++w) {
    const std::uint32_t old = old_of_new[w];
    t.inv_[w] = inv[old];
    t.length_[w] = len[old];
    for (int i = 0; i < n; ++i) {
      t.right_[w * n + i] = new_of_old[right[old * n + i]];
      t.left_[w * n + i] = new_of_old[left[old * n + i]];
    }
    t.lookup_.emplace(inv[old], static_cast<std::uint32_t>(w));
  }
  std::size_t total_letters = 0;
  for (auto l : t.length_) total_letters += l;
  if (total_letters > UINT32_MAX) throw std::length_error("word arena too large");
  t.word_arena_.reserve(total_letters);
  for (std::size_t w = 1; w < order; ++w) {
    const std::uint32_t old = old_of_new[w];
    const std::uint32_t rest = new_of_old[tail[old]];
    t.word_offset_[w] = static_cast<std::uint32_t>(t.word_arena_.size());
    t.word_arena_.push_back(first[old]);
    // rest < w, so its word is already in the arena
    for (std::uint32_t k = t.word_offset_[rest]; k < t.word_offset_[rest + 1]; ++k)
      t.word_arena_.push_back(t.word_arena_[k]);
    t.word_offset_[w + 1] = static_cast<std::uint32_t>(t.word_arena_.size());
    // w = s_first rest, so w^{-1} = rest^{-1} s_first
    t.inverse_[w] = t.right_[t.inverse_[rest] * n + first[old]];
  }
  return t;
}

std::optional<Element> GroupTable::find(const InversionSet& inv) const {
  if (auto it = lookup_.find(inv); it != lookup_.end()) return Element{it->second};
  return std::nullopt;
}

Element GroupTable::from_word(std::span<const int> letters) const {
  Element w = identity();
  for (int i : letters) {
    if (i < 0 || i >= rank()) throw std::invalid_argument("word letter out of range");
    w = right_mult(w, i);
  }
  return w;
}

WeylElement GroupTable::element(Element w) const {
  WeylElement out;
  out.inv = inversions(w);
  out.length = length(w);
  for (auto letter : word(w)) out.word.push_back(letter);
  out.perm.reserve(rs_.num_positive());
  for (int k = 0; k < rs_.num_positive(); ++k) out.perm.push_back(act(*this, w, {k, false}));
  return out;
}

Element multiply(const GroupTable& t, Element a, Element b) {
  for (auto letter : t.word(b)) a = t.right_mult(a, letter);
  return a;
}

SimpleSet left_descents(const GroupTable& t, Element a) {
  const std::uint64_t mask = t.rank() >= 64 ? ~0ull : (std::uint64_t{1} << t.rank()) - 1;
  return static_cast<SimpleSet>(t.inversions(a).word(0) & mask);
}

SimpleSet right_descents(const GroupTable& t, Element a) {
  SimpleSet out = 0;
  for (int i = 0; i < t.rank(); ++i)
    if (t.length(t.right_mult(a, i)) < t.length(a)) out |= SimpleSet{1} << i;
  return out;
}

SignedRoot act(const GroupTable& t, Element w, SignedRoot r) {
  auto letters = t.word(w);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) r = t.root_system().reflect(*it, r);
  return r;
}

std::vector<int> phi_plus(const GroupTable& t, Element w) {
  const Element winv = t.inverse(w);
  std::vector<int> out;
  for (int k = 0; k < t.root_system().num_positive(); ++k)
    if (act(t, winv, {k, false}).negative) out.push_back(k);
  return out;
}

std::vector<int> phi_plus_from_word(const GroupTable& t, Element w) {
  auto letters = t.word(w);
  std::vector<int> out;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    SignedRoot beta{letters[k], false};
    for (std::size_t j = k; j-- > 0;) beta = t.root_system().reflect(letters[j], beta);
    if (beta.negative) throw std::logic_error("canonical word is not reduced");
    out.push_back(beta.index);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool leq_weak_definitional(const GroupTable& t, Element u, Element x) {
  const Element y = multiply(t, t.inverse(u), x);
  return t.length(x) == t.length(u) + t.length(y);
}

std::vector<char> prefixes_of(const GroupTable& t, Element x) {
  std::vector<char> reached(t.size(), 0);
  std::vector<Element> stack{x};
  reached[x.index] = 1;
  while (!stack.empty()) {
    Element w = stack.back();
    stack.pop_back();
    for (int i = 0; i < t.rank(); ++i) {
      Element p = t.right_mult(w, i);
      if (t.length(p) < t.length(w) && !reached[p.index]) {
        reached[p.index] = 1;
        stack.push_back(p);
      }
    }
  }
  return reached;
}

Element longest_parabolic(const GroupTable& t, SimpleSet J) {
  if (t.rank() < 32 && (J >> t.rank()) != 0) throw std::invalid_argument("subset contains a non-simple index");
  Element w = t.identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (int i = 0; i < t.rank(); ++i) {
      if (!((J >> i) & 1u)) continue;
      Element next = t.right_mult(w, i);
      if (t.length(next) > t.length(w)) {
        w = next;
        grew = true;
      }
    }
  }
  return w;
}

SimpleSet pi_cap_xpi(const GroupTable& t, Element x) {
  SimpleSet out = 0;
  for (int j = 0; j < t.rank(); ++j) {
    SignedRoot img = act(t, x, {j, false});
    if (!img.negative && img.index < t.rank()) out |= SimpleSet{1} << img.index;
  }
  return out;
}

SimpleSet pi_cap_xpi_by_conjugation(const GroupTable& t, Element x) {
  SimpleSet out = 0;
  const Element xinv = t.inverse(x);
  for (int j = 0; j < t.rank(); ++j) {
    const Element xs = t.right_mult(x, j);
    if (t.length(xs) != t.length(x) + 1) continue;
    const Element c = multiply(t, xs, xinv);
    if (t.length(c) == 1) out |= SimpleSet{1} << t.word(c)[0];
  }
  return out;
}

nlohmann::json element_json(const GroupTable& t, Element w) {
  std::vector<int> word;
  for (auto letter : t.word(w)) word.push_back(letter + 1);
  return {{"word", word}, {"length", t.length(w)}, {"inversions", t.inversions(w).indices()}};
}

}  // namespace rcsa

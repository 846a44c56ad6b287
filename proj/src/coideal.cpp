#include "rcsa/coideal.hpp"

#include <stdexcept>

#include "rcsa/words.hpp"

namespace rcsa {

namespace {

constexpr std::size_t kMaxReported = 10;

void check_subset(const GroupTable& t, SimpleSet J) {
  if (t.rank() < 32 && (J >> t.rank()) != 0)
    throw std::invalid_argument("J contains an index outside the simple roots");
}

std::string set_string(SimpleSet s) {
  std::string out = "{";
  for (int i : simple_indices(s)) out += (out.size() > 1 ? "," : "") + std::to_string(i);
  return out + "}";
}

void record(LemmaCheck& check, bool ok, const std::string& what) {
  ++check.cases;
  if (ok) return;
  ++check.failures;
  if (check.counterexamples.size() < kMaxReported) check.counterexamples.push_back(what);
}

}  // namespace

bool is_triple_valid(const GroupTable& t, const Triple& tr) {
  check_subset(t, tr.J);
  return (tr.J & ~pi_cap_xpi(t, tr.x)) == 0 && leq_weak(t, t.inverse(tr.u), tr.x);
}

Pair triple_to_pair(const GroupTable& t, const Triple& tr) {
  if (!is_triple_valid(t, tr)) throw std::invalid_argument("triple is not in B(W)");
  const Element wJ = longest_parabolic(t, tr.J);
  const Element v = multiply(t, tr.u, wJ);
  const Element w = multiply(t, v, tr.x);
  if (t.length(v) != t.length(tr.u) + t.length(wJ))
    throw std::logic_error("l(v) != l(u) + l(w_J)");
  if (t.length(w) != t.length(tr.x) + t.length(wJ) - t.length(tr.u))
    throw std::logic_error("l(w) != l(x) + l(w_J) - l(u)");
  return {v, w};
}

Element min_coset_rep(const GroupTable& t, Element w, SimpleSet M) {
  for (bool shrank = true; shrank;) {
    shrank = false;
    for (int i = 0; i < t.rank(); ++i) {
      if (!((M >> i) & 1u)) continue;
      Element next = t.right_mult(w, i);
      if (t.length(next) < t.length(w)) {
        w = next;
        shrank = true;
      }
    }
  }
  return w;
}

std::optional<Triple> pair_to_triple(const GroupTable& t, const Pair& p) {
  const Element x = multiply(t, t.inverse(p.v), p.w);
  const SimpleSet M = pi_cap_xpi(t, x);
  const Element u = min_coset_rep(t, p.v, M);
  const Element m = multiply(t, t.inverse(u), p.v);
  const SimpleSet J = left_descents(t, m);
  if (m != longest_parabolic(t, J) || !leq_weak(t, t.inverse(u), x)) return std::nullopt;
  return Triple{x, u, J};
}

std::uint64_t count_triples(const GroupTable& t) {
  std::uint64_t n = 0;
  enumerate_triples(t, [&](const Triple&) { ++n; });
  return n;
}

nlohmann::json triple_json(const GroupTable& t, const Triple& tr) {
  const Pair p = triple_to_pair(t, tr);
  return {{"x", word_json(t, tr.x)}, {"u", word_json(t, tr.u)}, {"J", simple_indices(tr.J)},
          {"J_mask", tr.J},          {"v", word_json(t, p.v)},  {"w", word_json(t, p.w)}};
}

bool LemmaReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

LemmaReport check_lemma_suite(const GroupTable& t) {
  const std::size_t n = t.size();
  std::vector<char> member(n * n, 0);
  for (std::uint32_t v = 0; v < n; ++v)
    for (std::uint32_t w = 0; w < n; ++w) member[v * n + w] = pair_to_triple(t, {{v}, {w}}).has_value();
  auto in_a = [&](Element v, Element w) { return member[v.index * n + w.index] != 0; };
  auto pair_str = [&](Element v, Element w) {
    return "(v=" + format_word(t, v) + ", w=" + format_word(t, w) + ")";
  };

  LemmaCheck symmetry, transfer, descent, parabolic;
  symmetry.name = "symmetry";
  transfer.name = "transfer";
  descent.name = "descent-restriction";
  parabolic.name = "longest-parabolic";

  std::vector<SimpleSet> pi_cap(n);
  for (std::uint32_t v = 0; v < n; ++v) pi_cap[v] = pi_cap_xpi(t, {v});

  for (std::uint32_t vi = 0; vi < n; ++vi) {
    const Element v{vi};
    for (std::uint32_t wi = 0; wi < n; ++wi) {
      const Element w{wi};
      record(symmetry, in_a(v, w) == in_a(w, v), pair_str(v, w));
      for (int a = 0; a < t.rank(); ++a) {
        const Element sv = t.left_mult(v, a), sw = t.left_mult(w, a);
        if (t.length(sv) != t.length(v) + 1 || t.length(sw) != t.length(w) + 1) continue;
        const std::string at = pair_str(v, w) + " alpha=" + std::to_string(a + 1);
        record(transfer, in_a(sv, w) == in_a(v, sw), at);
        const bool in_both = ((pi_cap[vi] & pi_cap[wi]) >> a) & 1u;
        record(descent, !in_a(sv, sw) || in_both, at);
      }
    }
  }

  for (std::uint32_t vi = 0; vi < n; ++vi) {
    const Element v{vi};
    const SimpleSet J = left_descents(t, v);
    bool hypothesis = true;
    for (int a = 0; a < t.rank() && hypothesis; ++a) {
      if (!((J >> a) & 1u)) continue;
      bool found = false;
      for (int b = 0; b < t.rank() && !found; ++b) found = t.right_mult(v, b) == t.left_mult(v, a);
      hypothesis = found;
    }
    if (!hypothesis) continue;
    record(parabolic, v == longest_parabolic(t, J), "v=" + format_word(t, v) + " J_v=" + set_string(J));
  }

  return {{symmetry, transfer, descent, parabolic}};
}

}  // namespace rcsa

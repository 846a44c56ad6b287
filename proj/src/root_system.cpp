#include "rcsa/root_system.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rcsa {

namespace {

// Largest coefficient of any root of a finite root system (attained by the
// highest root of E8).
constexpr int kMaxCoefficient = 6;
constexpr int kMaxRank = 32;

std::vector<std::vector<int>> chain(int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

void link(std::vector<std::vector<int>>& a, int i, int j) { a[i][j] = a[j][i] = -1; }

std::vector<std::vector<int>> family_matrix(char family, int n) {
  switch (family) {
    case 'A':
      if (n < 1) break;
      return chain(n);
    case 'B': {
      if (n < 2) break;
      auto a = chain(n);
      a[n - 1][n - 2] = -2;  // alpha_n short
      return a;
    }
    case 'C': {
      if (n < 2) break;
      auto a = chain(n);
      a[n - 2][n - 1] = -2;  // alpha_n long
      return a;
    }
    case 'D': {
      if (n < 4) break;
      auto a = chain(n - 1);
      for (auto& row : a) row.push_back(0);
      a.emplace_back(n, 0);
      a[n - 1][n - 1] = 2;
      link(a, n - 3, n - 1);
      return a;
    }
    case 'E': {
      if (n < 6 || n > 8) break;
      std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) a[i][i] = 2;
      link(a, 0, 2);
      link(a, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(a, i, i + 1);
      return a;
    }
    case 'F': {
      if (n != 4) break;
      auto a = chain(4);
      a[2][1] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      return a;
    }
    case 'G':
      if (n != 2) break;
      return {{2, -3}, {-1, 2}};  // alpha_1 short
    default:
      break;
  }
  throw std::invalid_argument("unknown Cartan type label");
}

bool is_positive(const Root& r) {
  return std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; }) &&
         std::any_of(r.begin(), r.end(), [](int c) { return c > 0; });
}

int root_height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

// s_i(beta) = beta - <beta, alpha_i^vee> alpha_i.
Root apply_reflection(const CartanMatrix& a, int i, const Root& beta) {
  int coroot = 0;
  for (int j = 0; j < a.rank(); ++j) coroot += beta[j] * a(i, j);
  Root out = beta;
  out[i] -= coroot;
  return out;
}

// d_i with d_i a(i,j) = d_j a(j,i), scaled per component so min d_i = 1.
std::vector<Rational> symmetrizer(const CartanMatrix& a) {
  const int n = a.rank();
  std::vector<Rational> d(n, Rational(0));
  std::vector<int> component(n, -1);
  int ncomp = 0;
  for (int start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    d[start] = Rational(1);
    component[start] = ncomp;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (j == i || a(i, j) == 0 || component[j] >= 0) continue;
        d[j] = d[i] * Rational(a(i, j), a(j, i));
        component[j] = ncomp;
        stack.push_back(j);
      }
    }
    ++ncomp;
  }
  for (int c = 0; c < ncomp; ++c) {
    Rational least(0);
    for (int i = 0; i < n; ++i)
      if (component[i] == c && (least == Rational(0) || d[i] < least)) least = d[i];
    for (int i = 0; i < n; ++i)
      if (component[i] == c) d[i] /= least;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d[i] * Rational(a(i, j)) != d[j] * Rational(a(j, i)))
        throw std::invalid_argument("Cartan matrix is not symmetrizable: not finite type");
  return d;
}

}  // namespace

CartanMatrix::CartanMatrix(std::vector<std::vector<int>> rows, std::string label)
    : rank_(static_cast<int>(rows.size())), label_(std::move(label)) {
  if (rank_ < 1 || rank_ > kMaxRank)
    throw std::invalid_argument("Cartan matrix rank must be between 1 and 32");
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != rank_)
      throw std::invalid_argument("Cartan matrix must be square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) {
      int aij = (*this)(i, j);
      if (i == j && aij != 2)
        throw std::invalid_argument("Cartan matrix diagonal entries must equal 2");
      if (i != j && aij > 0)
        throw std::invalid_argument("Cartan matrix off-diagonal entries must be <= 0");
      if (i != j && (aij == 0) != ((*this)(j, i) == 0))
        throw std::invalid_argument("Cartan matrix zero pattern must be symmetric");
    }
  }
}

CartanMatrix CartanMatrix::from_label(std::string_view label) {
  if (label.size() < 2) throw std::invalid_argument("unknown Cartan type label: " + std::string(label));
  char family = label[0];
  if (family >= 'a' && family <= 'z') family = static_cast<char>(family - 'a' + 'A');
  int n = 0;
  auto digits = label.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw std::invalid_argument("unknown Cartan type label: " + std::string(label));
  try {
    return CartanMatrix(family_matrix(family, n), std::string(1, family) + std::to_string(n));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("unknown Cartan type label: " + std::string(label));
  }
}

CartanMatrix CartanMatrix::from_json(const nlohmann::json& j) {
  try {
    if (j.is_array()) return CartanMatrix(j.get<std::vector<std::vector<int>>>());
    return CartanMatrix(j.at("cartan").get<std::vector<std::vector<int>>>(),
                        j.value("label", std::string("custom")));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed Cartan matrix JSON: ") + e.what());
  }
}

const std::vector<std::string>& builtin_labels() {
  static const std::vector<std::string> labels = {
      "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8",  //
      "B2", "B3", "B4", "B5", "B6", "B7",              //
      "C2", "C3", "C4", "C5", "C6", "C7",              //
      "D4", "D5", "D6", "D7", "E6", "F4", "G2"};
  return labels;
}

RootSystem::RootSystem(CartanMatrix cartan) : cartan_(std::move(cartan)) {
  const int n = cartan_.rank();

  std::vector<Root> found;
  std::set<Root> seen;
  std::deque<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root simple(n, 0);
    simple[i] = 1;
    seen.insert(simple);
    found.push_back(simple);
    queue.push_back(simple);
  }
  while (!queue.empty()) {
    Root beta = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Root img = apply_reflection(cartan_, i, beta);
      if (!is_positive(img)) {
        bool nonpositive = std::all_of(img.begin(), img.end(), [](int c) { return c <= 0; });
        if (!nonpositive) throw std::invalid_argument(cartan_.label() + " is not finite type");
        continue;
      }
      if (*std::max_element(img.begin(), img.end()) > kMaxCoefficient)
        throw std::invalid_argument(cartan_.label() + " is not finite type");
      if (seen.insert(img).second) {
        found.push_back(img);
        queue.push_back(std::move(img));
      }
    }
  }

  std::stable_sort(found.begin() + n, found.end(), [](const Root& a, const Root& b) {
    int ha = root_height(a), hb = root_height(b);
    return ha != hb ? ha < hb : a < b;
  });
  positive_ = std::move(found);
  for (int k = 0; k < num_positive(); ++k) index_.emplace(positive_[k], k);

  reflections_.reserve(static_cast<std::size_t>(n) * positive_.size());
  for (int i = 0; i < n; ++i) {
    for (const Root& beta : positive_) {
      auto img = find(apply_reflection(cartan_, i, beta));
      if (!img) throw std::invalid_argument(cartan_.label() + " is not finite type");
      reflections_.push_back(*img);
    }
  }

  auto d = symmetrizer(cartan_);
  form_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) form_[i * n + j] = d[i] * Rational(cartan_(i, j));
}

int RootSystem::height(int index) const { return root_height(positive_[index]); }

std::optional<SignedRoot> RootSystem::find(const Root& r) const {
  if (static_cast<int>(r.size()) != rank()) return std::nullopt;
  if (auto it = index_.find(r); it != index_.end()) return SignedRoot{it->second, false};
  Root neg(r.size());
  std::transform(r.begin(), r.end(), neg.begin(), [](int c) { return -c; });
  if (auto it = index_.find(neg); it != index_.end()) return SignedRoot{it->second, true};
  return std::nullopt;
}

Root RootSystem::coords(SignedRoot r) const {
  Root out = positive_[r.index];
  if (r.negative)
    for (int& c : out) c = -c;
  return out;
}

nlohmann::json RootSystem::to_json() const {
  return {{"type", cartan_.label()}, {"rank", rank()}, {"positive_roots", positive_}};
}

RootSystem build_root_system(const CartanMatrix& cartan) { return RootSystem(cartan); }

Root reflect(const RootSystem& rs, int i, const Root& r) {
  if (i < 0 || i >= rs.rank()) throw std::invalid_argument("simple root index out of range");
  auto found = rs.find(r);
  if (!found) throw std::invalid_argument("vector is not a root of this root system");
  return rs.coords(rs.reflect(i, *found));
}

Rational pairing(const RootSystem& rs, const Root& beta, const Root& gamma) {
  if (!rs.find(beta) || !rs.find(gamma)) throw std::invalid_argument("vector is not a root of this root system");
  Rational sum(0);
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j)
      if (beta[i] != 0 && gamma[j] != 0) sum += rs.form(i, j) * Rational(beta[i] * gamma[j]);
  return sum;
}

}  // namespace rcsa

#include "rcsa/root_system.hpp"

#include <gtest/gtest.h>

#include "oracle.hpp"

namespace rcsa {
namespace {

int expected_positive_roots(const std::string& label) {
  const int n = std::stoi(label.substr(1));
  switch (label[0]) {
    case 'A':
      return n * (n + 1) / 2;
    case 'B':
    case 'C':
      return n * n;
    case 'D':
      return n * (n - 1);
    case 'E':
      return 36;
    case 'F':
      return 24;
    case 'G':
      return 6;
  }
  return -1;
}

int count_with_norm(const RootSystem& rs, Rational norm) {
  int count = 0;
  for (const Root& r : rs.positive_roots()) count += pairing(rs, r, r) == norm;
  return count;
}

TEST(RootSystemTest, RankOne) {
  RootSystem rs(CartanMatrix::from_label("A1"));
  ASSERT_EQ(rs.num_positive(), 1);
  EXPECT_EQ(rs.root(0), (Root{1}));
}

TEST(RootSystemTest, A2RootsInOrder) {
  RootSystem rs(CartanMatrix::from_label("A2"));
  EXPECT_EQ(rs.positive_roots(), (std::vector<Root>{{1, 0}, {0, 1}, {1, 1}}));
}

TEST(RootSystemTest, B7HasFortyNinePositiveRoots) {
  EXPECT_EQ(RootSystem(CartanMatrix::from_label("B7")).num_positive(), 49);
}

TEST(RootSystemTest, RootCountsMatchClosedForms) {
  for (const auto& label : builtin_labels()) {
    RootSystem rs(CartanMatrix::from_label(label));
    EXPECT_EQ(rs.num_positive(), expected_positive_roots(label)) << label;
  }
}

TEST(RootSystemTest, RootCountsMatchMatrixOrbitRecount) {
  for (const char* label : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
    const auto cartan = CartanMatrix::from_label(label);
    EXPECT_EQ(RootSystem(cartan).num_positive(), static_cast<int>(oracle::enumerate(cartan).positive_roots.size()))
        << label;
  }
}

TEST(RootSystemTest, OrderingIsSimpleThenHeightThenLexicographic) {
  for (const auto& label : builtin_labels()) {
    RootSystem rs(CartanMatrix::from_label(label));
    for (int i = 0; i < rs.rank(); ++i) EXPECT_EQ(rs.height(i), 1);
    for (int k = rs.rank() + 1; k < rs.num_positive(); ++k) {
      const bool ordered = rs.height(k - 1) < rs.height(k) ||
                           (rs.height(k - 1) == rs.height(k) && rs.root(k - 1) < rs.root(k));
      EXPECT_TRUE(ordered) << label << " at " << k;
    }
  }
}

TEST(RootSystemTest, ReflectExamples) {
  RootSystem a2(CartanMatrix::from_label("A2"));
  EXPECT_EQ(reflect(a2, 0, {1, 0}), (Root{-1, 0}));
  EXPECT_EQ(reflect(a2, 0, {0, 1}), (Root{1, 1}));

  RootSystem g2(CartanMatrix::from_label("G2"));
  Root img = reflect(g2, 0, {0, 1});
  EXPECT_EQ(img, (Root{3, 1}));
  auto found = g2.find(img);
  ASSERT_TRUE(found);
  EXPECT_FALSE(found->negative);
}

TEST(RootSystemTest, ReflectRejectsNonRoots) {
  RootSystem a2(CartanMatrix::from_label("A2"));
  EXPECT_THROW(reflect(a2, 0, {2, 1}), std::invalid_argument);
  EXPECT_THROW(reflect(a2, 0, {1, -1}), std::invalid_argument);
  EXPECT_THROW(reflect(a2, 2, {1, 0}), std::invalid_argument);
}

TEST(RootSystemTest, ReflectionsPermuteRootsUpToSign) {
  for (const auto& label : builtin_labels()) {
    RootSystem rs(CartanMatrix::from_label(label));
    for (int i = 0; i < rs.rank(); ++i) {
      for (int k = 0; k < rs.num_positive(); ++k) {
        SignedRoot img = rs.reflect(i, k);
        EXPECT_EQ(img.negative, k == i) << label;
        EXPECT_EQ(rs.reflect(i, img), (SignedRoot{k, false})) << label;
      }
    }
  }
}

TEST(RootSystemTest, PairingExamples) {
  RootSystem a2(CartanMatrix::from_label("A2"));
  EXPECT_EQ(pairing(a2, {1, 0}, {1, 0}), Rational(2));
  EXPECT_EQ(pairing(a2, {1, 0}, {0, 1}), Rational(-1));

  RootSystem b2(CartanMatrix::from_label("B2"));  // alpha_1 long
  EXPECT_EQ(pairing(b2, {1, 0}, {1, 0}), Rational(4));
  EXPECT_EQ(pairing(b2, {0, 1}, {0, 1}), Rational(2));
  EXPECT_EQ(pairing(b2, {1, 1}, {1, 2}), pairing(b2, {1, 2}, {1, 1}));
}

TEST(RootSystemTest, ShortRootsHaveSquaredLengthTwo) {
  for (const auto& label : builtin_labels()) {
    RootSystem rs(CartanMatrix::from_label(label));
    Rational shortest(0);
    for (const Root& r : rs.positive_roots()) {
      Rational norm = pairing(rs, r, r);
      if (shortest == Rational(0) || norm < shortest) shortest = norm;
    }
    EXPECT_EQ(shortest, Rational(2)) << label;
  }
}

TEST(RootSystemTest, LongAndShortRootsSeparateBFromC) {
  // B_n has n short positive roots, C_n has n(n-1).
  EXPECT_EQ(count_with_norm(RootSystem(CartanMatrix::from_label("B3")), Rational(2)), 3);
  EXPECT_EQ(count_with_norm(RootSystem(CartanMatrix::from_label("C3")), Rational(2)), 6);
  EXPECT_EQ(count_with_norm(RootSystem(CartanMatrix::from_label("G2")), Rational(2)), 3);
  EXPECT_EQ(count_with_norm(RootSystem(CartanMatrix::from_label("G2")), Rational(6)), 3);
  EXPECT_EQ(count_with_norm(RootSystem(CartanMatrix::from_label("F4")), Rational(2)), 12);
}

TEST(RootSystemTest, PairingIsReflectionInvariant) {
  for (const char* label : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    RootSystem rs(CartanMatrix::from_label(label));
    for (int i = 0; i < rs.rank(); ++i)
      for (const Root& b : rs.positive_roots())
        for (const Root& c : rs.positive_roots())
          ASSERT_EQ(pairing(rs, reflect(rs, i, b), reflect(rs, i, c)), pairing(rs, b, c)) << label;
  }
}

TEST(RootSystemTest, FormIsNormalizedPerComponent) {
  // G2 + A1: each component normalized on its own.
  RootSystem rs(CartanMatrix({{2, -3, 0}, {-1, 2, 0}, {0, 0, 2}}));
  EXPECT_EQ(rs.form(0, 0), Rational(2));
  EXPECT_EQ(rs.form(1, 1), Rational(6));
  EXPECT_EQ(rs.form(2, 2), Rational(2));
  EXPECT_EQ(rs.num_positive(), 7);
}

TEST(CartanMatrixTest, RejectsMalformedMatrices) {
  EXPECT_THROW(CartanMatrix({{2, -1}, {-1, 3}}), std::invalid_argument);
  EXPECT_THROW(CartanMatrix({{2, 1}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(CartanMatrix({{2, -1}, {0, 2}}), std::invalid_argument);
  EXPECT_THROW(CartanMatrix({{2, -1}, {-1}}), std::invalid_argument);
  EXPECT_THROW(CartanMatrix({}), std::invalid_argument);
}

TEST(CartanMatrixTest, RejectsInfiniteTypes) {
  // affine A1, hyperbolic, affine A2
  EXPECT_THROW(RootSystem(CartanMatrix({{2, -2}, {-2, 2}})), std::invalid_argument);
  EXPECT_THROW(RootSystem(CartanMatrix({{2, -3}, {-3, 2}})), std::invalid_argument);
  EXPECT_THROW(RootSystem(CartanMatrix({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}})), std::invalid_argument);
  try {
    RootSystem(CartanMatrix({{2, -4}, {-1, 2}}));
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("not finite type"), std::string::npos);
  }
}

TEST(CartanMatrixTest, Labels) {
  EXPECT_EQ(CartanMatrix::from_label("b7").label(), "B7");
  EXPECT_EQ(CartanMatrix::from_label("G2")(0, 1), -3);
  EXPECT_EQ(CartanMatrix::from_label("B2")(1, 0), -2);
  EXPECT_EQ(CartanMatrix::from_label("C2")(0, 1), -2);
  for (const char* bad : {"", "X3", "D3", "B1", "A0", "G3", "A", "A2x", "E9"})
    EXPECT_THROW(CartanMatrix::from_label(bad), std::invalid_argument) << bad;
}

TEST(CartanMatrixTest, FromJson) {
  auto bare = CartanMatrix::from_json(nlohmann::json::parse("[[2,-1],[-1,2]]"));
  EXPECT_EQ(bare.rank(), 2);
  auto named = CartanMatrix::from_json(nlohmann::json::parse(R"({"label":"mine","cartan":[[2,-3],[-1,2]]})"));
  EXPECT_EQ(named.label(), "mine");
  EXPECT_EQ(RootSystem(named).num_positive(), 6);
  EXPECT_THROW(CartanMatrix::from_json(nlohmann::json::parse(R"({"cartan":"no"})")), std::invalid_argument);
}

TEST(RootSystemTest, JsonExport) {
  auto j = RootSystem(CartanMatrix::from_label("A2")).to_json();
  EXPECT_EQ(j["positive_roots"], nlohmann::json::parse("[[1,0],[0,1],[1,1]]"));
}

}  // namespace
}  // namespace rcsa

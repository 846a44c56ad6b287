#include "rcsa/census.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "oracle.hpp"
#include "rcsa/coideal.hpp"

namespace rcsa {
namespace {

GroupTable group(const std::string& label) { return enumerate_group(RootSystem(CartanMatrix::from_label(label))); }

std::vector<std::string> small_builtins() {
  std::vector<std::string> out;
  for (const auto& label : builtin_labels())
    if (std::stoi(label.substr(1)) <= 4) out.push_back(label);
  return out;
}

TEST(CensusTest, DownsetsOfG2FollowTable) {
  const GroupTable t = group("G2");
  const auto d = downset_sizes(t);
  EXPECT_EQ(d, (std::vector<std::uint32_t>{1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 12}));
  EXPECT_EQ(d[t.from_word(std::vector<int>{0, 1}).index], 3u);
  EXPECT_EQ(d[t.from_word(std::vector<int>{0, 1, 0, 1, 0}).index], 6u);
  EXPECT_EQ(d[t.longest().index], 12u);
  EXPECT_EQ(count_BW(t, d), 68u);
}

TEST(CensusTest, DownsetsOfA2) {
  EXPECT_EQ(downset_sizes(group("A2")), (std::vector<std::uint32_t>{1, 2, 2, 3, 3, 6}));
  EXPECT_EQ(downset_sizes(group("B2")), (std::vector<std::uint32_t>{1, 2, 2, 3, 3, 4, 4, 8}));
}

TEST(CensusTest, DownsetsMatchOracle) {
  for (const char* label : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
    const GroupTable t = group(label);
    const auto g = oracle::enumerate(t.root_system().cartan());
    const auto expected = oracle::downsets(g);
    const auto d = downset_sizes(t);
    for (std::uint32_t i = 0; i < t.size(); ++i)
      EXPECT_EQ(d[i], expected[oracle::from_word(g, t.word({i}))]) << label;
  }
}

TEST(CensusTest, BackendsAgreeOnSmallBuiltins) {
  for (const auto& label : small_builtins()) {
    const GroupTable t = group(label);
    CensusOptions lattice;
    lattice.backend = DownsetBackend::kLattice;
    const auto d = downset_sizes(t);
    EXPECT_EQ(d, downset_sizes(t, lattice)) << label;
    EXPECT_EQ(d, downset_sizes_definitional(t)) << label;
  }
}

TEST(CensusTest, BackendsAgreeOnLargerGroups) {
  for (const char* label : {"E6", "D5", "A6", "B5"}) {
    const GroupTable t = group(label);
    CensusOptions lattice;
    lattice.backend = DownsetBackend::kLattice;
    EXPECT_EQ(downset_sizes(t), downset_sizes(t, lattice)) << label;
  }
}

TEST(CensusTest, ThreadCountDoesNotChangeResults) {
  const GroupTable t = group("D5");
  CensusOptions one, four;
  four.threads = 4;
  EXPECT_EQ(downset_sizes(t, one), downset_sizes(t, four));
  four.backend = DownsetBackend::kLattice;
  EXPECT_EQ(downset_sizes(t, one), downset_sizes(t, four));
}

TEST(CensusTest, InverseDownsetsHaveSameSize) {
  for (const char* label : {"A3", "B3", "G2"}) {
    const GroupTable t = group(label);
    const auto d = downset_sizes(t);
    for (std::uint32_t x = 0; x < t.size(); ++x) {
      std::uint32_t inverse_count = 0;
      for (std::uint32_t u = 0; u < t.size(); ++u) inverse_count += leq_weak(t, t.inverse({u}), {x});
      EXPECT_EQ(inverse_count, d[x]) << label;
    }
  }
}

TEST(CensusTest, CountMatchesTripleEnumeration) {
  for (const char* label : {"A1", "A2", "A3", "B2", "B3", "G2"}) {
    const GroupTable t = group(label);
    EXPECT_EQ(count_BW(t), count_triples(t)) << label;
  }
}

TEST(CensusTest, DownsetsGrowAlongCovers) {
  const GroupTable t = group("F4");
  const auto d = downset_sizes(t);
  for (std::uint32_t x = 0; x < t.size(); ++x)
    for (int a = 0; a < t.rank(); ++a) {
      const Element y = t.right_mult({x}, a);
      if (t.length(y) > t.length({x})) ASSERT_GT(d[y.index], d[x]);
    }
  EXPECT_EQ(d[t.longest().index], t.size());
}

TEST(CensusTest, CensusRunExamples) {
  const std::vector<std::string> labels{"A1", "A2", "A3", "D4", "C3", "B3"};
  const auto rows = census_run(labels, {});
  ASSERT_EQ(rows.size(), labels.size());
  std::vector<std::uint64_t> counts;
  for (const auto& r : rows) {
    EXPECT_TRUE(r.ok()) << r.label;
    counts.push_back(r.b_count);
  }
  EXPECT_EQ(counts, (std::vector<std::uint64_t>{4, 26, 252, 6512, 664, 664}));
  EXPECT_EQ(rows[3].group_order, 192u);
}

TEST(CensusTest, BadLabelDoesNotStopRun) {
  const std::vector<std::string> labels{"A2", "Q9", "G2"};
  const auto rows = census_run(labels, {});
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_TRUE(rows[0].ok());
  EXPECT_FALSE(rows[1].ok());
  EXPECT_EQ(rows[2].b_count, 68u);
  const std::string csv = census_csv(rows);
  EXPECT_EQ(csv.rfind("type,group_order,b_count,elapsed_ms\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  EXPECT_NE(csv.find("G2,12,68,"), std::string::npos);
}

TEST(CensusTest, GroupCapIsReported) {
  CensusOptions opts;
  opts.group_cap = 100;
  const std::vector<std::string> labels{"B4"};
  EXPECT_FALSE(census_run(labels, opts)[0].ok());
}

TEST(CensusTest, BAndCAgree) {
  for (int n = 2; n <= 4; ++n) {
    const std::string b = "B" + std::to_string(n), c = "C" + std::to_string(n);
    EXPECT_EQ(count_BW(group(b)), count_BW(group(c))) << n;
  }
}

TEST(CensusTest, CountIsAtLeastGroupOrder) {
  for (const auto& label : small_builtins()) {
    const GroupTable t = group(label);
    EXPECT_GE(count_BW(t), 2 * t.size()) << label;
  }
}

TEST(CensusTest, PublishedCounts) {
  EXPECT_EQ(published_count("A1"), 4u);
  EXPECT_EQ(published_count("G2"), 68u);
  EXPECT_EQ(published_count("B7"), 2094849020u);
  EXPECT_EQ(published_count("C7"), published_count("B7"));
  EXPECT_FALSE(published_count("custom"));
}

TEST(CensusTest, MidsizeCountsMatchPublished) {
  for (const char* label : {"A4", "A5", "B4", "D4", "D5", "F4", "E6"}) {
    EXPECT_EQ(count_BW(group(label)), published_count(label)) << label;
  }
}

TEST(CensusTest, LoadCartanFromFile) {
  const auto dir = std::filesystem::temp_directory_path() / "rcsa_census_test";
  std::filesystem::create_directories(dir);
  const auto bare = dir / "myg2.json";
  std::ofstream(bare) << "[[2,-3],[-1,2]]";
  const CartanMatrix a = load_cartan(bare.string());
  EXPECT_EQ(a.label(), "myg2");
  EXPECT_EQ(count_BW(enumerate_group(RootSystem(a))), 68u);

  const auto named = dir / "named.json";
  std::ofstream(named) << R"({"label":"twoA1","cartan":[[2,0],[0,2]]})";
  EXPECT_EQ(load_cartan(named.string()).label(), "twoA1");

  const auto broken = dir / "broken.json";
  std::ofstream(broken) << "[[2,-1],";
  EXPECT_THROW(load_cartan(broken.string()), std::invalid_argument);
  EXPECT_EQ(load_cartan("F4").label(), "F4");
  std::filesystem::remove_all(dir);
}

TEST(CensusTest, ReducibleGroupCountMultiplies) {
  // B(W1 x W2) = B(W1) x B(W2): d and Pi cap x Pi both split over factors
  const GroupTable t = enumerate_group(RootSystem(CartanMatrix({{2, -1, 0}, {-1, 2, 0}, {0, 0, 2}})));
  EXPECT_EQ(count_BW(t), 26u * 4u);
}

TEST(CensusTest, BackendNames) {
  EXPECT_EQ(parse_backend("bitset"), DownsetBackend::kBitset);
  EXPECT_EQ(parse_backend("lattice"), DownsetBackend::kLattice);
  EXPECT_FALSE(parse_backend("gpu"));
}

TEST(CensusTest, DownsetVectorSizeIsChecked) {
  const GroupTable t = group("A2");
  std::vector<std::uint32_t> wrong(3, 1);
  EXPECT_THROW(count_BW(t, wrong), std::invalid_argument);
}

}  // namespace
}  // namespace rcsa

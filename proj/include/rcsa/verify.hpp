#pragma once

// Invariant suites run by `rcsa verify`.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rcsa/coideal.hpp"
#include "rcsa/weyl_group.hpp"

namespace rcsa {

enum class VerifyLevel { kExhaustive, kSampled };

struct PropertyResult {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::uint64_t cases = 0;
  std::string detail;  // first failure, or why the property was skipped
};

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::kExhaustive;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

/// Uniform x, then u^{-1} a random prefix of x, then J a uniformly random
/// subset of Pi cap x Pi. Always a member of B(W).
class TripleSampler {
 public:
  TripleSampler(const GroupTable& t, std::uint64_t seed);
  Triple operator()();

 private:
  const GroupTable& t_;
  std::mt19937_64 rng_;
};

std::vector<PropertyResult> verify_group(const GroupTable& t, const VerifyOptions& opts);

}  // namespace rcsa

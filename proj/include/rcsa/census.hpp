#pragma once

// Counting |B(W)| = sum over x of |{u : u <=_R x}| * 2^{|Pi cap x Pi|}.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rcsa/root_system.hpp"
#include "rcsa/weyl_group.hpp"

namespace rcsa {

enum class DownsetBackend {
  kBitset,   // Phi+(u) subset of Phi+(x) for every u no longer than x
  kLattice,  // inclusion-exclusion over lower covers, via meets x w_S
};

std::optional<DownsetBackend> parse_backend(std::string_view name);

/// Thread count from RCSA_THREADS, else the hardware concurrency.
unsigned default_thread_count();

struct CensusOptions {
  unsigned threads = 1;
  DownsetBackend backend = DownsetBackend::kBitset;
  std::size_t group_cap = kDefaultGroupCap;
  /// Seconds between progress lines; zero disables progress output.
  double progress_interval = 0.0;
  std::ostream* progress = nullptr;
};

/// d(x) = |{u in W : u <=_R x}| for every x, indexed like the table.
std::vector<std::uint32_t> downset_sizes(const GroupTable& t, const CensusOptions& opts = {});

/// d(x) by the definition of the weak order. Quadratic, for cross-checks.
std::vector<std::uint32_t> downset_sizes_definitional(const GroupTable& t);

/// Throws std::overflow_error if the sum leaves 64 bits.
std::uint64_t count_BW(const GroupTable& t, std::span<const std::uint32_t> downsets);
std::uint64_t count_BW(const GroupTable& t, const CensusOptions& opts = {});

struct CensusRow {
  std::string label;
  std::uint64_t group_order = 0;
  std::uint64_t b_count = 0;
  std::int64_t elapsed_ms = 0;
  std::string error;  // nonempty when the row failed
  bool ok() const { return error.empty(); }
};

CensusRow census_one(const CartanMatrix& cartan, const CensusOptions& opts);

/// One row per label; a failing label yields a row with `error` set and the
/// remaining labels are still processed. Labels may also be paths to JSON
/// Cartan matrices.
std::vector<CensusRow> census_run(std::span<const std::string> labels, const CensusOptions& opts);

/// "type,group_order,b_count,elapsed_ms" plus one line per successful row.
std::string census_csv(std::span<const CensusRow> rows);

/// Published |B(W)| for the built-in types. C_n shares the value of B_n.
std::optional<std::uint64_t> published_count(std::string_view label);

/// A built-in label, or a path to a JSON Cartan matrix.
CartanMatrix load_cartan(std::string_view type_arg);

}  // namespace rcsa

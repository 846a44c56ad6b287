#include "rcsa/census.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace rcsa {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kLatticeMaxRank = 16;

class Progress {
 public:
  Progress(const CensusOptions& opts, std::string label, std::size_t total)
      : out_(opts.progress_interval > 0 ? opts.progress : nullptr),
        interval_(opts.progress_interval),
        label_(std::move(label)),
        total_(total),
        last_(Clock::now()) {}

  void advance(std::size_t n) {
    std::size_t done = done_.fetch_add(n) + n;
    if (out_ == nullptr) return;
    std::lock_guard lock(mu_);
    auto now = Clock::now();
    if (std::chrono::duration<double>(now - last_).count() < interval_) return;
    last_ = now;
    *out_ << label_ << ": " << done << "/" << total_ << " elements" << std::endl;
  }

 private:
  std::ostream* out_;
  double interval_;
  std::string label_;
  std::size_t total_;
  std::atomic<std::size_t> done_{0};
  std::mutex mu_;
  Clock::time_point last_;
};

// Runs body(i) for i in [begin, end) on `threads` workers pulling fixed-size
// chunks from a shared counter.
template <class Body>
void parallel_chunks(std::size_t begin, std::size_t end, unsigned threads, Progress& progress, Body&& body) {
  constexpr std::size_t kChunk = 64;
  std::atomic<std::size_t> next{begin};
  auto worker = [&] {
    for (;;) {
      std::size_t lo = next.fetch_add(kChunk);
      if (lo >= end) return;
      std::size_t hi = std::min(end, lo + kChunk);
      for (std::size_t i = lo; i < hi; ++i) body(i);
      progress.advance(hi - lo);
    }
  };
  if (threads <= 1 || end - begin <= kChunk) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
}

std::vector<std::uint32_t> downsets_bitset(const GroupTable& t, const CensusOptions& opts) {
  const std::size_t n = t.size();
  std::vector<std::uint32_t> d(n, 0);
  Progress progress(opts, t.root_system().cartan().label(), n);

  if (t.root_system().num_positive() <= 64) {
    std::vector<std::uint64_t> bits(n);
    for (std::size_t u = 0; u < n; ++u) bits[u] = t.inversions({static_cast<std::uint32_t>(u)}).word(0);
    const std::uint64_t* data = bits.data();
    parallel_chunks(0, n, opts.threads, progress, [&](std::size_t x) {
      const std::uint64_t outside = ~data[x];
      const std::size_t end = t.length_end(t.length({static_cast<std::uint32_t>(x)}));
      std::uint64_t count = 0;
      for (std::size_t u = 0; u < end; ++u) count += (data[u] & outside) == 0;
      d[x] = static_cast<std::uint32_t>(count);
    });
    return d;
  }

  parallel_chunks(0, n, opts.threads, progress, [&](std::size_t x) {
    const Element ex{static_cast<std::uint32_t>(x)};
    const InversionSet& ix = t.inversions(ex);
    const std::size_t end = t.length_end(t.length(ex));
    std::uint32_t count = 0;
    for (std::size_t u = 0; u < end; ++u) count += t.inversions({static_cast<std::uint32_t>(u)}).subset_of(ix);
    d[x] = count;
  });
  return d;
}

// For S a set of right descents of x, the lower covers {x s_i : i in S} have
// meet x w_S, so
//   d(x) = 1 + sum over nonempty S of (-1)^{|S|+1} d(x w_S).
std::vector<std::uint32_t> downsets_lattice(const GroupTable& t, const CensusOptions& opts) {
  const int r = t.rank();
  if (r > kLatticeMaxRank)
    throw std::invalid_argument("lattice backend supports rank <= " + std::to_string(kLatticeMaxRank));
  std::vector<std::vector<std::uint8_t>> parabolic_words(std::size_t{1} << r);
  for (SimpleSet S = 1; S < (SimpleSet{1} << r); ++S) {
    auto w = t.word(longest_parabolic(t, S));
    parabolic_words[S].assign(w.begin(), w.end());
  }

  const std::size_t n = t.size();
  std::vector<std::int64_t> d(n, 0);
  d[0] = 1;
  Progress progress(opts, t.root_system().cartan().label(), n);
  for (int l = 1; l <= t.max_length(); ++l) {
    parallel_chunks(t.length_end(l - 1), t.length_end(l), opts.threads, progress, [&](std::size_t xi) {
      const Element x{static_cast<std::uint32_t>(xi)};
      const SimpleSet D = right_descents(t, x);
      std::int64_t sum = 1;
      for (SimpleSet S = D; S != 0; S = (S - 1) & D) {
        Element y = x;
        for (auto letter : parabolic_words[S]) y = t.right_mult(y, letter);
        sum += (popcount(S) % 2 == 1 ? 1 : -1) * d[y.index];
      }
      d[xi] = sum;
    });
  }
  return {d.begin(), d.end()};
}

}  // namespace

std::optional<DownsetBackend> parse_backend(std::string_view name) {
  if (name == "bitset") return DownsetBackend::kBitset;
  if (name == "lattice") return DownsetBackend::kLattice;
  return std::nullopt;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("RCSA_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<std::uint32_t> downset_sizes(const GroupTable& t, const CensusOptions& opts) {
  switch (opts.backend) {
    case DownsetBackend::kBitset:
      return downsets_bitset(t, opts);
    case DownsetBackend::kLattice:
      return downsets_lattice(t, opts);
  }
  throw std::invalid_argument("unknown backend");
}

std::vector<std::uint32_t> downset_sizes_definitional(const GroupTable& t) {
  std::vector<std::uint32_t> d(t.size(), 0);
  for (std::uint32_t x = 0; x < t.size(); ++x)
    for (std::uint32_t u = 0; u < t.size(); ++u) d[x] += leq_weak_definitional(t, {u}, {x});
  return d;
}

std::uint64_t count_BW(const GroupTable& t, std::span<const std::uint32_t> downsets) {
  if (downsets.size() != t.size()) throw std::invalid_argument("downset vector does not match the group");
  std::uint64_t total = 0;
  for (std::uint32_t x = 0; x < t.size(); ++x) {
    std::uint64_t term = 0;
    const std::uint64_t choices = std::uint64_t{1} << popcount(pi_cap_xpi(t, {x}));
    if (__builtin_mul_overflow(std::uint64_t{downsets[x]}, choices, &term) ||
        __builtin_add_overflow(total, term, &total))
      throw std::overflow_error("|B(W)| does not fit in 64 bits");
  }
  return total;
}

std::uint64_t count_BW(const GroupTable& t, const CensusOptions& opts) {
  return count_BW(t, downset_sizes(t, opts));
}

CensusRow census_one(const CartanMatrix& cartan, const CensusOptions& opts) {
  const auto start = Clock::now();
  CensusRow row;
  row.label = cartan.label();
  const GroupTable t = enumerate_group(RootSystem(cartan), opts.group_cap);
  row.group_order = t.size();
  row.b_count = count_BW(t, opts);
  row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return row;
}

std::vector<CensusRow> census_run(std::span<const std::string> labels, const CensusOptions& opts) {
  std::vector<CensusRow> rows;
  for (const auto& label : labels) {
    try {
      rows.push_back(census_one(load_cartan(label), opts));
    } catch (const std::exception& e) {
      CensusRow failed;
      failed.label = label;
      failed.error = e.what();
      rows.push_back(std::move(failed));
    }
  }
  return rows;
}

std::string census_csv(std::span<const CensusRow> rows) {
  std::ostringstream out;
  out << "type,group_order,b_count,elapsed_ms\n";
  for (const auto& row : rows)
    if (row.ok()) out << row.label << ',' << row.group_order << ',' << row.b_count << ',' << row.elapsed_ms << '\n';
  return out.str();
}

std::optional<std::uint64_t> published_count(std::string_view label) {
  static const std::map<std::string, std::uint64_t, std::less<>> table = {
      {"A1", 4},          {"A2", 26},          {"A3", 252},        {"A4", 3368},
      {"A5", 58810},      {"A6", 1290930},     {"A7", 34604844},   {"A8", 1107490596},
      {"B2", 38},         {"B3", 664},         {"B4", 17848},      {"B5", 672004},
      {"B6", 33369560},   {"B7", 2094849020},  {"D4", 6512},       {"D5", 238720},
      {"D6", 11633624},   {"D7", 720453984},   {"E6", 38305190},   {"F4", 91244},
      {"G2", 68}};
  std::string key(label);
  if (!key.empty() && key[0] == 'C') key[0] = 'B';
  if (auto it = table.find(key); it != table.end()) return it->second;
  return std::nullopt;
}

CartanMatrix load_cartan(std::string_view type_arg) {
  const std::filesystem::path path(type_arg);
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) return CartanMatrix::from_label(type_arg);
  std::ifstream in(path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("cannot parse " + path.string() + ": " + e.what());
  }
  if (j.is_array()) return CartanMatrix::from_json({{"label", path.stem().string()}, {"cartan", j}});
  return CartanMatrix::from_json(j);
}

}  // namespace rcsa

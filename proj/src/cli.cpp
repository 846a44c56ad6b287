#include "rcsa/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>

#include "CLI11.hpp"
#include "rcsa/census.hpp"
#include "rcsa/coideal.hpp"
#include "rcsa/verify.hpp"
#include "rcsa/words.hpp"

namespace rcsa {

namespace {

// Exit statuses.
constexpr int kOk = 0;
constexpr int kFailed = 1;  // verification failed or a count disagrees with the published value
constexpr int kError = 2;   // bad input

const std::vector<std::string> kPublishedTypes = {"A1", "A2", "A3", "A4", "A5", "A6", "A7",
                                               "A8", "B2", "B3", "B4", "B5", "B6", "B7",
                                               "D4", "D5", "D6", "D7", "E6", "F4", "G2"};

std::string generator_word(const GroupTable& t, Element w) {
  auto letters = t.word(w);
  if (letters.empty()) return "e";
  std::string out;
  for (auto letter : letters) out += (out.empty() ? "s" : " s") + std::to_string(letter + 1);
  return out;
}

std::string subset_string(SimpleSet s) {
  if (s == 0) return "∅";
  std::string out = "{";
  for (int i : simple_indices(s)) out += (out.size() > 1 ? "," : "") + std::to_string(i);
  return out + "}";
}

GroupTable load_group(const std::string& type_arg) {
  return enumerate_group(RootSystem(load_cartan(type_arg)));
}

// Writes to the file at `path`, or to `fallback` when path is empty.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw std::invalid_argument("cannot open " + path + " for writing");
    stream_ = file_.get();
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

bool report_published_mismatch(const std::string& label, std::uint64_t count, std::ostream& err) {
  auto expected = published_count(label);
  if (!expected || *expected == count) return false;
  err << "MISMATCH " << label << ": computed |B(W)| = " << count << ", published value " << *expected << "\n";
  return true;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weyl group combinatorics of homogeneous right coideal subalgebras", "rcsa"};
  app.require_subcommand(1, 1);

  std::string type_arg;
  unsigned threads = default_thread_count();
  std::string backend_name = "bitset";

  auto* census = app.add_subcommand("census", "count |B(W)| for several types and emit CSV");
  std::vector<std::string> types = kPublishedTypes;
  std::string csv_path;
  double progress = 0.0;
  census->add_option("--types", types, "comma-separated type labels or matrix files")->delimiter(',');
  census->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  census->add_option("--csv", csv_path, "write the CSV here instead of standard output");
  census->add_option("--backend", backend_name, "bitset or lattice");
  census->add_option("--progress", progress, "seconds between progress lines on standard error");

  auto* count = app.add_subcommand("count", "print |B(W)|");
  count->add_option("--type", type_arg, "type label or matrix file")->required();
  count->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  count->add_option("--backend", backend_name, "bitset or lattice");

  auto* enumerate = app.add_subcommand("enumerate", "stream B(W) as newline-delimited JSON");
  std::string out_path, what = "triples";
  enumerate->add_option("--type", type_arg, "type label or matrix file")->required();
  enumerate->add_option("--out", out_path, "output file");
  enumerate->add_option("--what", what, "triples, elements or roots")
      ->check(CLI::IsMember({"triples", "elements", "roots"}));

  auto* decompose = app.add_subcommand("decompose", "find the triple (x,u,J) of a pair (v,w)");
  std::string v_word, w_word;
  bool as_json = false;
  decompose->add_option("--type", type_arg, "type label or matrix file")->required();
  decompose->add_option("--v", v_word, "word for v")->required();
  decompose->add_option("--w", w_word, "word for w")->required();
  decompose->add_flag("--json", as_json, "print the JSON triple record");

  auto* table1 = app.add_subcommand("table1", "per-element census table (G2 by default)");
  std::string table_type = "G2";
  table1->add_option("--type", table_type, "type label or matrix file");

  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  std::string level_name;
  VerifyOptions vopts;
  verify->add_option("--type", type_arg, "type label or matrix file")->required();
  verify->add_option("--level", level_name, "exhaustive or sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  verify->add_option("--samples", vopts.samples, "samples per property at the sampled level");
  verify->add_option("--seed", vopts.seed, "random seed");
  verify->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int status = app.exit(e, out, err);
    return status == 0 ? kOk : kError;
  }

  try {
    auto backend = parse_backend(backend_name);
    if (!backend) throw std::invalid_argument("unknown backend '" + backend_name + "'");
    CensusOptions copts;
    copts.threads = threads;
    copts.backend = *backend;

    if (census->parsed()) {
      copts.progress_interval = progress;
      copts.progress = &err;
      auto rows = census_run(types, copts);
      int status = kOk;
      for (const auto& row : rows) {
        if (!row.ok()) {
          err << "error: " << row.label << ": " << row.error << "\n";
          status = std::max(status, kError);
        } else if (report_published_mismatch(row.label, row.b_count, err)) {
          status = std::max(status, kFailed);
        }
      }
      *Sink(csv_path, out) << census_csv(rows);
      return status;
    }

    if (count->parsed()) {
      const GroupTable t = load_group(type_arg);
      const std::uint64_t b = count_BW(t, copts);
      out << b << "\n";
      return report_published_mismatch(t.root_system().cartan().label(), b, err) ? kFailed : kOk;
    }

    if (enumerate->parsed()) {
      Sink sink(out_path, out);
      if (what == "roots") {
        *sink << RootSystem(load_cartan(type_arg)).to_json().dump() << "\n";
        return kOk;
      }
      const GroupTable t = load_group(type_arg);
      if (what == "elements") {
        for (std::uint32_t i = 0; i < t.size(); ++i) *sink << element_json(t, {i}).dump() << "\n";
      } else {
        enumerate_triples(t, [&](const Triple& tr) { *sink << triple_json(t, tr).dump() << "\n"; });
      }
      return kOk;
    }

    if (decompose->parsed()) {
      const GroupTable t = load_group(type_arg);
      const Pair p{t.from_word(parse_word(v_word, t.rank())), t.from_word(parse_word(w_word, t.rank()))};
      auto tr = pair_to_triple(t, p);
      if (!tr) {
        out << "not in A(W)\n";
      } else if (as_json) {
        out << triple_json(t, *tr).dump() << "\n";
      } else {
        out << "x=" << format_word(t, tr->x) << ", u=" << format_word(t, tr->u) << ", J=" << subset_string(tr->J)
            << "\n";
      }
      return kOk;
    }

    if (table1->parsed()) {
      const GroupTable t = load_group(table_type);
      const auto d = downset_sizes(t, copts);
      out << "x\t|{u in W | u <=_R x}|\t|Pi cap xPi|\n";
      for (std::uint32_t i = 0; i < t.size(); ++i)
        out << generator_word(t, {i}) << "\t" << d[i] << "\t" << popcount(pi_cap_xpi(t, {i})) << "\n";
      out << "|B(W)| = " << count_BW(t, d) << "\n";
      return kOk;
    }

    if (verify->parsed()) {
      const GroupTable t = load_group(type_arg);
      if (level_name.empty()) level_name = t.size() <= 2000 ? "exhaustive" : "sampled";
      vopts.level = level_name == "exhaustive" ? VerifyLevel::kExhaustive : VerifyLevel::kSampled;
      vopts.threads = threads;
      bool all = true;
      for (const auto& r : verify_group(t, vopts)) {
        if (r.skipped) {
          out << "SKIP " << r.name << ": " << r.detail << "\n";
        } else if (r.passed) {
          out << "PASS " << r.name << " [" << r.cases << " cases]\n";
        } else {
          out << "FAIL " << r.name << ": " << r.detail << "\n";
          all = false;
        }
      }
      return all ? kOk : kFailed;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace rcsa

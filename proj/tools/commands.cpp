#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string_view>

#include "cartsum/bench.hpp"
#include "cartsum/engine.hpp"
#include "cartsum/errors.hpp"
#include "cartsum/isotopes.hpp"
#include "cartsum/vectors_file.hpp"

namespace cartsum::cli {

namespace {

class UsageFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest representation that reads back to the same double.
std::string format_shortest(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::string format_printf(const char* fmt, double x) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof(buf), fmt, x);
  return std::string(buf, static_cast<std::size_t>(std::max(n, 0)));
}

std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    parts.emplace_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

struct TopkArgs {
  std::string input;
  std::size_t k = 0;
  std::string method = "tree";
  bool counters = false;
};

int cmd_topk(const TopkArgs& args, std::ostream& out) {
  const auto vectors = load_vectors(args.input);
  const Method method = *parse_method(args.method);
  const TopKResult result = top_k(method, vectors, args.k);

  std::string text;
  for (std::size_t r = 0; r < result.items.size(); ++r) {
    const IndexedValue& item = result.items[r];
    text += std::to_string(r + 1);
    text += '\t';
    text += format_shortest(item.value);
    text += '\t';
    for (std::size_t d = 0; d < item.indices.size(); ++d) {
      if (d) text += ',';
      text += std::to_string(item.indices[d]);
    }
    text += '\n';
  }
  if (args.counters) {
    const auto& c = result.counters;
    text += "# pushes=" + std::to_string(c.heap_pushes) + " pops=" + std::to_string(c.heap_pops) +
            " peak_fringe=" + std::to_string(c.peak_fringe_entries) + "\n";
  }
  out << text;
  return kExitOk;
}

struct IsotopesArgs {
  std::string formula;
  std::size_t k = 1;
  std::string data;
  std::optional<double> prune_delta;
  bool renormalize = false;
  std::string method = "tree";
};

int cmd_isotopes(const IsotopesArgs& args, std::ostream& out) {
  std::optional<iso::IsotopeTable> loaded;
  if (!args.data.empty()) loaded = iso::load_isotope_table(args.data, args.renormalize);
  const iso::IsotopeTable& table = loaded ? *loaded : iso::builtin_isotope_table();

  iso::PeakOptions options;
  options.expand.prune_delta = args.prune_delta;
  options.method = *parse_method(args.method);
  const auto peaks = iso::top_peaks(args.formula, args.k, table, options);

  std::string text;
  for (std::size_t r = 0; r < peaks.size(); ++r) {
    const iso::Peak& peak = peaks[r];
    text += std::to_string(r + 1);
    text += '\t';
    text += format_printf("%.6f", peak.mass);
    text += '\t';
    text += format_printf("%.12g", peak.abundance);
    text += '\t';
    for (std::size_t e = 0; e < peak.configuration.size(); ++e) {
      const auto& el = peak.configuration[e];
      if (e) text += ';';
      text += el.element;
      text += '[';
      for (std::size_t j = 0; j < el.counts.size(); ++j) {
        if (j) text += ',';
        text += std::to_string(el.counts[j]);
      }
      text += ']';
    }
    text += '\n';
  }
  out << text;
  return kExitOk;
}

struct BenchArgs {
  std::string sizes;
  std::string methods = "tree,tensor";
  std::uint64_t seed = 1;
  std::string out = "-";
  std::size_t repeats = 3;
};

int cmd_bench(const BenchArgs& args, std::ostream& out) {
  std::vector<Method> methods;
  for (const std::string& name : split_commas(args.methods)) {
    auto method = parse_method(name);
    if (!method) throw UsageFailure("unknown method '" + name + "' (expected tree, tensor or oracle)");
    methods.push_back(*method);
  }
  std::vector<std::size_t> sizes;
  for (const std::string& field : split_commas(args.sizes)) {
    std::size_t m = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), m);
    if (ec != std::errc{} || ptr != field.data() + field.size() || m == 0) {
      throw UsageFailure("invalid size '" + field + "' (expected positive integers)");
    }
    sizes.push_back(m);
  }

  std::string csv = "m,n,k,method,wall_seconds,heap_pushes,heap_pops,peak_fringe_entries,peak_entry_bytes_estimate\n";
  for (std::size_t m : sizes) {
    const auto vectors = generate_instance(m, m, args.seed);
    for (Method method : methods) {
      const Measurement run = measure(method, vectors, m, args.repeats);
      const auto& c = run.result.counters;
      csv += std::to_string(m) + ',' + std::to_string(m) + ',' + std::to_string(m) + ',';
      csv += std::string(method_name(method)) + ',';
      csv += format_printf("%.9g", run.wall_seconds) + ',';
      csv += std::to_string(c.heap_pushes) + ',' + std::to_string(c.heap_pops) + ',';
      csv += std::to_string(c.peak_fringe_entries) + ',' + std::to_string(c.peak_entry_bytes_estimate) + '\n';
    }
  }

  if (args.out == "-") {
    out << csv;
  } else {
    std::ofstream file(args.out, std::ios::binary | std::ios::trunc);
    if (!file) throw DomainError("cannot write '" + args.out + "'");
    file << csv;
    if (!file) throw DomainError("failed writing '" + args.out + "'");
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Top-k selection over Cartesian sums of vectors, and isotope peak prediction", "cartsum"};
  app.require_subcommand(1);
  const auto method_names = CLI::IsMember({"tree", "tensor", "oracle"});

  TopkArgs topk;
  auto* topk_cmd = app.add_subcommand("topk", "Largest k values of X1 + X2 + ... + Xm");
  topk_cmd->add_option("--input", topk.input, "Vectors file: one comma-separated vector per line")
      ->required();
  topk_cmd->add_option("--k", topk.k, "Number of values")->required();
  topk_cmd->add_option("--method", topk.method, "Engine")->check(method_names)->capture_default_str();
  topk_cmd->add_flag("--counters", topk.counters, "Append a comment line with heap counters");

  IsotopesArgs isotopes;
  auto* iso_cmd = app.add_subcommand("isotopes", "Most abundant isotope peaks of a molecular formula");
  iso_cmd->add_option("--formula", isotopes.formula, "Formula, e.g. C3H8")->required();
  iso_cmd->add_option("--k", isotopes.k, "Number of peaks")->check(CLI::PositiveNumber)->capture_default_str();
  iso_cmd->add_option("--data", isotopes.data, "Isotope table TSV (default: built-in)");
  iso_cmd->add_option("--prune-delta", isotopes.prune_delta,
                      "Drop per-element configurations more than this many log units below the best")
      ->check(CLI::NonNegativeNumber);
  iso_cmd->add_flag("--renormalize", isotopes.renormalize, "Rescale table abundances to sum to 1");
  iso_cmd->add_option("--method", isotopes.method, "Engine")->check(method_names)->capture_default_str();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time engines on random instances with m = n = k");
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated sizes m")->required();
  bench_cmd->add_option("--methods", bench.methods, "Comma-separated engines")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Instance seed")->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "CSV output path ('-' for standard output)")->capture_default_str();
  bench_cmd->add_option("--repeats", bench.repeats, "Runs per cell; the minimum wall time is kept")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*topk_cmd) return cmd_topk(topk, out);
    if (*iso_cmd) return cmd_isotopes(isotopes, out);
    if (*bench_cmd) return cmd_bench(bench, out);
  } catch (const UsageFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace cartsum::cli

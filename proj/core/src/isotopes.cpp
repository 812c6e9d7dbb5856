#include "cartsum/isotopes.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "cartsum/errors.hpp"

namespace cartsum::iso {

namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool valid_symbol(std::string_view s) {
  return (s.size() == 1 && is_upper(s[0])) || (s.size() == 2 && is_upper(s[0]) && is_lower(s[1]));
}

std::optional<double> parse_real(std::string_view field) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

[[noreturn]] void fail_line(std::size_t line, const std::string& what) {
  throw DomainError("isotope table line " + std::to_string(line) + ": " + what);
}

}  // namespace

const std::vector<Isotope>* IsotopeTable::find(std::string_view symbol) const {
  auto it = elements_.find(symbol);
  return it == elements_.end() ? nullptr : &it->second;
}

IsotopeTable parse_isotope_table(std::string_view text, bool renormalize) {
  IsotopeTable table;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    std::string_view fields[3];
    std::size_t n_fields = 0;
    for (std::size_t start = 0;;) {
      const std::size_t tab = line.find('\t', start);
      if (n_fields == 3) fail_line(line_no, "expected 3 tab-separated fields");
      fields[n_fields++] = line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start);
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (n_fields != 3) fail_line(line_no, "expected 3 tab-separated fields");
    if (!valid_symbol(fields[0])) fail_line(line_no, "invalid element symbol '" + std::string(fields[0]) + "'");
    auto mass = parse_real(fields[1]);
    if (!mass) fail_line(line_no, "non-numeric mass '" + std::string(fields[1]) + "'");
    if (*mass <= 0.0) fail_line(line_no, "mass must be positive");
    auto abundance = parse_real(fields[2]);
    if (!abundance) fail_line(line_no, "non-numeric abundance '" + std::string(fields[2]) + "'");
    if (!(*abundance > 0.0 && *abundance <= 1.0)) fail_line(line_no, "abundance must be in (0, 1]");

    auto& isotopes = table.elements_[std::string(fields[0])];
    for (const Isotope& existing : isotopes) {
      if (existing.mass == *mass) {
        fail_line(line_no, "duplicate isotope " + std::string(fields[0]) + " " + std::string(fields[1]));
      }
    }
    isotopes.push_back({*mass, *abundance});
  }

  for (auto& [symbol, isotopes] : table.elements_) {
    double total = 0.0;
    for (const Isotope& iso : isotopes) total += iso.abundance;
    if (std::abs(total - 1.0) > 1e-3) {
      if (!renormalize) {
        throw DomainError("isotope table: abundances of " + symbol + " sum to " + std::to_string(total) +
                          ", not 1");
      }
    }
    if (renormalize) {
      for (Isotope& iso : isotopes) iso.abundance /= total;
    }
  }
  return table;
}

IsotopeTable load_isotope_table(const std::filesystem::path& path, bool renormalize) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open isotope table '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_isotope_table(buffer.str(), renormalize);
}

const IsotopeTable& builtin_isotope_table() {
  static const IsotopeTable table = parse_isotope_table(builtin_isotope_table_text());
  return table;
}

ElementCounts parse_formula(std::string_view text, const IsotopeTable& table) {
  if (text.empty()) throw ParseError("empty formula", 0);
  ElementCounts counts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t symbol_start = pos;
    if (!is_upper(text[pos])) {
      throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
    }
    ++pos;
    if (pos < text.size() && is_lower(text[pos])) ++pos;
    const std::string symbol(text.substr(symbol_start, pos - symbol_start));
    if (!table.contains(symbol)) throw ParseError("unknown element '" + symbol + "'", symbol_start);
    for (const ElementCount& seen : counts) {
      if (seen.symbol == symbol) throw ParseError("repeated element '" + symbol + "'", symbol_start);
    }

    std::uint64_t count = 1;
    const std::size_t digits_start = pos;
    if (pos < text.size() && is_digit(text[pos])) {
      count = 0;
      while (pos < text.size() && is_digit(text[pos])) {
        count = count * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (count > std::numeric_limits<std::uint32_t>::max()) {
          throw ParseError("count too large for '" + symbol + "'", digits_start);
        }
        ++pos;
      }
      if (count == 0) throw ParseError("zero count for '" + symbol + "'", digits_start);
    }
    counts.push_back({symbol, static_cast<std::uint32_t>(count)});
  }
  return counts;
}

std::size_t composition_count(std::uint64_t count, std::size_t isotopes) noexcept {
  if (isotopes == 0) return 0;
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  // C(count + i, i) built up for i = 1 .. e-1. Each step multiplies by
  // (count + i) / i and stays integral, so dividing i out through the gcd
  // first keeps the arithmetic exact.
  std::uint64_t total = 1;
  for (std::uint64_t i = 1; i < isotopes; ++i) {
    const std::uint64_t g = std::gcd(total, i);
    std::uint64_t product = 0;
    if (__builtin_mul_overflow(total / g, (count + i) / (i / g), &product) || product > kMax) return kMax;
    total = product;
  }
  return static_cast<std::size_t>(total);
}

IsotopologueVector expand_element(std::string_view symbol, std::uint32_t count, const IsotopeTable& table,
                                  const ExpandOptions& options) {
  const std::vector<Isotope>* isotopes = table.find(symbol);
  if (!isotopes) throw DomainError("unknown element '" + std::string(symbol) + "'");
  if (count == 0) throw DomainError("atom count for '" + std::string(symbol) + "' must be at least 1");
  const std::size_t e = isotopes->size();
  const std::size_t total = composition_count(count, e);
  if (!options.prune_delta && total > options.cap) {
    throw SizeError("multinomial expansion of " + std::string(symbol) + std::to_string(count) + " has " +
                    std::to_string(total) + " configurations, above the cap of " + std::to_string(options.cap));
  }

  IsotopologueVector out;
  out.element = std::string(symbol);
  out.count = count;
  out.isotopes = e;
  if (!options.prune_delta) {
    out.log_abundance.reserve(total);
    out.mass.reserve(total);
    out.compositions.reserve(total * e);
  }

  std::vector<double> log_p(e);
  for (std::size_t j = 0; j < e; ++j) log_p[j] = std::log((*isotopes)[j].abundance);
  const double log_count_factorial = std::lgamma(static_cast<double>(count) + 1.0);

  // Compositions in reverse lexicographic order, starting at (count, 0, ..., 0).
  std::vector<std::uint32_t> k(e, 0);
  k[0] = count;
  for (;;) {
    double log_abundance = log_count_factorial;
    double mass = 0.0;
    for (std::size_t j = 0; j < e; ++j) {
      log_abundance -= std::lgamma(static_cast<double>(k[j]) + 1.0);
      if (k[j] != 0) log_abundance += k[j] * log_p[j];
      mass += k[j] * (*isotopes)[j].mass;
    }
    out.log_abundance.push_back(log_abundance);
    out.mass.push_back(mass);
    out.compositions.insert(out.compositions.end(), k.begin(), k.end());

    // Advance: find the rightmost non-last position with atoms, move one atom
    // right and gather everything after it into the next slot.
    if (e == 1) break;
    std::size_t j = e - 1;
    while (j-- > 0 && k[j] == 0) {
    }
    if (j == static_cast<std::size_t>(-1)) break;
    const std::uint32_t tail = k[e - 1];
    k[e - 1] = 0;
    --k[j];
    k[j + 1] = tail + 1;
  }

  if (options.prune_delta) {
    const double best = *std::max_element(out.log_abundance.begin(), out.log_abundance.end());
    const double floor = best - *options.prune_delta;
    std::size_t kept = 0;
    for (std::size_t r = 0; r < out.size(); ++r) {
      if (out.log_abundance[r] < floor) continue;
      out.log_abundance[kept] = out.log_abundance[r];
      out.mass[kept] = out.mass[r];
      std::copy_n(out.compositions.begin() + static_cast<std::ptrdiff_t>(r * e), e,
                  out.compositions.begin() + static_cast<std::ptrdiff_t>(kept * e));
      ++kept;
    }
    out.log_abundance.resize(kept);
    out.mass.resize(kept);
    out.compositions.resize(kept * e);
  }
  return out;
}

std::vector<Peak> top_peaks(std::span<const IsotopologueVector> elements, std::size_t k, Method method) {
  std::vector<Vector> vectors;
  vectors.reserve(elements.size());
  for (const IsotopologueVector& el : elements) vectors.push_back(el.log_abundance);

  const TopKResult selected = top_k(method, vectors, k);
  std::vector<Peak> peaks;
  peaks.reserve(selected.items.size());
  for (const IndexedValue& item : selected.items) {
    Peak peak;
    peak.log_abundance = item.value;
    peak.abundance = std::exp(item.value);
    peak.configuration.reserve(elements.size());
    for (std::size_t d = 0; d < elements.size(); ++d) {
      const IsotopologueVector& el = elements[d];
      const Index r = item.indices[d];
      peak.mass += el.mass[r];
      auto comp = el.composition(r);
      peak.configuration.push_back({el.element, {comp.begin(), comp.end()}});
    }
    peaks.push_back(std::move(peak));
  }
  return peaks;
}

std::vector<Peak> top_peaks(std::string_view formula, std::size_t k, const IsotopeTable& table,
                            const PeakOptions& options) {
  if (k == 0) throw DomainError("k must be at least 1");
  const ElementCounts counts = parse_formula(formula, table);
  std::vector<IsotopologueVector> elements;
  elements.reserve(counts.size());
  for (const ElementCount& c : counts) elements.push_back(expand_element(c.symbol, c.count, table, options.expand));
  return top_peaks(elements, k, options.method);
}

}  // namespace cartsum::iso

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cartsum/engine.hpp"

namespace cartsum::iso {

struct Isotope {
  double mass = 0.0;       // Da
  double abundance = 0.0;  // probability in (0, 1]
};

/// Isotopes per element symbol, in the order rows appear in the source.
class IsotopeTable {
 public:
  /// nullptr if the element is not in the table.
  const std::vector<Isotope>* find(std::string_view symbol) const;
  bool contains(std::string_view symbol) const { return find(symbol) != nullptr; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::map<std::string, std::vector<Isotope>, std::less<>>& elements() const noexcept { return elements_; }

 private:
  friend IsotopeTable parse_isotope_table(std::string_view text, bool renormalize);
  std::map<std::string, std::vector<Isotope>, std::less<>> elements_;
};

/// Parses `element<TAB>mass_da<TAB>abundance` rows. Blank lines and lines
/// starting with '#' are skipped. Each element's abundances must sum to 1
/// within 1e-3 unless `renormalize` is set, in which case they are scaled to
/// sum to 1. Throws DomainError naming the offending line.
IsotopeTable parse_isotope_table(std::string_view text, bool renormalize = false);
IsotopeTable load_isotope_table(const std::filesystem::path& path, bool renormalize = false);

/// The shipped table (H, He, C, N, O, Ne, S, Cl, V, Cu, Ga, Ag, Tl).
const IsotopeTable& builtin_isotope_table();
std::string_view builtin_isotope_table_text() noexcept;

struct ElementCount {
  std::string symbol;
  std::uint32_t count = 0;
};
using ElementCounts = std::vector<ElementCount>;

/// Parses formulas of the form (Upper Lower? Digits?)+, e.g. "C3H8" or "H2O".
/// Elements keep their order of first appearance. Throws ParseError carrying
/// the byte offset of the problem.
ElementCounts parse_formula(std::string_view text, const IsotopeTable& table);

/// Every isotope composition of `count` atoms of one element.
///
/// Entry r has composition (k_1..k_e) with sum k_j = count, stored at
/// compositions[r*e .. r*e+e), and
///   log_abundance = lgamma(count+1) - sum lgamma(k_j+1) + sum k_j log(p_j)
///   mass          = sum k_j * mass_j
struct IsotopologueVector {
  std::string element;
  std::uint32_t count = 0;
  std::size_t isotopes = 0;  // e
  std::vector<double> log_abundance;
  std::vector<double> mass;
  std::vector<std::uint32_t> compositions;

  std::size_t size() const noexcept { return log_abundance.size(); }
  std::span<const std::uint32_t> composition(std::size_t r) const noexcept {
    return {compositions.data() + r * isotopes, isotopes};
  }
};

inline constexpr std::size_t kDefaultExpansionCap = 10'000'000;

struct ExpandOptions {
  // Drop entries whose log_abundance is below (max - prune_delta).
  std::optional<double> prune_delta;
  // Maximum unpruned composition count; ignored when pruning.
  std::size_t cap = kDefaultExpansionCap;
};

/// C(count + isotopes - 1, isotopes - 1), saturating at SIZE_MAX.
std::size_t composition_count(std::uint64_t count, std::size_t isotopes) noexcept;

IsotopologueVector expand_element(std::string_view symbol, std::uint32_t count, const IsotopeTable& table,
                                  const ExpandOptions& options = {});

struct ElementConfiguration {
  std::string element;
  std::vector<std::uint32_t> counts;  // per isotope, table order
};

struct Peak {
  double mass = 0.0;  // Da
  double abundance = 0.0;
  double log_abundance = 0.0;
  std::vector<ElementConfiguration> configuration;  // formula order
};

struct PeakOptions {
  ExpandOptions expand;
  Method method = Method::kTree;
};

/// Expands every element of the formula and selects the k most abundant
/// isotope configurations. Peaks are in non-increasing abundance order.
std::vector<Peak> top_peaks(std::string_view formula, std::size_t k, const IsotopeTable& table,
                            const PeakOptions& options = {});

/// Same, from already expanded per-element vectors.
std::vector<Peak> top_peaks(std::span<const IsotopologueVector> elements, std::size_t k,
                            Method method = Method::kTree);

}  // namespace cartsum::iso

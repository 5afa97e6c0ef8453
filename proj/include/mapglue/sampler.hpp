#ifndef MAPGLUE_SAMPLER_HPP
#define MAPGLUE_SAMPLER_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mapglue/bijection.hpp"
#include "mapglue/enumeration.hpp"

namespace mapglue {

struct SampleSpec {
  int q = 4;
  int f = 1;
  int m = 1;
  std::uint64_t seed = 0;
  int count = 1;
};

// Simple-boundary catalog used by the sampler: read from `dir` when a file
// is there, otherwise enumerated under the cap. Throws CatalogMissing,
// Infeasible.
Catalog sampler_catalog(const SampleSpec& spec, const EnumerationConfig& cfg = {},
                        const std::filesystem::path& dir = default_catalog_dir());

// Draw i uses SplitMix64::stream(seed, i) for a catalog entry and then a tree.
std::vector<TreeDecoratedMap> sample_tree_decorated(const SampleSpec& spec, const EnumerationConfig& cfg = {});
std::vector<TreeDecoratedMap> sample_tree_decorated(const SampleSpec& spec, const Catalog& catalog);
// Trees drawn uniformly from `trees` instead of all m-edge trees.
std::vector<TreeDecoratedMap> sample_tree_decorated(const SampleSpec& spec, const Catalog& catalog,
                                                    std::span<const DyckPath> trees);

// Every decorated map of the family, one per (catalog entry, tree).
std::vector<TreeDecoratedMap> decorated_support(const SampleSpec& spec, const Catalog& catalog);

struct ChiSquareReport {
  long draws = 0;
  int cells = 0;
  int dof = 0;
  double statistic = 0;
  double p_value = 1;
};

// Pearson test of uniformity; empty cells count. cells = counts.size().
ChiSquareReport chi_square_uniform(std::span<const long> counts);

// Frequencies of the decoration's contour among the catalan(m) trees.
ChiSquareReport tree_marginal_test(const SampleSpec& spec, long draws, const EnumerationConfig& cfg = {});
// Frequencies over the whole decorated family.
ChiSquareReport support_test(const SampleSpec& spec, long draws, const EnumerationConfig& cfg = {});

// "plain": vertex rotations, edges and tree edges of the canonical form, all
// 1-based. "record": the one-line decorated-map record. Throws UnknownFormat.
std::string export_decorated(const TreeDecoratedMap& tdm, std::string_view format);
// Inverse of the "plain" export.
TreeDecoratedMap parse_plain_export(std::string_view text);

} // namespace mapglue

#endif // MAPGLUE_SAMPLER_HPP

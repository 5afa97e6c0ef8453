#ifndef MAPGLUE_ENUMERATION_HPP
#define MAPGLUE_ENUMERATION_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "mapglue/bigint.hpp"
#include "mapglue/bijection.hpp"

namespace mapglue {

struct EnumerationConfig {
  int max_edges = 5;          // total edges; interior edges for simple boundaries
  unsigned threads = 0;       // 0: hardware concurrency
};

// -1 means unconstrained. q = 0 means general maps.
struct CatalogFilter {
  int q = 0;
  int faces = -1;      // internal faces when perimeter >= 0, all faces otherwise
  int edges = -1;      // total edges
  int perimeter = -1;  // degree of the root face
  bool simple = false;
  bool bridgeless = false;

  bool operator==(const CatalogFilter&) const = default;
};

struct Catalog {
  CatalogFilter filter;
  std::vector<CanonicalCode> entries; // sorted, distinct

  std::size_t size() const { return entries.size(); }
  PlanarMap map(std::size_t i) const { return from_code(entries[i]); }
};

// Every rooted planar map with e edges. Throws CapExceeded.
Catalog enumerate_maps(int e, const EnumerationConfig& cfg = {});

// Rooted maps with a boundary (the root face) passing the filter. With
// `simple`, the boundary must be a simple closed curve (the one-edge map
// counts, with perimeter 2); with `bridgeless`, no boundary edge is walked
// twice. Sizes are given by `edges`, or by `q` and `faces`. Throws
// CapExceeded, Infeasible.
Catalog enumerate_boundary_maps(const CatalogFilter& filter, const EnumerationConfig& cfg = {});

// Rooted q-angulations (q = 0: all maps) with the given number of faces or
// edges, unconstrained root face.
Catalog enumerate_q_angulations(int q, int faces, const EnumerationConfig& cfg = {});

// Edge subsets forming trees with m edges (m = 0: single vertices).
std::vector<std::vector<int>> tree_subsets(const PlanarMap& map, int m);
// Unordered vertex-disjoint forests with the given multiset of tree sizes.
std::vector<std::vector<std::vector<int>>> forest_subsets(const PlanarMap& map, std::vector<int> sizes);

// Pairs (rooted q-angulation with f faces, m-edge tree); q = 0 with f read
// as the edge count gives general maps.
BigInt brute_count_decorated(int q, int f, int m, RootMode mode, const EnumerationConfig& cfg = {});
// Spanning-tree decorated maps.
BigInt brute_count_spanning(int q, int f, RootMode mode, const EnumerationConfig& cfg = {});
// r-forest decorated maps. Unlabeled: rooted map, unordered trees. Labeled:
// tree i has m_i edges and a root dart, tree 1 is rooted at the map root.
BigInt brute_count_forest(int q, int f, const std::vector<int>& sizes, bool labeled,
                          const EnumerationConfig& cfg = {});
// Simple-boundary q-maps with f internal faces and perimeter 2*m1, decorated
// by an m2-edge tree meeting the boundary only at the root vertex.
BigInt brute_count_boundary_decorated(int q, int f, int m1, int m2, const EnumerationConfig& cfg = {});
// Spanning-tree decorated general maps with e edges, root anywhere.
BigInt brute_count_mullin(int e, const EnumerationConfig& cfg = {});

// Catalog files.
std::string catalog_file_name(const CatalogFilter& filter);
void write_catalog(const std::filesystem::path& path, const Catalog& catalog);
// Throws CatalogMissing, ParseError (bad header or checksum).
Catalog read_catalog(const std::filesystem::path& path);
// MAPGLUE_CATALOG_DIR, or "catalogs" under the working directory.
std::filesystem::path default_catalog_dir();

} // namespace mapglue

#endif // MAPGLUE_ENUMERATION_HPP

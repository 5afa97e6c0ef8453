#ifndef MAPGLUE_BIJECTION_HPP
#define MAPGLUE_BIJECTION_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mapglue/planar_map.hpp"
#include "mapglue/trees.hpp"

namespace mapglue {

enum class RootMode { OnTree, Anywhere };

struct TreeDecoratedMap {
  PlanarMap map;
  std::vector<int> tree_edges; // sorted edge ids of the decoration
  RootMode root_mode = RootMode::OnTree;
};

// Validates the decoration: a non-empty connected acyclic edge set, holding
// the root edge under RootMode::OnTree. Throws DecorationNotATree,
// RootNotOnTree.
TreeDecoratedMap make_decorated(PlanarMap map, std::vector<int> tree_edges,
                                RootMode mode = RootMode::OnTree);

// True if the edges form a tree (no loop, connected, acyclic). The empty set
// counts as the one-vertex tree.
bool is_tree_edge_set(const PlanarMap& map, std::span<const int> edges);

// The decoration as a plane tree with the inherited rotation, rooted at the
// map root (which must lie on it).
PlaneTree decoration_tree(const TreeDecoratedMap& tdm);

struct Unglued {
  DyckPath tree;
  BoundaryMap bmap;
};

// Cuts the map open along the decoration. The darts of the decoration become
// the external face in contour order (boundary label i = contour position i);
// every other dart keeps its id, and the 2m new darts 2E..2E+2m-1 sit on the
// interior side of the boundary. Throws RootNotOnTree, DecorationNotATree.
Unglued unglue(const TreeDecoratedMap& tdm);

// Identifies the boundary darts labelled i and j whenever the contour steps
// i and j are matched. Throws BoundaryNotSimple, SizeMismatch.
TreeDecoratedMap glue(const BoundaryMap& bmap, const DyckPath& tree);

// Tree-decorated map with a simple boundary: the tree meets the boundary at
// the root vertex of the tree only.
struct BoundaryDecoratedMap {
  BoundaryMap bmap;            // root on the remaining boundary
  std::vector<int> tree_edges; // sorted edge ids
  Dart tree_root = 0;          // root dart of the glued tree
};

// Glues the boundary darts labelled 0..2m2-1 along the tree and leaves the
// rest of the boundary. The new root is the former boundary dart 2m2.
// Throws BoundaryNotSimple, TreeTooLarge, EmptyTree.
BoundaryDecoratedMap glue_partial(const BoundaryMap& bmap, const DyckPath& tree);

struct MultiBoundaryMap {
  PlanarMap map;
  std::vector<Dart> boundary_roots; // boundary_roots[0] is the map root
};

struct ForestDecoratedMap {
  PlanarMap map;
  std::vector<std::vector<int>> trees; // sorted edge ids, tree i
  std::vector<Dart> tree_roots;        // tree_roots[0] is the map root
};

// Glues every boundary to its tree. Throws SizeMismatch,
// BoundariesNotDisjoint, BoundaryNotSimple.
ForestDecoratedMap glue_forest(const MultiBoundaryMap& mmap, std::span<const DyckPath> forest);

// Isomorphism key of a decorated rooted map.
CanonicalCode decorated_key(const PlanarMap& map, std::span<const int> tree_edges);
inline CanonicalCode decorated_key(const TreeDecoratedMap& tdm)
{
  return decorated_key(tdm.map, tdm.tree_edges);
}
CanonicalCode forest_key(const ForestDecoratedMap& fdm);

// `map ... tree=<edge ids>`; edge ids are 1-based.
std::string to_text(const TreeDecoratedMap& tdm);
TreeDecoratedMap parse_decorated(std::string_view line);
// `map ... trees=<root>:<edge ids>;<root>:<edge ids>...`
std::string to_text(const ForestDecoratedMap& fdm);
ForestDecoratedMap parse_forest(std::string_view line);

namespace detail {

struct GlueSegment {
  std::vector<Dart> walk; // boundary darts in walk order from the boundary root
  DyckPath tree;
};

struct GlueTables {
  std::vector<Dart> sigma, alpha;
  std::vector<int> new_id; // old dart -> new dart, -1 when dropped
  Dart root = 0;
};

// Combinatorial core shared by every gluing. Segment trees may cover a
// prefix of their walk only (partial gluing). No planarity check.
GlueTables glue_tables(const PlanarMap& bmap, std::span<const GlueSegment> segments, Dart root);

} // namespace detail

} // namespace mapglue

#endif // MAPGLUE_BIJECTION_HPP

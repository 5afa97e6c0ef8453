#ifndef MAPGLUE_BUBBLES_HPP
#define MAPGLUE_BUBBLES_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mapglue/bijection.hpp"

namespace mapglue {

// Darts of a circuit in the global numbering of a bubble-map: the darts of
// sphere k are offset by the dart counts of spheres 0..k-1.
struct Circuit {
  std::vector<Dart> darts;
  bool operator==(const Circuit&) const = default;
};

// Spheres pinched together at vertices, in a tree-like way.
struct BubbleMap {
  struct Pinch {
    int sphere_a = 0, vertex_a = 0, sphere_b = 0, vertex_b = 0;
    bool operator==(const Pinch&) const = default;
  };
  std::vector<PlanarMap> spheres; // spheres[0] holds the root
  std::vector<Pinch> pinches;     // one star per pinch point, centred at its first sheet

  Dart root() const { return spheres.front().root(); }
  int dart_count() const;
  // Global dart -> (sphere, local dart) and back.
  std::pair<int, Dart> locate(Dart global) const;
  Dart global_dart(int sphere, Dart local) const;
  // Global tables (sigma restricted to each sphere).
  std::vector<Dart> sigma_table() const;
  std::vector<Dart> alpha_table() const;

  bool operator==(const BubbleMap&) const = default;
};

struct BubbleGlued {
  BubbleMap bubble;
  Circuit circuit;
};

// Same identification as glue on a boundary that is only required to be
// bridgeless. Throws BoundaryHasBridge, SizeMismatch, EmptyTree.
BubbleGlued glue_bridgeless(const BoundaryMap& bmap, const DyckPath& tree);

// Scan of a circuit: a first visit of an edge is an up step, a second visit a
// down step. Throws MalformedCircuit when the visits are not those of a tree
// contour (an edge seen more than twice, crossing returns, or no closing).
DyckPath circuit_to_contour(std::span<const Dart> alpha, const Circuit& circuit);
DyckPath circuit_to_contour(const BubbleMap& bubble, const Circuit& circuit);
// The same scan, also returning the tree vertex reached after each step, with
// the visited ambient vertices split between tree vertices.
struct CircuitScan {
  DyckPath contour;
  std::vector<int> tree_vertex; // size 2m+1, tree vertices numbered from 0
  int splits = 0;               // ambient vertices met again along a new edge
};
CircuitScan scan_circuit(const BubbleMap& bubble, const Circuit& circuit);

// Inverse of glue_bridgeless. Throws CircuitMissesPinch, MalformedCircuit.
Unglued unglue_bubble(const BubbleMap& bubble, const Circuit& circuit);

struct WickedVertex {
  int vertex = 0;              // vertex id in bmap
  std::vector<int> positions;  // boundary positions sharing one contour class
  bool operator==(const WickedVertex&) const = default;
};
std::vector<WickedVertex> detect_wicked(const BoundaryMap& bmap, const DyckPath& tree);

// Consecutive circuit darts meet at a common point; at every vertex the
// corners used by the circuit do not interleave.
bool is_non_self_crossing(const BubbleMap& bubble, const Circuit& circuit);
// Incidence graph between spheres and pinch points is a tree.
bool pinch_graph_is_tree(const BubbleMap& bubble);

CanonicalCode bubble_key(const BubbleMap& bubble, const Circuit& circuit);

// `bubble spheres=<n>`, n map records, `pinch=a.v~b.v,...`, `circuit=<darts>`;
// indices are 1-based.
std::string to_text(const BubbleGlued& bg);
BubbleGlued parse_bubble(std::string_view text);

} // namespace mapglue

#endif // MAPGLUE_BUBBLES_HPP

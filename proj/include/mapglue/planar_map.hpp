#ifndef MAPGLUE_PLANAR_MAP_HPP
#define MAPGLUE_PLANAR_MAP_HPP

#include <compare>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mapglue/error.hpp"

namespace mapglue {

// Darts are 0-based in memory and 1-based in every text format.
using Dart = int;

// Opaque per-dart annotations. They are carried along by every construction
// that keeps a dart alive and are never looked at.
using Labels = std::map<Dart, std::string>;

// Rooted combinatorial map on the sphere.
//
// sigma(d) is the next dart around the vertex of d, alpha(d) the opposite
// dart of the same edge. The face on the left of a dart is its orbit under
// phi = sigma o alpha, so the root face is the phi-orbit of the root. With
// this convention a tree's contour is read with sigma^{-1} (see trees.hpp),
// which makes the corners of a tree the sigma-reversed consecutive pairs.
class PlanarMap {
public:
  PlanarMap() = default;

  // Validating constructor. Throws NotInvolution, Disconnected, NonPlanar,
  // InvalidRoot.
  static PlanarMap build(std::vector<Dart> sigma, std::vector<Dart> alpha, Dart root,
                         Labels labels = {});

  int dart_count() const { return static_cast<int>(sigma_.size()); }
  int edge_count() const { return dart_count() / 2; }
  int vertex_count() const { return vertex_count_; }
  int face_count() const { return face_count_; }

  Dart root() const { return root_; }
  Dart sigma(Dart d) const { return sigma_[d]; }
  Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
  Dart alpha(Dart d) const { return alpha_[d]; }
  Dart phi(Dart d) const { return sigma_[alpha_[d]]; }

  // Vertex (sigma-cycle) and face (phi-cycle) ids, numbered by smallest dart.
  int vertex_of(Dart d) const { return vertex_of_[d]; }
  int face_of(Dart d) const { return face_of_[d]; }
  // Edge ids are ranks of min(d, alpha(d)).
  int edge_of(Dart d) const { return edge_of_[d]; }
  Dart edge_dart(int edge) const { return edge_dart_[edge]; }
  int head_vertex(Dart d) const { return vertex_of_[alpha_[d]]; }

  std::span<const Dart> sigma_table() const { return sigma_; }
  std::span<const Dart> alpha_table() const { return alpha_; }
  const Labels& labels() const { return labels_; }

  std::vector<std::vector<Dart>> vertices() const;
  std::vector<std::vector<Dart>> faces() const;

  PlanarMap rerooted(Dart new_root) const;
  // Reverses every rotation: the orientation-reversed map.
  PlanarMap mirrored() const;
  PlanarMap with_labels(Labels labels) const;

  friend bool operator==(const PlanarMap&, const PlanarMap&) = default;

private:
  std::vector<Dart> sigma_, sigma_inv_, alpha_;
  std::vector<int> vertex_of_, face_of_, edge_of_;
  std::vector<Dart> edge_dart_;
  Dart root_ = 0;
  int vertex_count_ = 0;
  int face_count_ = 0;
  Labels labels_;
};

using BoundaryMap = PlanarMap; // the external face is the root face

// Number of cycles of a permutation given as a table.
int cycle_count(std::span<const Dart> perm);

// V - E + F of the rotation system; 2 on the sphere.
int euler_characteristic(std::span<const Dart> sigma, std::span<const Dart> alpha);

std::vector<std::vector<Dart>> faces(const PlanarMap& map);

// Darts of the root face in walk order starting at the root; position k is
// the boundary label of the dart and of its tail vertex.
std::vector<Dart> boundary_walk(const BoundaryMap& bmap);

// Simple: the boundary walk visits no vertex twice and no edge twice.
bool is_simple_boundary(const BoundaryMap& bmap);
// Bridgeless: the boundary walk uses no edge twice.
bool is_bridgeless_boundary(const BoundaryMap& bmap);
// Simple as a closed curve (no repeated vertex). Differs from
// is_simple_boundary only on the single-edge map.
bool is_simple_curve_boundary(const BoundaryMap& bmap);

bool is_q_angulation(const PlanarMap& map, int q, bool skip_external);

// Relabelling of darts by first visit of a breadth-first search from the root
// that looks at sigma before alpha. Equal codes <=> isomorphic rooted maps.
struct CanonicalCode {
  std::vector<int> code; // relabelled sigma followed by relabelled alpha

  auto operator<=>(const CanonicalCode&) const = default;
  bool operator==(const CanonicalCode&) const = default;
};

// Writes order[d] = new label of d. Returns false if some dart is unreachable.
bool canonical_order(std::span<const Dart> sigma, std::span<const Dart> alpha, Dart root,
                     std::span<int> order);
CanonicalCode canonical_code(std::span<const Dart> sigma, std::span<const Dart> alpha,
                             Dart root);
CanonicalCode canonical_code(const PlanarMap& map);
// Map with darts renamed to their canonical labels (root becomes dart 0).
PlanarMap canonical_form(const PlanarMap& map);
PlanarMap from_code(const CanonicalCode& code);
// Smallest code over all rootings: an isomorphism invariant of unrooted maps.
CanonicalCode unrooted_code(const PlanarMap& map);
// Number of pairwise non-isomorphic rootings; |Aut| = 2E / this.
int distinct_rootings(const PlanarMap& map);

// `map E=<int> root=<dart> sigma=<list> alpha=<list> [labels=<k:v,...>]`
std::string to_text(const PlanarMap& map);
PlanarMap parse_map(std::string_view line);

namespace detail {
// Splits "key=value" tokens of a record line; the first token is the tag.
std::map<std::string, std::string> parse_record(std::string_view line, std::string_view tag);
std::vector<int> parse_int_list(std::string_view text, char sep = ',');
std::string join_ints(std::span<const int> values, int offset = 0, char sep = ',');
} // namespace detail

} // namespace mapglue

#endif // MAPGLUE_PLANAR_MAP_HPP

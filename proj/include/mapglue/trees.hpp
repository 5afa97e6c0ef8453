#ifndef MAPGLUE_TREES_HPP
#define MAPGLUE_TREES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mapglue/bigint.hpp"
#include "mapglue/planar_map.hpp"
#include "mapglue/random.hpp"

namespace mapglue {

// Contour of a planted plane tree: 2m steps of +1/-1 with non-negative
// partial sums ending at 0.
class DyckPath {
public:
  DyckPath() = default;
  // Throws NotDyck.
  explicit DyckPath(std::vector<int> steps);
  // Word over 'U'/'D'. Throws NotDyck (ParseError on other characters).
  static DyckPath parse(std::string_view word);

  int edges() const { return static_cast<int>(steps_.size()) / 2; }
  int length() const { return static_cast<int>(steps_.size()); }
  const std::vector<int>& steps() const { return steps_; }
  // C(0..2m).
  std::vector<int> heights() const;
  // partner[i] is the step matched with step i (an up step with the down
  // step that closes it).
  std::vector<int> matching() const;
  std::string word() const;

  auto operator<=>(const DyckPath&) const = default;

private:
  std::vector<int> steps_;
};

using PlaneTree = PlanarMap; // exactly one face

// The walker keeps the tree on its left: with faces read by sigma o alpha the
// next dart of the contour is sigma^{-1}(alpha(d)).
inline Dart contour_next(const PlanarMap& tree, Dart d) { return tree.sigma_inv(tree.alpha(d)); }

// Throws EmptyTree for m = 0 and DecorationNotATree if the map has several faces.
DyckPath tree_to_contour(const PlaneTree& tree);
// Dart i of the result is the i-th step of the contour; the root is dart 0.
PlaneTree contour_to_tree(const DyckPath& path);

// class_of[i] for i in 0..2m, classes numbered by first position.
std::vector<int> contour_class_ids(const DyckPath& path);
std::vector<std::vector<int>> contour_classes(const DyckPath& path);

std::vector<DyckPath> enumerate_trees(int m);
BigInt catalan(long n);

DyckPath sample_tree_uniform(int m, SplitMix64& gen);
DyckPath sample_tree_uniform(int m, std::uint64_t seed);

// Maximal [lo, hi] containing x on which C - l is a Dyck path, for
// 1 <= l <= C(x). Throws LevelOutOfRange.
std::pair<int, int> subtree_window(const DyckPath& path, int x, int level);

} // namespace mapglue

#endif // MAPGLUE_TREES_HPP

#ifndef MAPGLUE_TEST_HELPERS_HPP
#define MAPGLUE_TEST_HELPERS_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "mapglue/planar_map.hpp"

namespace testing_helpers {

using mapglue::Dart;
using mapglue::PlanarMap;

// Tables and root are 1-based, as in the text format.
inline PlanarMap mk(std::vector<int> sigma, std::vector<int> alpha, int root = 1)
{
  for (auto& d : sigma)
    --d;
  for (auto& d : alpha)
    --d;
  return PlanarMap::build(std::move(sigma), std::move(alpha), root - 1);
}

inline PlanarMap single_edge() { return mk({1, 2}, {2, 1}); }
inline PlanarMap loop_map() { return mk({2, 1}, {2, 1}); }
// Three vertices of degree 2; faces 1,3,5 and 2,6,4.
inline PlanarMap triangle() { return mk({6, 3, 2, 5, 4, 1}, {2, 1, 4, 3, 6, 5}); }
// Digon u-v (darts 1, 3 on the root face) and w joined to u and v.
inline PlanarMap digon_with_center() { return mk({5, 3, 7, 1, 4, 8, 2, 6}, {2, 1, 4, 3, 6, 5, 8, 7}); }
// Two loops at one vertex, root face of degree 2.
inline PlanarMap figure_eight() { return mk({2, 3, 4, 1}, {2, 1, 4, 3}); }
// A loop with one pendant edge inside and one outside.
inline PlanarMap loop_two_pendants() { return mk({3, 5, 2, 4, 1, 6}, {2, 1, 4, 3, 6, 5}); }
// Path of two edges rooted at an end.
inline PlanarMap path2() { return mk({1, 3, 2, 4}, {2, 1, 4, 3}); }

// Same rooted map with dart d renamed perm[d].
inline PlanarMap relabel(const PlanarMap& m, const std::vector<int>& perm)
{
  const int n = m.dart_count();
  std::vector<Dart> sigma(n), alpha(n);
  for (Dart d = 0; d < n; ++d) {
    sigma[perm[d]] = perm[m.sigma(d)];
    alpha[perm[d]] = perm[m.alpha(d)];
  }
  return PlanarMap::build(std::move(sigma), std::move(alpha), perm[m.root()]);
}

inline std::vector<int> random_perm(int n, unsigned seed)
{
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::mt19937 gen(seed);
  std::shuffle(p.begin(), p.end(), gen);
  return p;
}

// Rooted isomorphism by depth-first propagation from the roots.
inline bool isomorphic(const PlanarMap& a, const PlanarMap& b)
{
  if (a.dart_count() != b.dart_count())
    return false;
  std::vector<int> f(a.dart_count(), -1), g(b.dart_count(), -1);
  std::vector<std::pair<Dart, Dart>> stack{{a.root(), b.root()}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (f[x] >= 0 || g[y] >= 0) {
      if (f[x] != y || g[y] != x)
        return false;
      continue;
    }
    f[x] = y;
    g[y] = x;
    stack.push_back({a.sigma(x), b.sigma(y)});
    stack.push_back({a.alpha(x), b.alpha(y)});
  }
  return std::count(f.begin(), f.end(), -1) == 0;
}

} // namespace testing_helpers

#endif

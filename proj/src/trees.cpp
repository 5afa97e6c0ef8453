#include "mapglue/trees.hpp"

#include <algorithm>

namespace mapglue {

DyckPath::DyckPath(std::vector<int> steps) : steps_(std::move(steps))
{
  int h = 0;
  for (int s : steps_) {
    if (s != 1 && s != -1)
      throw Error(Errc::NotDyck, "steps must be +1 or -1");
    h += s;
    if (h < 0)
      throw Error(Errc::NotDyck, "path goes below zero");
  }
  if (h != 0)
    throw Error(Errc::NotDyck, "path does not return to zero");
}

DyckPath DyckPath::parse(std::string_view word)
{
  std::vector<int> steps;
  steps.reserve(word.size());
  for (char c : word) {
    if (c == 'U')
      steps.push_back(1);
    else if (c == 'D')
      steps.push_back(-1);
    else
      throw Error(Errc::ParseError, "Dyck words use only U and D");
  }
  return DyckPath(std::move(steps));
}

std::vector<int> DyckPath::heights() const
{
  std::vector<int> c(steps_.size() + 1, 0);
  for (std::size_t i = 0; i < steps_.size(); ++i)
    c[i + 1] = c[i] + steps_[i];
  return c;
}

std::vector<int> DyckPath::matching() const
{
  std::vector<int> partner(steps_.size(), -1);
  std::vector<int> open;
  for (int i = 0; i < length(); ++i) {
    if (steps_[i] > 0) {
      open.push_back(i);
    } else {
      partner[i] = open.back();
      partner[open.back()] = i;
      open.pop_back();
    }
  }
  return partner;
}

std::string DyckPath::word() const
{
  std::string w;
  w.reserve(steps_.size());
  for (int s : steps_)
    w += s > 0 ? 'U' : 'D';
  return w;
}

DyckPath tree_to_contour(const PlaneTree& tree)
{
  if (tree.face_count() != 1)
    throw Error(Errc::DecorationNotATree, "a plane tree has exactly one face");
  std::vector<int> steps;
  std::vector<char> seen_edge(tree.edge_count(), 0);
  Dart d = tree.root();
  do {
    const int e = tree.edge_of(d);
    steps.push_back(seen_edge[e] ? -1 : 1);
    seen_edge[e] = 1;
    d = contour_next(tree, d);
  } while (d != tree.root());
  return DyckPath(std::move(steps));
}

PlaneTree contour_to_tree(const DyckPath& path)
{
  const int n = path.length();
  if (n == 0)
    throw Error(Errc::EmptyTree, "trees are indexed by m >= 1 edges");
  const auto partner = path.matching();
  std::vector<Dart> sigma(n), alpha(n);
  for (int i = 0; i < n; ++i) {
    alpha[i] = partner[i];
    // contour_next(d_i) = d_{i+1}  <=>  sigma(d_{i+1}) = alpha(d_i)
    sigma[(i + 1) % n] = partner[i];
  }
  return PlanarMap::build(std::move(sigma), std::move(alpha), 0);
}

std::vector<int> contour_class_ids(const DyckPath& path)
{
  std::vector<int> ids(path.length() + 1);
  std::vector<int> stack{0};
  int next = 1;
  ids[0] = 0;
  for (int i = 0; i < path.length(); ++i) {
    if (path.steps()[i] > 0)
      stack.push_back(next++);
    else
      stack.pop_back();
    ids[i + 1] = stack.back();
  }
  return ids;
}

std::vector<std::vector<int>> contour_classes(const DyckPath& path)
{
  const auto ids = contour_class_ids(path);
  std::vector<std::vector<int>> classes(path.edges() + 1);
  for (int i = 0; i < static_cast<int>(ids.size()); ++i)
    classes[ids[i]].push_back(i);
  return classes;
}

namespace {

void extend_paths(int up_left, int height, std::vector<int>& prefix, std::vector<DyckPath>& out)
{
  if (up_left == 0 && height == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (up_left > 0) {
    prefix.push_back(1);
    extend_paths(up_left - 1, height + 1, prefix, out);
    prefix.pop_back();
  }
  if (height > 0) {
    prefix.push_back(-1);
    extend_paths(up_left, height - 1, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<DyckPath> enumerate_trees(int m)
{
  std::vector<DyckPath> out;
  std::vector<int> prefix;
  extend_paths(m, 0, prefix, out);
  return out;
}

BigInt catalan(long n)
{
  BigInt b = binomial(2 * n, n);
  return b / (n + 1);
}

DyckPath sample_tree_uniform(int m, SplitMix64& gen)
{
  // Uniform word with m ups and m+1 downs; exactly one of its 2m+1 rotations
  // is a Dyck path followed by a final down step.
  std::vector<int> word(2 * m + 1, -1);
  std::fill(word.begin(), word.begin() + m, 1);
  for (int i = 2 * m; i > 0; --i)
    std::swap(word[i], word[gen.below(static_cast<std::uint64_t>(i) + 1)]);
  int h = 0, best = 0, start = 0;
  for (int i = 0; i <= 2 * m; ++i) {
    h += word[i];
    if (h < best) {
      best = h;
      start = i + 1;
    }
  }
  std::vector<int> steps(2 * m);
  for (int i = 0; i < 2 * m; ++i)
    steps[i] = word[(start + i) % (2 * m + 1)];
  return DyckPath(std::move(steps));
}

DyckPath sample_tree_uniform(int m, std::uint64_t seed)
{
  SplitMix64 gen(seed);
  return sample_tree_uniform(m, gen);
}

std::pair<int, int> subtree_window(const DyckPath& path, int x, int level)
{
  const auto c = path.heights();
  if (x < 0 || x >= path.length())
    throw Error(Errc::LevelOutOfRange, "position outside the contour");
  if (level < 1 || level > c[x])
    throw Error(Errc::LevelOutOfRange, "level must lie in [1, C(x)]");
  int lo = x, hi = x;
  while (lo > 0 && c[lo - 1] >= level)
    --lo;
  while (hi < path.length() && c[hi + 1] >= level)
    ++hi;
  return {lo, hi};
}

} // namespace mapglue

#include "mapglue/bijection.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace mapglue {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x)
  {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    parent[a] = b;
    return true;
  }
};

std::vector<char> dart_mask(const PlanarMap& map, std::span<const int> edges)
{
  std::vector<char> on(map.dart_count(), 0);
  for (int e : edges) {
    const Dart d = map.edge_dart(e);
    on[d] = on[map.alpha(d)] = 1;
  }
  return on;
}

std::vector<int> sorted_edges_of(const PlanarMap& map, std::span<const Dart> darts)
{
  std::set<int> edges;
  for (Dart d : darts)
    edges.insert(map.edge_of(d));
  return {edges.begin(), edges.end()};
}

} // namespace

bool is_tree_edge_set(const PlanarMap& map, std::span<const int> edges)
{
  UnionFind uf(map.vertex_count());
  std::set<int> touched;
  for (int e : edges) {
    if (e < 0 || e >= map.edge_count())
      return false;
    const Dart d = map.edge_dart(e);
    const int u = map.vertex_of(d), v = map.head_vertex(d);
    if (!uf.unite(u, v))
      return false;
    touched.insert(u);
    touched.insert(v);
  }
  return edges.empty() || touched.size() == edges.size() + 1;
}

TreeDecoratedMap make_decorated(PlanarMap map, std::vector<int> tree_edges, RootMode mode)
{
  std::sort(tree_edges.begin(), tree_edges.end());
  if (std::adjacent_find(tree_edges.begin(), tree_edges.end()) != tree_edges.end())
    throw Error(Errc::DecorationNotATree, "repeated edge in decoration");
  if (tree_edges.empty() || !is_tree_edge_set(map, tree_edges))
    throw Error(Errc::DecorationNotATree, "decoration is not a tree with at least one edge");
  if (mode == RootMode::OnTree
      && !std::binary_search(tree_edges.begin(), tree_edges.end(), map.edge_of(map.root())))
    throw Error(Errc::RootNotOnTree, "root edge is not on the decoration");
  return TreeDecoratedMap{std::move(map), std::move(tree_edges), mode};
}

PlaneTree decoration_tree(const TreeDecoratedMap& tdm)
{
  const auto& map = tdm.map;
  const auto on = dart_mask(map, tdm.tree_edges);
  if (!on[map.root()])
    throw Error(Errc::RootNotOnTree, "root edge is not on the decoration");
  std::vector<int> id(map.dart_count(), -1);
  int n = 0;
  for (Dart d = 0; d < map.dart_count(); ++d)
    if (on[d])
      id[d] = n++;
  std::vector<Dart> sigma(n), alpha(n);
  for (Dart d = 0; d < map.dart_count(); ++d) {
    if (!on[d])
      continue;
    Dart s = map.sigma(d);
    while (!on[s])
      s = map.sigma(s);
    sigma[id[d]] = id[s];
    alpha[id[d]] = id[map.alpha(d)];
  }
  return PlanarMap::build(std::move(sigma), std::move(alpha), id[map.root()]);
}

Unglued unglue(const TreeDecoratedMap& tdm)
{
  const auto& map = tdm.map;
  if (tdm.tree_edges.empty() || !is_tree_edge_set(map, tdm.tree_edges))
    throw Error(Errc::DecorationNotATree, "decoration is not a tree with at least one edge");
  const auto on = dart_mask(map, tdm.tree_edges);
  if (tdm.root_mode != RootMode::OnTree || !on[map.root()])
    throw Error(Errc::RootNotOnTree, "ungluing needs the root on the tree");

  // Contour of the decoration inside the map: the previous tree dart around
  // the head vertex.
  const int len = 2 * static_cast<int>(tdm.tree_edges.size());
  std::vector<Dart> walk;
  std::vector<int> pos(map.dart_count(), -1);
  Dart d = map.root();
  for (int i = 0; i < len; ++i) {
    pos[d] = i;
    walk.push_back(d);
    Dart s = map.sigma_inv(map.alpha(d));
    while (!on[s])
      s = map.sigma_inv(s);
    d = s;
  }

  const int n_old = map.dart_count();
  const int n = n_old + len;
  const auto fresh = [&](int i) { return n_old + ((i % len) + len) % len; };
  std::vector<Dart> sigma(n), alpha(n);
  for (Dart x = 0; x < n_old; ++x) {
    const Dart s = map.sigma(x);
    sigma[x] = on[s] ? fresh(pos[map.alpha(s)]) : s;
    alpha[x] = on[x] ? fresh(pos[x]) : map.alpha(x);
  }
  for (int i = 0; i < len; ++i) {
    sigma[fresh(i)] = walk[(i + 1) % len];
    alpha[fresh(i)] = walk[i];
  }

  std::vector<int> steps(len);
  std::vector<char> seen(map.edge_count(), 0);
  for (int i = 0; i < len; ++i) {
    const int e = map.edge_of(walk[i]);
    steps[i] = seen[e] ? -1 : 1;
    seen[e] = 1;
  }
  return Unglued{DyckPath(std::move(steps)),
                 PlanarMap::build(std::move(sigma), std::move(alpha), map.root(), map.labels())};
}

namespace detail {

GlueTables glue_tables(const PlanarMap& bmap, std::span<const GlueSegment> segments, Dart root)
{
  const int n = bmap.dart_count();
  std::vector<Dart> redirect(n, -1); // sigma target n_j -> b_{p(j)}
  std::vector<char> dropped(n, 0);
  std::vector<Dart> alpha(bmap.alpha_table().begin(), bmap.alpha_table().end());
  std::vector<Dart> sigma_override(n, -1);
  for (const auto& seg : segments) {
    const auto& b = seg.walk;
    const int len = seg.tree.length();
    const int perim = static_cast<int>(b.size());
    const auto partner = seg.tree.matching();
    for (int j = 0; j < len; ++j) {
      const Dart nj = bmap.alpha(b[j]);
      dropped[nj] = 1;
      redirect[nj] = b[partner[j]];
      alpha[b[j]] = b[partner[j]];
    }
    if (len < perim)
      sigma_override[bmap.alpha(b[perim - 1])] = b[len];
  }

  GlueTables t;
  t.new_id.assign(n, -1);
  int kept = 0;
  for (Dart x = 0; x < n; ++x)
    if (!dropped[x])
      t.new_id[x] = kept++;
  t.sigma.resize(kept);
  t.alpha.resize(kept);
  for (Dart x = 0; x < n; ++x) {
    if (dropped[x])
      continue;
    Dart s = sigma_override[x] >= 0 ? sigma_override[x] : bmap.sigma(x);
    if (redirect[s] >= 0 && sigma_override[x] < 0)
      s = redirect[s];
    t.sigma[t.new_id[x]] = t.new_id[s];
    t.alpha[t.new_id[x]] = t.new_id[alpha[x]];
  }
  t.root = t.new_id[root];
  return t;
}

} // namespace detail

namespace {

Labels transport_labels(const Labels& labels, const std::vector<int>& new_id)
{
  Labels out;
  for (const auto& [d, v] : labels)
    if (new_id[d] >= 0)
      out[new_id[d]] = v;
  return out;
}

void require_simple(const BoundaryMap& bmap)
{
  if (!is_simple_boundary(bmap))
    throw Error(Errc::BoundaryNotSimple, "gluing needs a simple boundary");
}

} // namespace

TreeDecoratedMap glue(const BoundaryMap& bmap, const DyckPath& tree)
{
  require_simple(bmap);
  auto walk = boundary_walk(bmap);
  if (tree.length() == 0)
    throw Error(Errc::EmptyTree, "trees are indexed by m >= 1 edges");
  if (static_cast<int>(walk.size()) != tree.length())
    throw Error(Errc::SizeMismatch, "perimeter must be twice the tree size");
  std::vector<detail::GlueSegment> segs{{walk, tree}};
  auto t = detail::glue_tables(bmap, segs, bmap.root());
  std::vector<Dart> tree_darts;
  for (Dart b : walk)
    tree_darts.push_back(t.new_id[b]);
  auto map = PlanarMap::build(std::move(t.sigma), std::move(t.alpha), t.root,
                              transport_labels(bmap.labels(), t.new_id));
  auto edges = sorted_edges_of(map, tree_darts);
  return TreeDecoratedMap{std::move(map), std::move(edges), RootMode::OnTree};
}

BoundaryDecoratedMap glue_partial(const BoundaryMap& bmap, const DyckPath& tree)
{
  require_simple(bmap);
  auto walk = boundary_walk(bmap);
  if (tree.length() == 0)
    throw Error(Errc::EmptyTree, "partial gluing needs m2 >= 1");
  if (tree.length() > static_cast<int>(walk.size()))
    throw Error(Errc::TreeTooLarge, "tree contour longer than the boundary");
  if (tree.length() == static_cast<int>(walk.size())) {
    auto full = glue(bmap, tree);
    return BoundaryDecoratedMap{full.map, full.tree_edges, full.map.root()};
  }
  const Dart new_root = walk[tree.length()];
  std::vector<Dart> tree_darts(walk.begin(), walk.begin() + tree.length());
  std::vector<detail::GlueSegment> segs{{std::move(walk), tree}};
  auto t = detail::glue_tables(bmap, segs, new_root);
  for (auto& d : tree_darts)
    d = t.new_id[d];
  const Dart tree_root = tree_darts.front();
  auto map = PlanarMap::build(std::move(t.sigma), std::move(t.alpha), t.root,
                              transport_labels(bmap.labels(), t.new_id));
  auto edges = sorted_edges_of(map, tree_darts);
  return BoundaryDecoratedMap{std::move(map), std::move(edges), tree_root};
}

ForestDecoratedMap glue_forest(const MultiBoundaryMap& mmap, std::span<const DyckPath> forest)
{
  const auto& map = mmap.map;
  if (mmap.boundary_roots.empty() || mmap.boundary_roots.front() != map.root())
    throw Error(Errc::InvalidRoot, "boundary 1 must be rooted at the map root");
  if (forest.size() != mmap.boundary_roots.size())
    throw Error(Errc::SizeMismatch, "one tree per boundary");
  std::vector<detail::GlueSegment> segs;
  std::vector<int> vertex_owner(map.vertex_count(), -1);
  for (std::size_t i = 0; i < forest.size(); ++i) {
    const auto walk = boundary_walk(map.rerooted(mmap.boundary_roots[i]));
    if (!is_simple_boundary(map.rerooted(mmap.boundary_roots[i])))
      throw Error(Errc::BoundaryNotSimple, "boundary " + std::to_string(i + 1) + " is not simple");
    if (forest[i].length() == 0 || static_cast<int>(walk.size()) != forest[i].length())
      throw Error(Errc::SizeMismatch, "boundary " + std::to_string(i + 1) + " perimeter mismatch");
    for (Dart b : walk) {
      int& owner = vertex_owner[map.vertex_of(b)];
      if (owner >= 0)
        throw Error(Errc::BoundariesNotDisjoint, "boundaries share a vertex");
      owner = static_cast<int>(i);
    }
    segs.push_back({walk, forest[i]});
  }
  auto t = detail::glue_tables(map, segs, map.root());
  std::vector<std::vector<Dart>> tree_darts;
  std::vector<Dart> roots;
  for (const auto& seg : segs) {
    auto& darts = tree_darts.emplace_back();
    for (Dart b : seg.walk)
      darts.push_back(t.new_id[b]);
    roots.push_back(darts.front());
  }
  auto glued = PlanarMap::build(std::move(t.sigma), std::move(t.alpha), t.root,
                                transport_labels(map.labels(), t.new_id));
  ForestDecoratedMap out{std::move(glued), {}, std::move(roots)};
  for (const auto& darts : tree_darts)
    out.trees.push_back(sorted_edges_of(out.map, darts));
  return out;
}

CanonicalCode decorated_key(const PlanarMap& map, std::span<const int> tree_edges)
{
  std::vector<int> order(map.dart_count());
  canonical_order(map.sigma_table(), map.alpha_table(), map.root(), order);
  CanonicalCode key = canonical_code(map);
  std::vector<int> darts;
  for (int e : tree_edges) {
    const Dart d = map.edge_dart(e);
    darts.push_back(order[d]);
    darts.push_back(order[map.alpha(d)]);
  }
  std::sort(darts.begin(), darts.end());
  key.code.push_back(-1);
  key.code.insert(key.code.end(), darts.begin(), darts.end());
  return key;
}

CanonicalCode forest_key(const ForestDecoratedMap& fdm)
{
  const auto& map = fdm.map;
  std::vector<int> order(map.dart_count());
  canonical_order(map.sigma_table(), map.alpha_table(), map.root(), order);
  CanonicalCode key = canonical_code(map);
  for (std::size_t i = 0; i < fdm.trees.size(); ++i) {
    std::vector<int> darts;
    for (int e : fdm.trees[i]) {
      const Dart d = map.edge_dart(e);
      darts.push_back(order[d]);
      darts.push_back(order[map.alpha(d)]);
    }
    std::sort(darts.begin(), darts.end());
    key.code.push_back(-1);
    key.code.push_back(order[fdm.tree_roots[i]]);
    key.code.insert(key.code.end(), darts.begin(), darts.end());
  }
  return key;
}

std::string to_text(const TreeDecoratedMap& tdm)
{
  return to_text(tdm.map) + " tree=" + detail::join_ints(tdm.tree_edges, 1);
}

namespace {

std::string strip_field(std::string_view line, std::string_view key, std::string& value)
{
  const std::string needle = " " + std::string(key) + "=";
  const auto at = line.find(needle);
  if (at == std::string_view::npos)
    throw Error(Errc::ParseError, "missing field " + std::string(key));
  auto end = line.find(' ', at + 1);
  if (end == std::string_view::npos)
    end = line.size();
  value = std::string(line.substr(at + needle.size(), end - at - needle.size()));
  return std::string(line.substr(0, at)) + std::string(line.substr(end));
}

} // namespace

TreeDecoratedMap parse_decorated(std::string_view line)
{
  std::string edges_text;
  const auto rest = strip_field(line, "tree", edges_text);
  auto map = parse_map(rest);
  auto edges = detail::parse_int_list(edges_text);
  for (auto& e : edges)
    --e;
  const bool on_tree = std::find(edges.begin(), edges.end(), map.edge_of(map.root())) != edges.end();
  return make_decorated(std::move(map), std::move(edges),
                        on_tree ? RootMode::OnTree : RootMode::Anywhere);
}

std::string to_text(const ForestDecoratedMap& fdm)
{
  std::string out = to_text(fdm.map) + " trees=";
  for (std::size_t i = 0; i < fdm.trees.size(); ++i) {
    if (i)
      out += ';';
    out += std::to_string(fdm.tree_roots[i] + 1) + ':' + detail::join_ints(fdm.trees[i], 1);
  }
  return out;
}

ForestDecoratedMap parse_forest(std::string_view line)
{
  std::string trees_text;
  const auto rest = strip_field(line, "trees", trees_text);
  ForestDecoratedMap fdm{parse_map(rest), {}, {}};
  std::string_view text = trees_text;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto next = text.find(';', pos);
    auto piece = text.substr(pos, next == std::string_view::npos ? text.size() - pos : next - pos);
    const auto colon = piece.find(':');
    if (colon == std::string_view::npos)
      throw Error(Errc::ParseError, "tree without root dart");
    fdm.tree_roots.push_back(detail::parse_int_list(piece.substr(0, colon)).at(0) - 1);
    auto edges = detail::parse_int_list(piece.substr(colon + 1));
    for (auto& e : edges)
      --e;
    std::sort(edges.begin(), edges.end());
    if (!is_tree_edge_set(fdm.map, edges))
      throw Error(Errc::DecorationNotATree, "forest component is not a tree");
    fdm.trees.push_back(std::move(edges));
    if (next == std::string_view::npos)
      break;
    pos = next + 1;
  }
  return fdm;
}

} // namespace mapglue

#include "mapglue/bubbles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

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
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<int> sphere_offsets(const BubbleMap& bubble)
{
  std::vector<int> off(bubble.spheres.size() + 1, 0);
  for (std::size_t s = 0; s < bubble.spheres.size(); ++s)
    off[s + 1] = off[s] + bubble.spheres[s].dart_count();
  return off;
}

// Point id of every global dart: its vertex, with pinched vertices merged.
std::vector<int> point_of_darts(const BubbleMap& bubble)
{
  const auto off = sphere_offsets(bubble);
  std::vector<int> voff(bubble.spheres.size() + 1, 0);
  for (std::size_t s = 0; s < bubble.spheres.size(); ++s)
    voff[s + 1] = voff[s] + bubble.spheres[s].vertex_count();
  UnionFind uf(voff.back());
  for (const auto& p : bubble.pinches)
    uf.unite(voff[p.sphere_a] + p.vertex_a, voff[p.sphere_b] + p.vertex_b);
  std::vector<int> point(off.back());
  for (std::size_t s = 0; s < bubble.spheres.size(); ++s)
    for (Dart d = 0; d < bubble.spheres[s].dart_count(); ++d)
      point[off[s] + d] = uf.find(voff[s] + bubble.spheres[s].vertex_of(d));
  return point;
}

void check_pinch_indices(const BubbleMap& bubble)
{
  const int n = static_cast<int>(bubble.spheres.size());
  for (const auto& p : bubble.pinches) {
    if (p.sphere_a < 0 || p.sphere_a >= n || p.sphere_b < 0 || p.sphere_b >= n
        || p.vertex_a < 0 || p.vertex_a >= bubble.spheres[p.sphere_a].vertex_count()
        || p.vertex_b < 0 || p.vertex_b >= bubble.spheres[p.sphere_b].vertex_count())
      throw Error(Errc::ParseError, "pinch refers to a missing sphere or vertex");
  }
}

} // namespace

int BubbleMap::dart_count() const
{
  int n = 0;
  for (const auto& s : spheres)
    n += s.dart_count();
  return n;
}

std::pair<int, Dart> BubbleMap::locate(Dart global) const
{
  for (int s = 0; s < static_cast<int>(spheres.size()); ++s) {
    if (global < spheres[s].dart_count())
      return {s, global};
    global -= spheres[s].dart_count();
  }
  throw Error(Errc::InvalidRoot, "dart outside the bubble-map");
}

Dart BubbleMap::global_dart(int sphere, Dart local) const
{
  Dart g = local;
  for (int s = 0; s < sphere; ++s)
    g += spheres[s].dart_count();
  return g;
}

std::vector<Dart> BubbleMap::sigma_table() const
{
  std::vector<Dart> out;
  int off = 0;
  for (const auto& s : spheres) {
    for (Dart d : s.sigma_table())
      out.push_back(d + off);
    off += s.dart_count();
  }
  return out;
}

std::vector<Dart> BubbleMap::alpha_table() const
{
  std::vector<Dart> out;
  int off = 0;
  for (const auto& s : spheres) {
    for (Dart d : s.alpha_table())
      out.push_back(d + off);
    off += s.dart_count();
  }
  return out;
}

BubbleGlued glue_bridgeless(const BoundaryMap& bmap, const DyckPath& tree)
{
  if (tree.length() == 0)
    throw Error(Errc::EmptyTree, "trees are indexed by m >= 1 edges");
  if (!is_bridgeless_boundary(bmap))
    throw Error(Errc::BoundaryHasBridge, "the boundary uses an edge twice");
  const auto walk = boundary_walk(bmap);
  const int perim = static_cast<int>(walk.size());
  if (perim != tree.length())
    throw Error(Errc::SizeMismatch, "perimeter must be twice the tree size");

  std::vector<detail::GlueSegment> segs{{walk, tree}};
  const auto t = detail::glue_tables(bmap, segs, bmap.root());
  const int n = static_cast<int>(t.sigma.size());
  std::vector<Dart> old_of(n);
  for (Dart x = 0; x < bmap.dart_count(); ++x)
    if (t.new_id[x] >= 0)
      old_of[t.new_id[x]] = x;

  // Components, numbered from the root and then along the circuit.
  std::vector<int> comp(n, -1);
  std::vector<Dart> comp_root;
  auto flood = [&](Dart start) {
    if (comp[start] >= 0)
      return;
    const int c = static_cast<int>(comp_root.size());
    comp_root.push_back(start);
    std::vector<Dart> stack{start};
    comp[start] = c;
    while (!stack.empty()) {
      const Dart d = stack.back();
      stack.pop_back();
      for (Dart e : {t.sigma[d], t.alpha[d]})
        if (comp[e] < 0) {
          comp[e] = c;
          stack.push_back(e);
        }
    }
  };
  flood(t.root);
  for (Dart b : walk)
    flood(t.new_id[b]);
  for (Dart d = 0; d < n; ++d)
    if (comp[d] < 0)
      throw Error(Errc::InternalMismatch, "component away from the circuit");

  const int ns = static_cast<int>(comp_root.size());
  std::vector<int> local(n), size(ns, 0);
  for (Dart d = 0; d < n; ++d)
    local[d] = size[comp[d]]++;
  BubbleGlued out;
  for (int c = 0; c < ns; ++c) {
    std::vector<Dart> sigma(size[c]), alpha(size[c]);
    Labels labels;
    for (Dart d = 0; d < n; ++d) {
      if (comp[d] != c)
        continue;
      sigma[local[d]] = local[t.sigma[d]];
      alpha[local[d]] = local[t.alpha[d]];
      if (auto it = bmap.labels().find(old_of[d]); it != bmap.labels().end())
        labels[local[d]] = it->second;
    }
    try {
      out.bubble.spheres.push_back(
          PlanarMap::build(std::move(sigma), std::move(alpha), local[comp_root[c]], std::move(labels)));
    } catch (const Error& e) {
      throw Error(Errc::InternalMismatch, std::string("glued component is not a sphere: ") + e.what());
    }
  }
  std::vector<int> off(ns + 1, 0);
  for (int c = 0; c < ns; ++c)
    off[c + 1] = off[c] + size[c];
  for (Dart b : walk) {
    const Dart d = t.new_id[b];
    out.circuit.darts.push_back(off[comp[d]] + local[d]);
  }

  // Points: boundary vertices merged along contour classes.
  UnionFind uf(bmap.vertex_count());
  for (const auto& cls : contour_classes(tree))
    for (int pos : cls)
      uf.unite(bmap.vertex_of(walk[pos % perim]), bmap.vertex_of(walk[cls.front() % perim]));
  std::map<int, std::set<std::pair<int, int>>> sheets;
  for (Dart d = 0; d < n; ++d) {
    const int c = comp[d];
    sheets[uf.find(bmap.vertex_of(old_of[d]))].insert({c, out.bubble.spheres[c].vertex_of(local[d])});
  }
  for (const auto& [point, set] : sheets) {
    if (set.size() < 2)
      continue;
    const auto first = *set.begin();
    for (auto it = std::next(set.begin()); it != set.end(); ++it)
      out.bubble.pinches.push_back({first.first, first.second, it->first, it->second});
  }
  if (!pinch_graph_is_tree(out.bubble))
    throw Error(Errc::InternalMismatch, "spheres are not pinched along a tree");
  return out;
}

CircuitScan scan_circuit_impl(std::span<const Dart> alpha, const Circuit& circuit,
                              const std::vector<int>* point)
{
  const int len = static_cast<int>(circuit.darts.size());
  if (len == 0 || len % 2 != 0)
    throw Error(Errc::MalformedCircuit, "a circuit has positive even length");
  std::vector<int> visits(alpha.size(), 0);
  std::vector<Dart> open;
  std::vector<int> tree_stack{0};
  std::set<int> seen_points;
  CircuitScan scan;
  std::vector<int> steps;
  scan.tree_vertex.push_back(0);
  int next_vertex = 1;
  if (point)
    seen_points.insert((*point)[circuit.darts[0]]);
  for (Dart d : circuit.darts) {
    if (d < 0 || d >= static_cast<int>(alpha.size()))
      throw Error(Errc::MalformedCircuit, "dart out of range");
    const Dart rev = alpha[d];
    if (visits[d] + visits[rev] >= 2 || visits[d] > 0)
      throw Error(Errc::MalformedCircuit, "edge visited more than twice");
    if (visits[rev] == 0) {
      steps.push_back(1);
      open.push_back(d);
      tree_stack.push_back(next_vertex++);
      if (point && !seen_points.insert((*point)[rev]).second)
        ++scan.splits;
    } else {
      if (open.empty() || open.back() != rev)
        throw Error(Errc::MalformedCircuit, "return along an edge that is not the last open one");
      steps.push_back(-1);
      open.pop_back();
      tree_stack.pop_back();
    }
    ++visits[d];
    scan.tree_vertex.push_back(tree_stack.back());
  }
  if (!open.empty())
    throw Error(Errc::MalformedCircuit, "circuit leaves edges open");
  scan.contour = DyckPath(std::move(steps));
  return scan;
}

DyckPath circuit_to_contour(std::span<const Dart> alpha, const Circuit& circuit)
{
  return scan_circuit_impl(alpha, circuit, nullptr).contour;
}

DyckPath circuit_to_contour(const BubbleMap& bubble, const Circuit& circuit)
{
  return scan_circuit(bubble, circuit).contour;
}

CircuitScan scan_circuit(const BubbleMap& bubble, const Circuit& circuit)
{
  const auto alpha = bubble.alpha_table();
  const auto point = point_of_darts(bubble);
  return scan_circuit_impl(alpha, circuit, &point);
}

Unglued unglue_bubble(const BubbleMap& bubble, const Circuit& circuit)
{
  check_pinch_indices(bubble);
  const auto sigma = bubble.sigma_table();
  const auto alpha = bubble.alpha_table();
  const int g = static_cast<int>(sigma.size());
  const int len = static_cast<int>(circuit.darts.size());
  const auto contour = circuit_to_contour(alpha, circuit);
  if (circuit.darts.front() != bubble.root())
    throw Error(Errc::MalformedCircuit, "circuit must start at the root");

  const auto point = point_of_darts(bubble);
  std::set<int> touched;
  for (Dart c : circuit.darts)
    touched.insert(point[c]);
  for (const auto& p : bubble.pinches) {
    const Dart a = bubble.global_dart(p.sphere_a, bubble.spheres[p.sphere_a].vertices()[p.vertex_a].front());
    if (!touched.count(point[a]))
      throw Error(Errc::CircuitMissesPinch, "circuit does not pass through a pinch point");
  }
  for (int k = 0; k < len; ++k)
    if (point[alpha[circuit.darts[k]]] != point[circuit.darts[(k + 1) % len]])
      throw Error(Errc::MalformedCircuit, "consecutive darts do not meet");

  std::vector<int> index(g, -1);
  for (int k = 0; k < len; ++k)
    index[circuit.darts[k]] = k;
  std::vector<Dart> sigma_b(g + len), alpha_b(g + len);
  for (Dart x = 0; x < g; ++x) {
    const int k = index[sigma[x]];
    sigma_b[x] = k >= 0 ? g + index[alpha[circuit.darts[k]]] : sigma[x];
    alpha_b[x] = index[x] >= 0 ? g + index[x] : alpha[x];
  }
  for (int j = 0; j < len; ++j) {
    sigma_b[g + j] = circuit.darts[(j + 1) % len];
    alpha_b[g + j] = circuit.darts[j];
  }
  Labels labels;
  for (int s = 0, off = 0; s < static_cast<int>(bubble.spheres.size()); ++s) {
    for (const auto& [d, v] : bubble.spheres[s].labels())
      labels[off + d] = v;
    off += bubble.spheres[s].dart_count();
  }
  PlanarMap bmap;
  try {
    bmap = PlanarMap::build(std::move(sigma_b), std::move(alpha_b), circuit.darts.front(), std::move(labels));
  } catch (const Error& e) {
    throw Error(Errc::MalformedCircuit, std::string("cutting along the circuit fails: ") + e.what());
  }
  if (boundary_walk(bmap) != circuit.darts)
    throw Error(Errc::MalformedCircuit, "circuit does not cut out a single boundary");
  return Unglued{contour, std::move(bmap)};
}

std::vector<WickedVertex> detect_wicked(const BoundaryMap& bmap, const DyckPath& tree)
{
  const auto walk = boundary_walk(bmap);
  const auto ids = contour_class_ids(tree);
  std::map<std::pair<int, int>, std::vector<int>> groups; // (vertex, class) -> positions
  for (int pos = 0; pos < static_cast<int>(walk.size()) && pos < static_cast<int>(ids.size()); ++pos)
    groups[{bmap.vertex_of(walk[pos]), ids[pos]}].push_back(pos);
  std::vector<WickedVertex> out;
  for (auto& [key, positions] : groups)
    if (positions.size() >= 2)
      out.push_back({key.first, std::move(positions)});
  return out;
}

bool is_non_self_crossing(const BubbleMap& bubble, const Circuit& circuit)
{
  const auto sigma = bubble.sigma_table();
  const auto alpha = bubble.alpha_table();
  const auto point = point_of_darts(bubble);
  const int len = static_cast<int>(circuit.darts.size());
  // Position of each dart around its vertex, and the vertex (first dart).
  std::vector<int> pos(sigma.size(), -1), cycle(sigma.size(), -1);
  for (Dart d = 0; d < static_cast<int>(sigma.size()); ++d) {
    if (pos[d] >= 0)
      continue;
    int i = 0;
    Dart x = d;
    do {
      pos[x] = i++;
      cycle[x] = d;
      x = sigma[x];
    } while (x != d);
  }
  std::map<int, std::vector<std::pair<int, int>>> chords;
  for (int k = 0; k < len; ++k) {
    const Dart in = alpha[circuit.darts[k]];
    const Dart out = circuit.darts[(k + 1) % len];
    if (point[in] != point[out])
      return false;
    if (cycle[in] != cycle[out] || in == out)
      continue;
    chords[cycle[in]].push_back({pos[in], pos[out]});
  }
  for (const auto& [v, list] : chords) {
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        auto [a, b] = list[i];
        auto [c, d] = list[j];
        if (a == c || a == d || b == c || b == d)
          continue;
        if (a > b)
          std::swap(a, b);
        const bool c_in = a < c && c < b;
        const bool d_in = a < d && d < b;
        if (c_in != d_in)
          return false;
      }
  }
  return true;
}

bool pinch_graph_is_tree(const BubbleMap& bubble)
{
  // Nodes: spheres, then pinch points (identified by their first sheet).
  const int ns = static_cast<int>(bubble.spheres.size());
  std::map<std::pair<int, int>, int> point_id;
  std::set<std::pair<int, int>> edges; // (sphere, point)
  int sheets = 0;
  for (const auto& p : bubble.pinches) {
    auto [it, fresh] = point_id.try_emplace({p.sphere_a, p.vertex_a}, ns + static_cast<int>(point_id.size()));
    if (fresh) {
      edges.insert({p.sphere_a, it->second});
      ++sheets;
    }
    edges.insert({p.sphere_b, it->second});
    ++sheets;
  }
  if (static_cast<int>(edges.size()) != sheets)
    return false; // two sheets of a point on one sphere
  const int nodes = ns + static_cast<int>(point_id.size());
  if (sheets != nodes - 1)
    return false;
  UnionFind uf(nodes);
  for (const auto& [s, p] : edges)
    uf.unite(s, p);
  for (int v = 0; v < nodes; ++v)
    if (uf.find(v) != uf.find(0))
      return false;
  return true;
}

CanonicalCode bubble_key(const BubbleMap& bubble, const Circuit& circuit)
{
  CanonicalCode key;
  std::vector<std::vector<int>> orders;
  for (const auto& s : bubble.spheres) {
    auto& order = orders.emplace_back(s.dart_count());
    canonical_order(s.sigma_table(), s.alpha_table(), s.root(), order);
    const auto code = canonical_code(s);
    key.code.push_back(s.dart_count());
    key.code.insert(key.code.end(), code.code.begin(), code.code.end());
  }
  // Pinch points as sorted sets of (sphere, least canonical dart of the vertex).
  const auto point = point_of_darts(bubble);
  std::map<int, std::set<std::pair<int, int>>> sheets;
  for (int s = 0, off = 0; s < static_cast<int>(bubble.spheres.size()); ++s) {
    for (const auto& vertex : bubble.spheres[s].vertices()) {
      int least = orders[s][vertex.front()];
      for (Dart d : vertex)
        least = std::min(least, orders[s][d]);
      sheets[point[off + vertex.front()]].insert({s, least});
    }
    off += bubble.spheres[s].dart_count();
  }
  std::set<std::vector<int>> pinch_points;
  for (const auto& [p, set] : sheets)
    if (set.size() >= 2) {
      std::vector<int> flat;
      for (auto [s, d] : set) {
        flat.push_back(s);
        flat.push_back(d);
      }
      pinch_points.insert(flat);
    }
  key.code.push_back(-1);
  for (const auto& flat : pinch_points) {
    key.code.insert(key.code.end(), flat.begin(), flat.end());
    key.code.push_back(-2);
  }
  key.code.push_back(-1);
  for (Dart c : circuit.darts) {
    const auto [s, d] = bubble.locate(c);
    key.code.push_back(s);
    key.code.push_back(orders[s][d]);
  }
  return key;
}

std::string to_text(const BubbleGlued& bg)
{
  std::ostringstream out;
  out << "bubble spheres=" << bg.bubble.spheres.size() << '\n';
  for (const auto& s : bg.bubble.spheres)
    out << to_text(s) << '\n';
  out << "pinch=";
  for (std::size_t i = 0; i < bg.bubble.pinches.size(); ++i) {
    const auto& p = bg.bubble.pinches[i];
    out << (i ? "," : "") << p.sphere_a + 1 << '.' << p.vertex_a + 1 << '~' << p.sphere_b + 1 << '.'
        << p.vertex_b + 1;
  }
  out << "\ncircuit=" << detail::join_ints(bg.circuit.darts, 1) << '\n';
  return out.str();
}

namespace {

std::pair<int, int> parse_sheet(std::string_view text)
{
  const auto dot = text.find('.');
  if (dot == std::string_view::npos)
    throw Error(Errc::ParseError, "pinch sheet must be sphere.vertex");
  return {detail::parse_int_list(text.substr(0, dot)).at(0) - 1,
          detail::parse_int_list(text.substr(dot + 1)).at(0) - 1};
}

std::string_view after_prefix(std::string_view line, std::string_view prefix)
{
  if (line.substr(0, prefix.size()) != prefix)
    throw Error(Errc::ParseError, "expected " + std::string(prefix));
  return line.substr(prefix.size());
}

} // namespace

BubbleGlued parse_bubble(std::string_view text)
{
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);)
    if (!line.empty())
      lines.push_back(line);
  if (lines.empty())
    throw Error(Errc::ParseError, "empty bubble record");
  const int n = detail::parse_int_list(after_prefix(lines[0], "bubble spheres=")).at(0);
  if (n < 1 || static_cast<int>(lines.size()) != n + 3)
    throw Error(Errc::ParseError, "bubble record has the wrong number of lines");
  BubbleGlued bg;
  for (int i = 0; i < n; ++i)
    bg.bubble.spheres.push_back(parse_map(lines[1 + i]));
  std::string_view pinches = after_prefix(lines[n + 1], "pinch=");
  while (!pinches.empty()) {
    const auto comma = pinches.find(',');
    const auto item = pinches.substr(0, comma);
    const auto tilde = item.find('~');
    if (tilde == std::string_view::npos)
      throw Error(Errc::ParseError, "pinch must be a.v~b.v");
    const auto [sa, va] = parse_sheet(item.substr(0, tilde));
    const auto [sb, vb] = parse_sheet(item.substr(tilde + 1));
    bg.bubble.pinches.push_back({sa, va, sb, vb});
    pinches = comma == std::string_view::npos ? std::string_view{} : pinches.substr(comma + 1);
  }
  check_pinch_indices(bg.bubble);
  bg.circuit.darts = detail::parse_int_list(after_prefix(lines[n + 2], "circuit="));
  for (auto& d : bg.circuit.darts)
    --d;
  return bg;
}

} // namespace mapglue

#include "mapglue/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

namespace mapglue {

namespace {

struct Tables {
  std::vector<Dart> sigma, alpha;
};

Tables tables_of(const PlanarMap& map)
{
  return {{map.sigma_table().begin(), map.sigma_table().end()},
          {map.alpha_table().begin(), map.alpha_table().end()}};
}

// Face id of the corner between d and sigma(d).
std::vector<int> corner_faces(const PlanarMap& map)
{
  std::vector<int> out(map.dart_count());
  for (Dart d = 0; d < map.dart_count(); ++d)
    out[d] = map.face_of(map.sigma(d));
  return out;
}

void insert_after(std::vector<Dart>& sigma, Dart at, Dart x)
{
  sigma[x] = sigma[at];
  sigma[at] = x;
}

// All maps with one more edge, inserted in corners accepted by `allow`
// (indexed by corner face). The root dart is kept.
template <class Allow, class Emit>
void grow(const PlanarMap& map, Allow allow, Emit emit)
{
  const int n = map.dart_count();
  const auto cf = corner_faces(map);
  const Tables base = tables_of(map);
  const Dart x = n, y = n + 1;
  auto attempt = [&](Tables t) {
    t.alpha[x] = y;
    t.alpha[y] = x;
    if (euler_characteristic(t.sigma, t.alpha) == 2)
      emit(canonical_code(t.sigma, t.alpha, map.root()));
  };
  for (Dart d = 0; d < n; ++d) {
    if (!allow(cf[d]))
      continue;
    Tables t = base;
    t.sigma.resize(n + 2);
    t.alpha.resize(n + 2);
    insert_after(t.sigma, d, x);
    t.sigma[y] = y;
    attempt(t);
  }
  for (Dart d1 = 0; d1 < n; ++d1) {
    if (!allow(cf[d1]))
      continue;
    for (Dart d2 = d1; d2 < n; ++d2) {
      if (cf[d2] != cf[d1])
        continue;
      Tables t = base;
      t.sigma.resize(n + 2);
      t.alpha.resize(n + 2);
      insert_after(t.sigma, d1, x);
      insert_after(t.sigma, d2, y);
      attempt(t);
      if (d2 == d1) {
        Tables u = base;
        u.sigma.resize(n + 2);
        u.alpha.resize(n + 2);
        insert_after(u.sigma, d1, x);
        insert_after(u.sigma, x, y);
        attempt(u);
      }
    }
  }
}

unsigned worker_count(const EnumerationConfig& cfg, std::size_t jobs)
{
  unsigned w = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(w, std::max<std::size_t>(jobs / 64, 1)));
}

// One growth level, parents split across workers; the merged result is sorted.
template <class Step>
std::vector<CanonicalCode> grow_level(const std::vector<CanonicalCode>& parents, Step step,
                                      const EnumerationConfig& cfg)
{
  const unsigned w = worker_count(cfg, parents.size());
  std::vector<std::vector<CanonicalCode>> found(w);
  auto work = [&](unsigned id) {
    for (std::size_t i = id; i < parents.size(); i += w)
      step(from_code(parents[i]), [&](CanonicalCode c) { found[id].push_back(std::move(c)); });
    std::sort(found[id].begin(), found[id].end());
    found[id].erase(std::unique(found[id].begin(), found[id].end()), found[id].end());
  };
  if (w == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < w; ++id)
      pool.emplace_back(work, id);
    for (auto& t : pool)
      t.join();
  }
  std::vector<CanonicalCode> all;
  for (auto& f : found)
    all.insert(all.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::mutex cache_mutex;
std::map<std::string, Catalog>& cache()
{
  static std::map<std::string, Catalog> c;
  return c;
}

template <class Build>
Catalog cached(const CatalogFilter& filter, Build build)
{
  const auto key = catalog_file_name(filter);
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache().find(key); it != cache().end())
      return it->second;
  }
  Catalog c = build();
  std::lock_guard lock(cache_mutex);
  cache().emplace(key, c);
  return c;
}

void check_cap(int edges, const EnumerationConfig& cfg)
{
  if (edges > cfg.max_edges)
    throw Error(Errc::CapExceeded, "enumeration of " + std::to_string(edges)
                                       + " edges exceeds the cap of " + std::to_string(cfg.max_edges));
}

PlanarMap polygon(int p)
{
  std::vector<Dart> sigma(2 * p), alpha(2 * p);
  for (int i = 0; i < p; ++i) {
    alpha[i] = p + i;
    alpha[p + i] = i;
    sigma[(i + 1) % p] = p + i;
    sigma[p + i] = (i + 1) % p;
  }
  return PlanarMap::build(std::move(sigma), std::move(alpha), 0);
}

std::vector<CanonicalCode> simple_boundary_codes(int p, int interior, const EnumerationConfig& cfg)
{
  std::vector<CanonicalCode> level{canonical_code(polygon(p))};
  for (int k = 0; k < interior; ++k) {
    level = grow_level(
        level,
        [](const PlanarMap& map, auto emit) {
          const int root_face = map.face_of(map.root());
          grow(map, [&](int face) { return face != root_face; }, emit);
        },
        cfg);
  }
  return level;
}

} // namespace

Catalog enumerate_maps(int e, const EnumerationConfig& cfg)
{
  if (e < 1)
    throw Error(Errc::Infeasible, "maps are enumerated from one edge");
  check_cap(e, cfg);
  CatalogFilter filter;
  filter.edges = e;
  return cached(filter, [&] {
    std::vector<CanonicalCode> level{
        canonical_code(PlanarMap::build({0, 1}, {1, 0}, 0)),
        canonical_code(PlanarMap::build({1, 0}, {1, 0}, 0)),
    };
    std::sort(level.begin(), level.end());
    for (int k = 1; k < e; ++k)
      level = grow_level(
          level, [](const PlanarMap& map, auto emit) { grow(map, [](int) { return true; }, emit); }, cfg);
    return Catalog{filter, std::move(level)};
  });
}

Catalog enumerate_q_angulations(int q, int faces, const EnumerationConfig& cfg)
{
  if (q == 0)
    return enumerate_maps(faces, cfg);
  if (faces < 1 || (q * faces) % 2 != 0)
    throw Error(Errc::Infeasible, "q * faces must be even and positive");
  const int e = q * faces / 2;
  check_cap(e, cfg);
  CatalogFilter filter;
  filter.q = q;
  filter.faces = faces;
  filter.edges = e;
  return cached(filter, [&] {
    const auto all = enumerate_maps(e, cfg);
    Catalog out{filter, {}};
    for (const auto& code : all.entries)
      if (is_q_angulation(from_code(code), q, false))
        out.entries.push_back(code);
    return out;
  });
}

Catalog enumerate_boundary_maps(const CatalogFilter& filter, const EnumerationConfig& cfg)
{
  const int p = filter.perimeter;
  int e = filter.edges;
  if (e < 0) {
    if (filter.q <= 0 || filter.faces < 0 || p < 0)
      throw Error(Errc::Infeasible, "give the edge count, or q, faces and perimeter");
    if ((filter.q * filter.faces + p) % 2 != 0)
      throw Error(Errc::Infeasible, "q * faces + perimeter must be even");
    e = (filter.q * filter.faces + p) / 2;
  }
  if (e < 1)
    throw Error(Errc::Infeasible, "at least one edge is needed");
  // Simple boundaries grow from the polygon: only interior edges cost.
  check_cap(filter.simple && p >= 1 ? e - p : e, cfg);
  CatalogFilter key = filter;
  key.edges = e;
  return cached(key, [&] {
    auto keep = [&](const PlanarMap& map) {
      const int deg = static_cast<int>(boundary_walk(map).size());
      if (p >= 0 && deg != p)
        return false;
      if (filter.simple && !is_simple_curve_boundary(map))
        return false;
      if (filter.bridgeless && !is_bridgeless_boundary(map))
        return false;
      if (filter.q > 0 && !is_q_angulation(map, filter.q, true))
        return false;
      if (filter.faces >= 0 && map.face_count() - 1 != filter.faces)
        return false;
      return true;
    };
    Catalog out{key, {}};
    std::vector<CanonicalCode> candidates;
    if (filter.simple && p >= 1) {
      if (e >= p)
        candidates = simple_boundary_codes(p, e - p, cfg);
      else if (e == 1 && p == 2)
        candidates.push_back(canonical_code(PlanarMap::build({0, 1}, {1, 0}, 0)));
    } else {
      candidates = enumerate_maps(e, cfg).entries;
    }
    for (auto& code : candidates)
      if (keep(from_code(code)))
        out.entries.push_back(std::move(code));
    std::sort(out.entries.begin(), out.entries.end());
    return out;
  });
}

std::vector<std::vector<std::vector<int>>> forest_subsets(const PlanarMap& map, std::vector<int> sizes)
{
  std::sort(sizes.begin(), sizes.end());
  const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
  const int ne = map.edge_count();
  std::vector<std::vector<std::vector<int>>> out;
  if (ne > 30 || total > ne || sizes.empty() || sizes.front() < 1)
    return out;
  for (std::uint32_t mask = 0; mask < (1u << ne); ++mask) {
    if (std::popcount(mask) != total)
      continue;
    std::vector<int> parent(map.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v)
        v = parent[v] = parent[parent[v]];
      return v;
    };
    bool acyclic = true;
    for (int e = 0; e < ne && acyclic; ++e) {
      if (!(mask >> e & 1))
        continue;
      const Dart d = map.edge_dart(e);
      const int a = find(map.vertex_of(d)), b = find(map.head_vertex(d));
      if (a == b)
        acyclic = false;
      else
        parent[a] = b;
    }
    if (!acyclic)
      continue;
    std::map<int, std::vector<int>> comps;
    for (int e = 0; e < ne; ++e)
      if (mask >> e & 1)
        comps[find(map.vertex_of(map.edge_dart(e)))].push_back(e);
    std::vector<int> got;
    for (const auto& [r, edges] : comps)
      got.push_back(static_cast<int>(edges.size()));
    std::sort(got.begin(), got.end());
    if (got != sizes)
      continue;
    auto& forest = out.emplace_back();
    for (auto& [r, edges] : comps)
      forest.push_back(std::move(edges));
  }
  return out;
}

std::vector<std::vector<int>> tree_subsets(const PlanarMap& map, int m)
{
  std::vector<std::vector<int>> out;
  if (m == 0) {
    out.assign(map.vertex_count(), {});
    return out;
  }
  for (auto& forest : forest_subsets(map, {m}))
    out.push_back(std::move(forest.front()));
  return out;
}

namespace {

Catalog decorated_family(int q, int f, const EnumerationConfig& cfg)
{
  return q == 0 ? enumerate_maps(f, cfg) : enumerate_q_angulations(q, f, cfg);
}

bool holds_edge(const std::vector<int>& tree, int e)
{
  return std::find(tree.begin(), tree.end(), e) != tree.end();
}

} // namespace

BigInt brute_count_decorated(int q, int f, int m, RootMode mode, const EnumerationConfig& cfg)
{
  if (m < 1)
    throw Error(Errc::Infeasible, "trees have at least one edge");
  const auto cat = decorated_family(q, f, cfg);
  BigInt total = 0;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto map = cat.map(i);
    for (const auto& t : tree_subsets(map, m))
      if (mode == RootMode::Anywhere || holds_edge(t, map.edge_of(map.root())))
        total += 1;
  }
  return total;
}

BigInt brute_count_spanning(int q, int f, RootMode mode, const EnumerationConfig& cfg)
{
  const auto cat = decorated_family(q, f, cfg);
  BigInt total = 0;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto map = cat.map(i);
    for (const auto& t : tree_subsets(map, map.vertex_count() - 1))
      if (mode == RootMode::Anywhere || holds_edge(t, map.edge_of(map.root())))
        total += 1;
  }
  return total;
}

BigInt brute_count_forest(int q, int f, const std::vector<int>& sizes, bool labeled,
                          const EnumerationConfig& cfg)
{
  if (sizes.empty() || *std::min_element(sizes.begin(), sizes.end()) < 1)
    throw Error(Errc::Infeasible, "forests have r >= 1 trees of at least one edge");
  const auto cat = decorated_family(q, f, cfg);
  BigInt per_forest = 1; // labelings of trees 2..r and their root darts
  if (labeled) {
    std::map<int, int> mult;
    for (std::size_t i = 1; i < sizes.size(); ++i) {
      per_forest *= 2 * sizes[i];
      per_forest *= ++mult[sizes[i]];
    }
  }
  BigInt total = 0;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto map = cat.map(i);
    const int root_edge = map.edge_of(map.root());
    for (const auto& forest : forest_subsets(map, sizes)) {
      if (!labeled) {
        total += 1;
        continue;
      }
      for (const auto& t : forest)
        if (holds_edge(t, root_edge) && static_cast<int>(t.size()) == sizes.front())
          total += per_forest;
    }
  }
  return total;
}

BigInt brute_count_boundary_decorated(int q, int f, int m1, int m2, const EnumerationConfig& cfg)
{
  if (m1 < 1 || m2 < 1)
    throw Error(Errc::Infeasible, "boundary and tree need at least one edge each");
  CatalogFilter filter;
  filter.q = q;
  filter.faces = f;
  filter.perimeter = 2 * m1;
  filter.simple = true;
  filter.bridgeless = true;
  const auto cat = enumerate_boundary_maps(filter, cfg);
  BigInt total = 0;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto map = cat.map(i);
    std::vector<char> on_boundary(map.vertex_count(), 0);
    for (Dart b : boundary_walk(map))
      on_boundary[map.vertex_of(b)] = 1;
    const int root_vertex = map.vertex_of(map.root());
    for (const auto& t : tree_subsets(map, m2)) {
      bool touches_root = false, touches_other = false;
      for (int e : t)
        for (int v : {map.vertex_of(map.edge_dart(e)), map.head_vertex(map.edge_dart(e))}) {
          if (v == root_vertex)
            touches_root = true;
          else if (on_boundary[v])
            touches_other = true;
        }
      if (touches_root && !touches_other)
        total += 1;
    }
  }
  return total;
}

BigInt brute_count_mullin(int e, const EnumerationConfig& cfg)
{
  if (e == 0)
    return 1;
  return brute_count_spanning(0, e, RootMode::Anywhere, cfg);
}

std::string catalog_file_name(const CatalogFilter& f)
{
  auto num = [](int v) { return v < 0 ? std::string("any") : std::to_string(v); };
  return "catalog_q" + num(f.q) + "_f" + num(f.faces) + "_e" + num(f.edges) + "_p" + num(f.perimeter)
         + "_s" + std::to_string(f.simple) + "_b" + std::to_string(f.bridgeless) + ".txt";
}

namespace {

std::uint32_t byte_sum(const std::string& s, std::uint32_t acc)
{
  for (unsigned char c : s)
    acc += c;
  return acc;
}

std::string hex32(std::uint32_t v)
{
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", v);
  return buf;
}

} // namespace

void write_catalog(const std::filesystem::path& path, const Catalog& catalog)
{
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(Errc::CatalogMissing, "cannot write " + path.string());
  const auto& f = catalog.filter;
  out << "catalog q=" << f.q << " f=" << f.faces << " e=" << f.edges << " perim=" << f.perimeter
      << " simple=" << f.simple << " bridgeless=" << f.bridgeless << " count=" << catalog.size() << '\n';
  std::uint32_t sum = 0;
  for (const auto& code : catalog.entries) {
    const std::string line = to_text(from_code(code)) + '\n';
    sum = byte_sum(line, sum);
    out << line;
  }
  out << "checksum=" << hex32(sum) << '\n';
}

Catalog read_catalog(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(Errc::CatalogMissing, "no catalog at " + path.string());
  std::string line;
  if (!std::getline(in, line))
    throw Error(Errc::ParseError, "empty catalog file");
  const auto rec = detail::parse_record(line, "catalog");
  auto field = [&](const char* name) {
    auto it = rec.find(name);
    if (it == rec.end())
      throw Error(Errc::ParseError, std::string("catalog header lacks ") + name);
    return std::stol(it->second);
  };
  Catalog cat;
  cat.filter.q = static_cast<int>(field("q"));
  cat.filter.faces = static_cast<int>(field("f"));
  cat.filter.edges = static_cast<int>(field("e"));
  cat.filter.perimeter = static_cast<int>(field("perim"));
  cat.filter.simple = field("simple") != 0;
  cat.filter.bridgeless = field("bridgeless") != 0;
  const long count = field("count");
  std::uint32_t sum = 0;
  for (long i = 0; i < count; ++i) {
    if (!std::getline(in, line))
      throw Error(Errc::ParseError, "catalog ends early");
    sum = byte_sum(line + '\n', sum);
    cat.entries.push_back(canonical_code(parse_map(line)));
  }
  if (!std::getline(in, line) || line != "checksum=" + hex32(sum))
    throw Error(Errc::ParseError, "catalog checksum mismatch");
  if (!std::is_sorted(cat.entries.begin(), cat.entries.end())
      || std::adjacent_find(cat.entries.begin(), cat.entries.end()) != cat.entries.end())
    throw Error(Errc::ParseError, "catalog entries are not sorted and distinct");
  return cat;
}

std::filesystem::path default_catalog_dir()
{
  if (const char* dir = std::getenv("MAPGLUE_CATALOG_DIR"); dir && *dir)
    return dir;
  return std::filesystem::current_path() / "catalogs";
}

} // namespace mapglue

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>

#include "helpers.hpp"
#include "mapglue/counting.hpp"
#include "mapglue/enumeration.hpp"

using namespace mapglue;
using namespace testing_helpers;

namespace {

Errc code_of(auto&& f)
{
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InternalMismatch;
}

long binom(long n, long k)
{
  long r = 1;
  for (long i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

long rooted_maps(long e) { return 2 * binom(2 * e, e) * static_cast<long>(std::pow(3, e)) / ((e + 1) * (e + 2)); }

long double_fact(long n) { return n <= 1 ? 1 : n * double_fact(n - 2); }
long fact(long n) { return n <= 1 ? 1 : n * fact(n - 1); }

// Rooted triangulations with 2n faces, loops and multiple edges allowed.
long rooted_triangulations(long n) { return (1L << (2 * n + 1)) * double_fact(3 * n) / (fact(n + 2) * double_fact(n)); }

// Edge subsets forming trees, by a separate union-find pass.
long brute_trees(const PlanarMap& m, int size)
{
  long count = 0;
  for (unsigned mask = 0; mask < (1u << m.edge_count()); ++mask) {
    if (std::popcount(mask) != size)
      continue;
    std::vector<int> parent(m.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x)
        x = parent[x];
      return x;
    };
    bool ok = true;
    for (int e = 0; e < m.edge_count() && ok; ++e)
      if (mask >> e & 1) {
        const Dart d = m.edge_dart(e);
        const int a = find(m.vertex_of(d)), b = find(m.head_vertex(d));
        ok = a != b;
        parent[a] = b;
      }
    std::set<int> touched;
    for (int e = 0; e < m.edge_count(); ++e)
      if (mask >> e & 1) {
        touched.insert(m.vertex_of(m.edge_dart(e)));
        touched.insert(m.head_vertex(m.edge_dart(e)));
      }
    count += ok && static_cast<int>(touched.size()) == size + 1;
  }
  return size == 0 ? m.vertex_count() : count;
}

} // namespace

TEST_CASE("rooted maps by edges")
{
  EnumerationConfig cfg;
  for (int e = 1; e <= 5; ++e)
    CHECK(static_cast<long>(enumerate_maps(e, cfg).size()) == rooted_maps(e));
  CHECK(code_of([&] { enumerate_maps(6, cfg); }) == Errc::CapExceeded);
}

TEST_CASE("rooted q-angulations")
{
  EnumerationConfig cfg;
  cfg.max_edges = 6;
  for (int f = 1; f <= 3; ++f)
    CHECK(static_cast<long>(enumerate_q_angulations(4, f, cfg).size()) == rooted_maps(f));
  for (int n = 1; n <= 2; ++n)
    CHECK(static_cast<long>(enumerate_q_angulations(3, 2 * n, cfg).size()) == rooted_triangulations(n));
}

TEST_CASE("simple-boundary catalogs")
{
  EnumerationConfig cfg;
  auto size = [&](int q, int f, int p) {
    CatalogFilter filter;
    filter.q = q;
    filter.faces = f;
    filter.perimeter = p;
    filter.simple = true;
    return enumerate_boundary_maps(filter, cfg).size();
  };
  CHECK(size(3, 2, 2) == 3);
  CHECK(size(4, 1, 2) == 2);
  CHECK(size(3, 2, 4) == 2);
  CatalogFilter filter;
  filter.q = 3;
  filter.faces = 2;
  filter.perimeter = 2;
  filter.simple = true;
  const auto cat = enumerate_boundary_maps(filter, cfg);
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto b = cat.map(i);
    CHECK(is_simple_boundary(b));
    CHECK(boundary_walk(b).size() == 2);
    CHECK(is_q_angulation(b, 3, true));
  }
}

TEST_CASE("decorated counts by direct search")
{
  EnumerationConfig cfg;
  CHECK(brute_count_decorated(4, 1, 1, RootMode::Anywhere, cfg) == 4);
  CHECK(brute_count_decorated(3, 2, 1, RootMode::Anywhere, cfg) == 9);
  CHECK(brute_count_decorated(3, 2, 1, RootMode::OnTree, cfg) == 3);
  CHECK(brute_count_decorated(4, 1, 2, RootMode::OnTree, cfg) == 2);
}

TEST_CASE("glued counting identities on small families")
{
  EnumerationConfig cfg;
  cfg.max_edges = 6;
  for (auto [q, f] : {std::pair{3, 2}, std::pair{4, 1}, std::pair{4, 2}})
    for (int m = 1; m <= q_vertices(q, f) - 1; ++m) {
      CatalogFilter filter;
      filter.q = q;
      filter.faces = f;
      filter.perimeter = 2 * m;
      filter.simple = true;
      const auto msb = enumerate_boundary_maps(filter, cfg).size();
      CHECK(brute_count_decorated(q, f, m, RootMode::OnTree, cfg) == catalan(m) * static_cast<unsigned long>(msb));
    }
  // General maps by edges, with s_{e,p} read from the enumeration.
  for (int e = 1; e <= 4; ++e)
    for (int m = 1; m <= e; ++m) {
      CatalogFilter filter;
      filter.edges = e + m;
      filter.perimeter = 2 * m;
      filter.simple = true;
      const auto s = enumerate_boundary_maps(filter, cfg).size();
      CHECK(brute_count_decorated(0, e, m, RootMode::OnTree, cfg) == catalan(m) * static_cast<unsigned long>(s));
    }
}

TEST_CASE("tree and forest subsets")
{
  EnumerationConfig cfg;
  for (int e = 1; e <= 4; ++e) {
    const auto cat = enumerate_maps(e, cfg);
    for (std::size_t i = 0; i < cat.size(); ++i) {
      const auto m = cat.map(i);
      for (int k = 0; k <= e; ++k) {
        const auto trees = tree_subsets(m, k);
        CHECK(static_cast<long>(trees.size()) == brute_trees(m, k));
        for (const auto& t : trees)
          CHECK(is_tree_edge_set(m, t));
      }
    }
  }
  // Two single-edge trees on the 4-cycle: the two pairs of opposite edges.
  const auto c4 = mk({8, 3, 2, 5, 4, 7, 6, 1}, {2, 1, 4, 3, 6, 5, 8, 7});
  CHECK(forest_subsets(c4, {1, 1}).size() == 2);
  CHECK(forest_subsets(c4, {1, 2}).empty());
  CHECK(forest_subsets(c4, {1}).size() == 4);
}

TEST_CASE("parallel enumeration is deterministic")
{
  EnumerationConfig one, many;
  one.threads = 1;
  many.threads = 4;
  CatalogFilter filter;
  filter.edges = 5;
  filter.bridgeless = true;
  const auto a = enumerate_boundary_maps(filter, one);
  const auto b = enumerate_boundary_maps(filter, many);
  CHECK(a.entries == b.entries);
  CHECK(std::is_sorted(a.entries.begin(), a.entries.end()));
  CHECK(std::adjacent_find(a.entries.begin(), a.entries.end()) == a.entries.end());
}

TEST_CASE("catalog files")
{
  EnumerationConfig cfg;
  CatalogFilter filter;
  filter.q = 4;
  filter.faces = 2;
  filter.perimeter = 4;
  filter.simple = true;
  const auto cat = enumerate_boundary_maps(filter, cfg);
  const auto dir = std::filesystem::temp_directory_path() / "mapglue_catalog_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / catalog_file_name(filter);
  write_catalog(path, cat);
  const auto back = read_catalog(path);
  CHECK(back.entries == cat.entries);
  CHECK(back.filter == cat.filter);

  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("catalog q=4 f=2 ", 0) == 0);
  CHECK(header.find(" count=" + std::to_string(cat.size())) != std::string::npos);
  in.close();

  std::string text;
  {
    std::ifstream all(path);
    text.assign(std::istreambuf_iterator<char>(all), {});
  }
  const auto pos = text.find('\n') + 1;
  text[pos + 2] = text[pos + 2] == '1' ? '2' : '1';
  const auto bad = dir / "tampered.txt";
  std::ofstream(bad) << text;
  CHECK(code_of([&] { read_catalog(bad); }) == Errc::ParseError);
  CHECK(code_of([&] { read_catalog(dir / "absent.txt"); }) == Errc::CatalogMissing);
  std::filesystem::remove_all(dir);
}

#include <doctest.h>

#include <set>

#include "helpers.hpp"
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
  FAIL("no error thrown");
  return Errc::InternalMismatch;
}

std::vector<int> degrees(const std::vector<std::vector<Dart>>& cycles)
{
  std::vector<int> out;
  for (const auto& c : cycles)
    out.push_back(static_cast<int>(c.size()));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST_CASE("small maps build with the expected counts")
{
  const auto e = single_edge();
  CHECK(e.vertex_count() == 2);
  CHECK(e.edge_count() == 1);
  CHECK(e.face_count() == 1);
  const auto l = loop_map();
  CHECK(l.vertex_count() == 1);
  CHECK(l.face_count() == 2);
}

TEST_CASE("build rejects bad rotation systems")
{
  CHECK(code_of([] { mk({1, 2, 3, 4}, {1, 2, 4, 3}); }) == Errc::NotInvolution);
  CHECK(code_of([] { mk({1, 2, 3, 4}, {2, 1, 4, 3}); }) == Errc::Disconnected);
  // One vertex, two interleaved loops: V - E + F = 0.
  CHECK(code_of([] { mk({2, 3, 4, 1}, {3, 4, 1, 2}); }) == Errc::NonPlanar);
  CHECK(code_of([] { mk({1, 2}, {2, 1}, 3); }) == Errc::InvalidRoot);
}

TEST_CASE("faces")
{
  CHECK(degrees(faces(loop_map())) == std::vector<int>{1, 1});
  CHECK(degrees(faces(triangle())) == std::vector<int>{3, 3});
  CHECK(degrees(faces(single_edge())) == std::vector<int>{2});
}

TEST_CASE("boundary walks and boundary kinds")
{
  const auto d = digon_with_center();
  CHECK(boundary_walk(d) == std::vector<Dart>{0, 2});
  CHECK(is_simple_boundary(d));
  CHECK(is_bridgeless_boundary(d));

  const auto f8 = figure_eight();
  CHECK(boundary_walk(f8).size() == 2);
  CHECK_FALSE(is_simple_boundary(f8));
  CHECK(is_bridgeless_boundary(f8));

  const auto e = single_edge();
  CHECK(boundary_walk(e).size() == 2);
  CHECK_FALSE(is_bridgeless_boundary(e));
  CHECK_FALSE(is_simple_boundary(e));
  CHECK(is_simple_curve_boundary(e));
}

TEST_CASE("q-angulations")
{
  CHECK(is_q_angulation(triangle(), 3, false));
  CHECK(is_q_angulation(path2(), 4, false));
  CHECK_FALSE(is_q_angulation(loop_map(), 3, false));
  CHECK(is_q_angulation(digon_with_center(), 3, true));
}

TEST_CASE("canonical codes of rootings")
{
  const auto t = triangle();
  std::set<CanonicalCode> tri;
  for (Dart d = 0; d < t.dart_count(); ++d)
    tri.insert(canonical_code(t.rerooted(d)));
  CHECK(tri.size() == 1);
  CHECK(distinct_rootings(t) == 1);

  const auto l = loop_two_pendants();
  std::set<CanonicalCode> codes;
  for (Dart d = 0; d < l.dart_count(); ++d)
    codes.insert(canonical_code(l.rerooted(d)));
  CHECK(codes.size() == 3);
  CHECK(distinct_rootings(path2()) == 2);
}

TEST_CASE("canonical codes survive relabelling")
{
  for (const auto& m : {triangle(), digon_with_center(), loop_two_pendants(), figure_eight()})
    for (unsigned seed = 0; seed < 20; ++seed) {
      const auto r = relabel(m, random_perm(m.dart_count(), seed));
      CHECK(canonical_code(r) == canonical_code(m));
      CHECK(isomorphic(r, m));
      CHECK(canonical_form(r) == canonical_form(m));
    }
}

TEST_CASE("canonical codes separate exactly the isomorphism classes up to 4 edges")
{
  EnumerationConfig cfg;
  cfg.max_edges = 4;
  std::vector<PlanarMap> all;
  for (int e = 1; e <= 4; ++e) {
    const auto cat = enumerate_maps(e, cfg);
    for (std::size_t i = 0; i < cat.size(); ++i)
      all.push_back(cat.map(i));
  }
  REQUIRE(all.size() == 2 + 9 + 54 + 378);
  long clashes = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      clashes += isomorphic(all[i], all[j]);
  CHECK(clashes == 0);
  // Every rooting of every map lands on a catalog entry with the same code.
  std::map<CanonicalCode, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i)
    index.emplace(canonical_code(all[i]), i);
  long misses = 0;
  for (const auto& m : all)
    for (Dart d = 0; d < m.dart_count(); ++d) {
      const auto r = m.rerooted(d);
      const auto it = index.find(canonical_code(r));
      misses += it == index.end() || !isomorphic(all[it->second], r);
    }
  CHECK(misses == 0);
}

TEST_CASE("text records round trip")
{
  for (const auto& m : {triangle(), digon_with_center(), loop_two_pendants()}) {
    const auto c = canonical_form(m);
    CHECK(to_text(parse_map(to_text(c))) == to_text(c));
    CHECK(parse_map(to_text(m)) == m);
  }
  CHECK(to_text(single_edge()) == "map E=1 root=1 sigma=1,2 alpha=2,1");
  CHECK(code_of([] { parse_map("map E=1 root=1 sigma=1,x alpha=2,1"); }) == Errc::ParseError);
}

TEST_CASE("labels are carried along")
{
  const auto m = triangle().with_labels({{0, "a"}, {3, "b"}});
  CHECK(parse_map(to_text(m)).labels() == m.labels());
  CHECK(m.rerooted(2).labels().at(3) == "b");
}

TEST_CASE("mirror image")
{
  const auto m = loop_two_pendants();
  const auto r = m.mirrored();
  CHECK(r.vertex_count() == m.vertex_count());
  CHECK(r.face_count() == m.face_count());
  CHECK(r.mirrored() == m);
}

TEST_CASE("Euler relation on enumerated maps")
{
  EnumerationConfig cfg;
  const auto cat = enumerate_maps(4, cfg);
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto m = cat.map(i);
    CHECK(m.vertex_count() - m.edge_count() + m.face_count() == 2);
    const auto walk = boundary_walk(m);
    CHECK(std::set<Dart>(walk.begin(), walk.end()).size() == walk.size());
    if (is_simple_boundary(m))
      CHECK(is_bridgeless_boundary(m));
  }
}

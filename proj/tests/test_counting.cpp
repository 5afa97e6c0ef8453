#include <doctest.h>

#include <map>
#include <numeric>

#include "mapglue/counting.hpp"
#include "mapglue/enumeration.hpp"

using namespace mapglue;

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

EnumerationConfig cap6()
{
  EnumerationConfig cfg;
  cfg.max_edges = 6;
  return cfg;
}

const std::pair<int, int> grid[] = {{3, 2}, {3, 4}, {4, 1}, {4, 2}, {4, 3}};

} // namespace

TEST_CASE("small values")
{
  CHECK(count_tree_decorated(4, 1, 1, RootMode::Anywhere) == 4);
  CHECK(count_tree_decorated(3, 2, 1, RootMode::Anywhere) == 9);
  CHECK(count_tree_decorated(4, 1, 2, RootMode::OnTree) == 2);
  CHECK(count_spanning(4, 1, RootMode::Anywhere) == 2);
  CHECK(count_spanning(4, 2, RootMode::OnTree) == 15);
  CHECK(count_spanning(3, 2, RootMode::Anywhere) == 6);
  CHECK(count_spanning_tri_printed(2) == 3);
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(7) == 105);
  CHECK(double_factorial(8) == 384);
  CHECK(q_vertices(3, 4) == 4);
  CHECK(q_vertices(4, 3) == 5);
  CHECK(oriented_edges(4, 3) == 12);
}

TEST_CASE("tree-decorated counts match direct search")
{
  const auto cfg = cap6();
  for (auto [q, f] : grid)
    for (int m = 1; m <= q_vertices(q, f) - 1; ++m)
      for (auto mode : {RootMode::Anywhere, RootMode::OnTree}) {
        CAPTURE(q);
        CAPTURE(f);
        CAPTURE(m);
        CHECK(count_tree_decorated(q, f, m, mode) == brute_count_decorated(q, f, m, mode, cfg));
      }
  for (auto [q, f] : grid)
    for (auto mode : {RootMode::Anywhere, RootMode::OnTree})
      CHECK(count_spanning(q, f, mode) == brute_count_spanning(q, f, mode, cfg));
}

TEST_CASE("printed spanning triangulation count is off by a factor of two")
{
  CHECK(count_spanning_tri_printed(2) * 2 == ratio(count_spanning(3, 2, RootMode::Anywhere)));
  CHECK(count_spanning_tri_printed(4) * 2 == ratio(count_spanning(3, 4, RootMode::Anywhere)));
}

TEST_CASE("boundary-decorated counts match direct search")
{
  const auto cfg = cap6();
  for (auto [q, f] : grid)
    for (int m1 = 1; m1 <= q_vertices(q, f) - 2; ++m1)
      for (int m2 = 1; m1 + m2 <= q_vertices(q, f) - 1; ++m2) {
        CAPTURE(q);
        CAPTURE(f);
        CAPTURE(m1);
        CAPTURE(m2);
        CHECK(count_boundary_decorated(q, f, m1, m2) == brute_count_boundary_decorated(q, f, m1, m2, cfg));
        if (q == 4)
          CHECK(count_boundary_decorated_printed(q, f, m1, m2) == ratio(count_boundary_decorated(q, f, m1, m2)));
      }
  CHECK(count_boundary_decorated_printed(3, 2, 1, 1) == ratio(4, 3));
  CHECK(count_boundary_decorated(3, 2, 1, 1) == 2);
  CHECK(count_boundary_decorated(3, 4, 1, 1) == 35);
}

TEST_CASE("forest counts match direct search")
{
  const auto cfg = cap6();
  const std::vector<std::vector<int>> shapes = {{1}, {2}, {1, 1}, {1, 2}, {2, 1}, {1, 1, 1}};
  for (auto [q, f] : grid)
    for (const auto& sizes : shapes) {
      const long covered = std::accumulate(sizes.begin(), sizes.end(), 0L) + static_cast<long>(sizes.size());
      if (covered > q_vertices(q, f))
        continue;
      CAPTURE(q);
      CAPTURE(f);
      CAPTURE(sizes.size());
      const BigInt labeled = brute_count_forest(q, f, sizes, true, cfg);
      const BigInt unlabeled = brute_count_forest(q, f, sizes, false, cfg);
      CHECK(count_forest(q, f, sizes, true) == labeled);
      CHECK(count_forest(q, f, sizes, false) == unlabeled);
      CHECK(count_forest_from_labeled(q, f, sizes) == ratio(unlabeled));
      // Rerooting relation between the two oracles.
      BigInt rhs = unlabeled;
      std::map<int, long> mult;
      for (int m : sizes) {
        rhs *= 2 * m;
        rhs *= ++mult[m];
      }
      CHECK(labeled * oriented_edges(q, f) == rhs);
      const BigInt r_fact = factorial(static_cast<long>(sizes.size()));
      CHECK(count_forest_exact(q, f, sizes, false) == ratio(unlabeled * r_fact));
      if (covered == q_vertices(q, f))
        CHECK(count_spanning_forest(q, f, sizes) == unlabeled);
    }
  CHECK(count_spanning_forest(3, 4, {1, 1}) == 27);
  CHECK(count_spanning_forest_printed(3, 4, {1, 1}) == 432);
  CHECK(count_spanning_forest(4, 2, {1, 1}) == 6);
  CHECK(count_spanning_forest_printed(4, 2, {1, 1}) == 12);
}

TEST_CASE("rerooting relation")
{
  for (auto [q, f] : grid)
    for (int m = 1; m <= q_vertices(q, f) - 1; ++m)
      CHECK(reroot_check(q, f, {m}));
  CHECK(reroot_check(4, 1, {1}));
  CHECK(reroot_check(3, 2, {1}));
  CHECK(reroot_check(4, 3, {1, 1}));
  CHECK(reroot_check(3, 4, {1, 1}));
  // Unequal sizes break the printed relation.
  CHECK_FALSE(reroot_check(4, 3, {1, 2}));
}

TEST_CASE("mullin and bubble counts")
{
  const auto cfg = cap6();
  for (int e = 0; e <= 8; ++e)
    CHECK(mullin_count(e) == catalan(e) * catalan(e + 1));
  for (int e = 1; e <= 5; ++e)
    CHECK(mullin_count(e) == brute_count_mullin(e, cfg));
  CHECK(mullin_count(1) == 2);
  CHECK(mullin_count(2) == 10);
  CHECK(count_bubble(0, 1) == 2);
  for (int e = 0; e <= 10; ++e)
    for (int m = 1; m <= 6; ++m)
      CHECK(count_bubble(e, m) > 0);
}

TEST_CASE("generalized catalan numbers")
{
  for (int n = 0; n <= 15; ++n)
    CHECK(catalan_ext(1, n) == catalan(n));
  for (int m = 1; m <= 10; ++m)
    CHECK(catalan_ext(m, 1) == factorial(m));
  CHECK(catalan_ext(2, 2) == 15);
  for (int m = 1; m <= 6; ++m)
    for (int n = 0; n <= 40; ++n)
      CHECK(verify_integrality(m, n));
  for (int f = 1; f <= 4; ++f)
    CHECK(catalan_ext(2, f) == count_spanning(4, f, RootMode::OnTree));
  CHECK(legendre_valuation(2, 4) == 3);
  CHECK(legendre_valuation(2, 10) == 8);
  CHECK(legendre_valuation(5, 100) == 24);
  CHECK(legendre_valuation(7, 6) == 0);
}

TEST_CASE("infeasible arguments")
{
  CHECK(code_of([] { count_tree_decorated(3, 3, 1, RootMode::Anywhere); }) == Errc::Infeasible);
  CHECK(code_of([] { count_tree_decorated(5, 2, 1, RootMode::Anywhere); }) == Errc::Infeasible);
  CHECK(code_of([] { count_tree_decorated(4, 2, 4, RootMode::Anywhere); }) == Errc::Infeasible);
  CHECK(code_of([] { count_tree_decorated(4, 0, 1, RootMode::Anywhere); }) == Errc::Infeasible);
  CHECK(code_of([] { count_forest(4, 2, {}, true); }) == Errc::Infeasible);
  CHECK(code_of([] { count_spanning_forest(4, 2, {1}); }) == Errc::Infeasible);
  CHECK(code_of([] { catalan_ext(0, 2); }) == Errc::Infeasible);
  CHECK(code_of([] { count_bubble(1, 0); }) == Errc::Infeasible);
}

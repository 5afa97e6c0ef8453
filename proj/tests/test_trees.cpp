#include <doctest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "mapglue/enumeration.hpp"
#include "mapglue/trees.hpp"

using namespace mapglue;
using namespace testing_helpers;

namespace {

// All +1/-1 words of length 2m with non-negative prefix sums ending at 0.
std::vector<std::vector<int>> brute_dyck(int m)
{
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << (2 * m)); ++mask) {
    std::vector<int> w;
    int h = 0;
    bool ok = true;
    for (int i = 0; i < 2 * m && ok; ++i) {
      w.push_back(mask >> i & 1 ? 1 : -1);
      h += w.back();
      ok = h >= 0;
    }
    if (ok && h == 0)
      out.push_back(w);
  }
  return out;
}

Errc code_of(auto&& f)
{
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InternalMismatch;
}

} // namespace

TEST_CASE("contours of small trees")
{
  CHECK(tree_to_contour(single_edge()).word() == "UD");
  CHECK(tree_to_contour(path2()).word() == "UUDD");
  CHECK(tree_to_contour(mk({3, 2, 1, 4}, {2, 1, 4, 3})).word() == "UDUD");
  CHECK(code_of([] { tree_to_contour(loop_map()); }) == Errc::DecorationNotATree);
}

TEST_CASE("Dyck words")
{
  CHECK(DyckPath::parse("UUDD").heights() == std::vector<int>{0, 1, 2, 1, 0});
  CHECK(DyckPath::parse("UUDD").matching() == std::vector<int>{3, 2, 1, 0});
  CHECK(code_of([] { DyckPath::parse("DU"); }) == Errc::NotDyck);
  CHECK(code_of([] { DyckPath::parse("UUD"); }) == Errc::NotDyck);
  CHECK(code_of([] { DyckPath::parse("UX"); }) == Errc::ParseError);
}

TEST_CASE("contour classes")
{
  using P = std::vector<std::vector<int>>;
  CHECK(contour_classes(DyckPath::parse("UD")) == P{{0, 2}, {1}});
  CHECK(contour_classes(DyckPath::parse("UUDD")) == P{{0, 4}, {1, 3}, {2}});
  CHECK(contour_classes(DyckPath::parse("UDUD")) == P{{0, 2, 4}, {1}, {3}});
  for (int m = 1; m <= 6; ++m)
    for (const auto& p : enumerate_trees(m)) {
      const auto ids = contour_class_ids(p);
      CHECK(contour_classes(p).size() == static_cast<std::size_t>(m + 1));
      for (int i = 0; i < 2 * m; ++i)
        CHECK(ids[i] != ids[i + 1]);
    }
}

TEST_CASE("catalan numbers and tree enumeration")
{
  CHECK(catalan(0) == 1);
  CHECK(catalan(1) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(5) == 42);
  for (int m = 0; m <= 8; ++m) {
    const auto trees = enumerate_trees(m);
    std::set<std::vector<int>> got;
    for (const auto& t : trees)
      got.insert(t.steps());
    const auto want = brute_dyck(m);
    CHECK(got == std::set<std::vector<int>>(want.begin(), want.end()));
    CHECK(trees.size() == want.size());
    CHECK(catalan(m) == static_cast<unsigned long>(want.size()));
  }
}

TEST_CASE("contour_to_tree inverts tree_to_contour")
{
  for (int m = 1; m <= 8; ++m)
    for (const auto& p : enumerate_trees(m)) {
      const auto t = contour_to_tree(p);
      CHECK(t.face_count() == 1);
      CHECK(t.vertex_count() == m + 1);
      CHECK(tree_to_contour(t) == p);
    }
  std::set<CanonicalCode> three;
  for (const auto& p : enumerate_trees(3))
    three.insert(canonical_code(contour_to_tree(p)));
  CHECK(three.size() == 5);
}

TEST_CASE("one-face maps are exactly the plane trees")
{
  EnumerationConfig cfg;
  for (int m = 1; m <= 5; ++m) {
    const auto cat = enumerate_maps(m, cfg);
    std::set<DyckPath> contours;
    for (std::size_t i = 0; i < cat.size(); ++i) {
      const auto map = cat.map(i);
      if (map.face_count() != 1)
        continue;
      const auto p = tree_to_contour(map);
      CHECK(contours.insert(p).second);
      CHECK(isomorphic(contour_to_tree(p), map));
    }
    CHECK(catalan(m) == static_cast<unsigned long>(contours.size()));
  }
}

TEST_CASE("uniform tree sampling")
{
  for (std::uint64_t s = 0; s < 50; ++s)
    CHECK(sample_tree_uniform(1, s).word() == "UD");
  CHECK(sample_tree_uniform(7, 99) == sample_tree_uniform(7, 99));
  SplitMix64 a(3), b(3);
  CHECK(sample_tree_uniform(5, a) == sample_tree_uniform(5, b));

  // Pearson statistics against the 0.999 quantiles of chi-square with 1 and
  // 4 degrees of freedom.
  for (auto [m, critical] : {std::pair{2, 10.828}, std::pair{3, 18.467}}) {
    const long draws = 100000;
    std::map<DyckPath, long> freq;
    for (long i = 0; i < draws; ++i)
      ++freq[sample_tree_uniform(m, SplitMix64::stream(12345, i).next())];
    const auto cells = enumerate_trees(m);
    CHECK(freq.size() == cells.size());
    const double expected = static_cast<double>(draws) / cells.size();
    double stat = 0;
    for (const auto& t : cells)
      stat += (freq[t] - expected) * (freq[t] - expected) / expected;
    CHECK(stat < critical);
  }
}

TEST_CASE("subtree windows")
{
  CHECK(subtree_window(DyckPath::parse("UUDD"), 2, 1) == std::pair{1, 3});
  CHECK(subtree_window(DyckPath::parse("UUDUDD"), 2, 1) == std::pair{1, 5});
  CHECK(code_of([] { subtree_window(DyckPath::parse("UUDD"), 2, 3); }) == Errc::LevelOutOfRange);
  CHECK(code_of([] { subtree_window(DyckPath::parse("UUDD"), 0, 1); }) == Errc::LevelOutOfRange);

  // Exhaustive scan: the window is the largest interval around x on which
  // C stays >= l, its ends sit at level l and C - l is a Dyck path there.
  for (int m = 1; m <= 6; ++m)
    for (const auto& p : enumerate_trees(m)) {
      const auto c = p.heights();
      for (int x = 0; x < 2 * m; ++x)
        for (int l = 1; l <= c[x]; ++l) {
          int lo = x, hi = x;
          while (lo > 0 && c[lo - 1] >= l)
            --lo;
          while (hi < 2 * m && c[hi + 1] >= l)
            ++hi;
          const auto w = subtree_window(p, x, l);
          CHECK(w == std::pair{lo, hi});
          CHECK(c[w.first] == l);
          CHECK(c[w.second] == l);
        }
    }
}

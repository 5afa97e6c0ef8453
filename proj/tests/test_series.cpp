#include <doctest.h>

#include "mapglue/enumeration.hpp"
#include "mapglue/series.hpp"

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

using S2 = TruncatedSeries2;

S2 sample(int nx, int ny, int seed)
{
  S2 s(nx, ny);
  for (int i = 0; i <= nx; ++i)
    for (int j = 0; j <= ny; ++j)
      s.at(i, j) = ratio((i * 7 + j * 3 + seed) % 5 - 2, 1 + (i + j) % 3);
  s.at(0, 0) = 1;
  return s;
}

} // namespace

TEST_CASE("series arithmetic")
{
  const auto a = sample(4, 3, 1), b = sample(4, 3, 2), c = sample(4, 3, 4);
  CHECK(a * b == b * a);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a * a.inverse() == S2::constant(4, 3, 1));
  const auto r = (a * a).sqrt();
  CHECK(r * r == a * a);
  CHECK(r == a);
  const auto X = S2::x(4, 3), Y = S2::y(4, 3);
  CHECK((X * X * X * X * X)(4, 0) == 0);
  CHECK((X * Y)(1, 1) == 1);
  CHECK(a.truncated(2, 2)(2, 2) == a(2, 2));
  CHECK(code_of([&] { a.truncated(5, 3); }) == Errc::SizeMismatch);
  CHECK(code_of([&] { (a * 2 - a * 2).inverse(); }) == Errc::Infeasible);
  CHECK(code_of([&] { (a * 2).sqrt(); }) == Errc::Infeasible);
  CHECK(code_of([&] { a + sample(3, 3, 1); }) == Errc::SizeMismatch);
  CHECK(code_of([&] { a.compose_y(a); }) == Errc::InternalMismatch);
}

TEST_CASE("substitution")
{
  // f(x, y) = 1 + y + x y^2, g = y (1 + x): f(x, g) = 1 + y + x y + x y^2 + 2x^2 y^2 + x^3 y^2
  S2 f(3, 3), g(3, 3);
  f.at(0, 0) = 1;
  f.at(0, 1) = 1;
  f.at(1, 2) = 1;
  g.at(0, 1) = 1;
  g.at(1, 1) = 1;
  const auto h = f.compose_y(g);
  S2 want(3, 3);
  want.at(0, 0) = 1;
  want.at(0, 1) = 1;
  want.at(1, 1) = 1;
  want.at(1, 2) = 1;
  want.at(2, 2) = 2;
  want.at(3, 2) = 1;
  CHECK(h == want);
}

TEST_CASE("general maps at y = 1")
{
  const auto b1 = series_B1(10);
  const long want[] = {1, 2, 9, 54, 378, 2916, 24057};
  for (int e = 0; e <= 6; ++e)
    CHECK(b1[e] == want[e]);
  const auto rad = series_B1_radical(10);
  for (int e = 0; e <= 10; ++e)
    CHECK(rad[e] == ratio(b1[e]));
  const auto B = series_B(8, 18);
  const auto ones = B.at_y_one();
  for (int e = 0; e <= 8; ++e)
    CHECK(ones[e] == ratio(b1[e]));
  CHECK(B.nonnegative_integral());
}

TEST_CASE("simple-boundary series")
{
  const auto S = series_S(8, 8);
  CHECK(S == series_S_radical(8, 8));
  CHECK(S == series_S_inversion(8, 8));
  const int printed[][3] = {{1, 1, 1}, {2, 1, 2}, {1, 2, 1}, {3, 1, 9}, {2, 2, 1},
                            {4, 1, 54}, {3, 2, 5}, {5, 1, 378}, {3, 3, 1}};
  for (auto [i, j, c] : printed)
    CHECK(S(i, j) == c);
  CHECK(S(4, 2) == 32);
  CHECK(S(0, 0) == 1);
  const auto B = series_B(8, 8);
  CHECK(S.compose_y(S2::y(8, 8) * B) == B);
  CHECK(S.nonnegative_integral());
}

TEST_CASE("coefficients count maps")
{
  EnumerationConfig cfg;
  const auto S = series_S(5, 10);
  const auto B = series_B(5, 10);
  for (int e = 1; e <= 4; ++e)
    for (int p = 1; p <= 2 * e; ++p) {
      CatalogFilter filter;
      filter.edges = e;
      filter.perimeter = p;
      CHECK(B(e, p) == static_cast<unsigned long>(enumerate_boundary_maps(filter, cfg).size()));
      filter.simple = true;
      CHECK(S(e, p) == static_cast<unsigned long>(enumerate_boundary_maps(filter, cfg).size()));
    }
}

TEST_CASE("series text")
{
  S2 s(2, 2);
  s.at(0, 0) = 1;
  s.at(2, 0) = Rational(1, 2);
  s.at(1, 1) = -3;
  s.at(0, 2) = 4;
  CHECK(format_series(s, 'z') == "x^0 z^0 : 1\nx^2 z^0 : 1/2\nx^1 z^1 : -3\nx^0 z^2 : 4\n");
  CHECK(format_series(S2(1, 1)).empty());
}

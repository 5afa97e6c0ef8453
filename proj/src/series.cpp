#include "mapglue/series.hpp"

#include <algorithm>
#include <sstream>

namespace mapglue {

TruncatedSeries2::TruncatedSeries2(int nx, int ny)
    : nx_(nx), ny_(ny), c_(static_cast<std::size_t>(nx + 1) * (ny + 1), Rational(0))
{
  if (nx < 0 || ny < 0)
    throw Error(Errc::Infeasible, "truncation orders must be non-negative");
}

TruncatedSeries2 TruncatedSeries2::constant(int nx, int ny, const Rational& c)
{
  TruncatedSeries2 s(nx, ny);
  s.at(0, 0) = c;
  return s;
}

TruncatedSeries2 TruncatedSeries2::x(int nx, int ny)
{
  TruncatedSeries2 s(nx, ny);
  if (nx >= 1)
    s.at(1, 0) = 1;
  return s;
}

TruncatedSeries2 TruncatedSeries2::y(int nx, int ny)
{
  TruncatedSeries2 s(nx, ny);
  if (ny >= 1)
    s.at(0, 1) = 1;
  return s;
}

namespace {

void same_orders(const TruncatedSeries2& a, const TruncatedSeries2& b)
{
  if (a.max_x() != b.max_x() || a.max_y() != b.max_y())
    throw Error(Errc::SizeMismatch, "series orders differ");
}

} // namespace

TruncatedSeries2& TruncatedSeries2::operator+=(const TruncatedSeries2& o)
{
  same_orders(*this, o);
  for (std::size_t k = 0; k < c_.size(); ++k)
    c_[k] += o.c_[k];
  return *this;
}

TruncatedSeries2& TruncatedSeries2::operator-=(const TruncatedSeries2& o)
{
  same_orders(*this, o);
  for (std::size_t k = 0; k < c_.size(); ++k)
    c_[k] -= o.c_[k];
  return *this;
}

TruncatedSeries2& TruncatedSeries2::operator*=(const Rational& k)
{
  for (auto& c : c_)
    c *= k;
  return *this;
}

TruncatedSeries2 operator*(const TruncatedSeries2& a, const TruncatedSeries2& b)
{
  same_orders(a, b);
  const int nx = a.max_x(), ny = a.max_y();
  TruncatedSeries2 out(nx, ny);
  for (int i = 0; i <= nx; ++i)
    for (int j = 0; j <= ny; ++j) {
      const Rational& ca = a(i, j);
      if (ca == 0)
        continue;
      for (int k = 0; i + k <= nx; ++k)
        for (int l = 0; j + l <= ny; ++l)
          if (b(k, l) != 0)
            out.at(i + k, j + l) += ca * b(k, l);
    }
  return out;
}

TruncatedSeries2 TruncatedSeries2::inverse() const
{
  const Rational c0 = (*this)(0, 0);
  if (c0 == 0)
    throw Error(Errc::Infeasible, "series without constant term has no inverse");
  TruncatedSeries2 out(nx_, ny_);
  for (int i = 0; i <= nx_; ++i)
    for (int j = 0; j <= ny_; ++j) {
      Rational acc = (i == 0 && j == 0) ? Rational(1) : Rational(0);
      for (int k = 0; k <= i; ++k)
        for (int l = 0; l <= j; ++l)
          if ((k || l) && (*this)(k, l) != 0)
            acc -= (*this)(k, l) * out(i - k, j - l);
      out.at(i, j) = acc / c0;
    }
  return out;
}

TruncatedSeries2 TruncatedSeries2::sqrt() const
{
  if ((*this)(0, 0) != 1)
    throw Error(Errc::Infeasible, "square root needs constant term 1");
  // Newton: s <- (s + a/s) / 2, exact to total degree 2^k - 1 after k passes.
  TruncatedSeries2 s = constant(nx_, ny_, 1);
  const Rational half(1, 2);
  for (int exact = 1; exact <= nx_ + ny_; exact *= 2)
    s = (s + *this * s.inverse()) * half;
  if (s * s != *this)
    throw Error(Errc::InternalMismatch, "series square root did not converge");
  return s;
}

TruncatedSeries2 TruncatedSeries2::compose_y(const TruncatedSeries2& g) const
{
  for (int i = 0; i <= g.max_x(); ++i)
    if (g(i, 0) != 0)
      throw Error(Errc::InternalMismatch, "substituted series must be divisible by the variable");
  if (g.max_x() > nx_)
    throw Error(Errc::SizeMismatch, "substitution needs more x terms");
  const int top = std::min(ny_, g.max_y());
  TruncatedSeries2 out(g.max_x(), g.max_y());
  TruncatedSeries2 power = constant(g.max_x(), g.max_y(), 1);
  for (int p = 0; p <= top; ++p) {
    TruncatedSeries2 column(g.max_x(), g.max_y());
    for (int e = 0; e <= g.max_x(); ++e)
      column.at(e, 0) = (*this)(e, p);
    out += column * power;
    power = power * g;
  }
  return out;
}

std::vector<Rational> TruncatedSeries2::at_y_one() const
{
  std::vector<Rational> out(nx_ + 1, Rational(0));
  for (int i = 0; i <= nx_; ++i)
    for (int j = 0; j <= ny_; ++j)
      out[i] += (*this)(i, j);
  return out;
}

TruncatedSeries2 TruncatedSeries2::truncated(int nx, int ny) const
{
  if (nx > nx_ || ny > ny_)
    throw Error(Errc::SizeMismatch, "cannot extend a truncated series");
  TruncatedSeries2 out(nx, ny);
  for (int i = 0; i <= nx; ++i)
    for (int j = 0; j <= ny; ++j)
      out.at(i, j) = (*this)(i, j);
  return out;
}

bool TruncatedSeries2::nonnegative_integral() const
{
  return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return c >= 0 && c.get_den() == 1; });
}

std::vector<BigInt> series_B1(int n)
{
  std::vector<BigInt> out;
  for (long e = 0; e <= n; ++e)
    out.push_back(2 * pow_ui(3, e) * binomial(2 * e, e) / ((e + 1) * (e + 2)));
  return out;
}

namespace {

// (1 - 12x)^{3/2} up to x^n.
std::vector<Rational> three_halves_power(int n)
{
  std::vector<Rational> out(n + 1);
  Rational binom = 1; // binom(3/2, k)
  Rational power = 1; // (-12)^k
  for (int k = 0; k <= n; ++k) {
    out[k] = binom * power;
    binom *= (Rational(3, 2) - k) / (k + 1);
    power *= -12;
  }
  return out;
}

} // namespace

std::vector<Rational> series_B1_radical(int n)
{
  const auto p = three_halves_power(n + 2);
  std::vector<Rational> num(n + 3);
  for (int k = 0; k <= n + 2; ++k)
    num[k] = (k == 0 ? 1 : 0) - (k == 1 ? 18 : 0) - p[k];
  if (num[0] != 0 || num[1] != 0)
    throw Error(Errc::InternalMismatch, "radical for general maps is not divisible by x^2");
  std::vector<Rational> out(n + 1);
  for (int k = 0; k <= n; ++k)
    out[k] = -num[k + 2] / 54;
  return out;
}

TruncatedSeries2 series_B(int nx, int ny)
{
  const auto b1 = series_B1(nx);
  TruncatedSeries2 B1(nx, ny), geometric(nx, ny);
  for (int e = 0; e <= nx; ++e)
    B1.at(e, 0) = b1[e];
  for (int j = 0; j <= ny; ++j)
    geometric.at(0, j) = 1;
  const auto X = TruncatedSeries2::x(nx, ny), Y = TruncatedSeries2::y(nx, ny);
  const auto one = TruncatedSeries2::constant(nx, ny, 1);
  const auto xy = X * Y, xyy = X * Y * Y;
  TruncatedSeries2 B = one;
  for (int pass = 0; pass <= nx; ++pass)
    B = one + xyy * B * B + xy * (B1 - Y * B) * geometric;
  return B;
}

TruncatedSeries2 series_S_radical(int nx, int nz)
{
  const auto p = three_halves_power(nx + 1);
  // R(x) = (1 + 36x - (1-12x)^{3/2}) / (27x)
  TruncatedSeries2 R(nx, nz);
  for (int k = 0; k <= nx; ++k)
    R.at(k, 0) = ((k + 1 == 1 ? 36 : 0) - p[k + 1]) / 27;
  const auto X = TruncatedSeries2::x(nx, nz), Z = TruncatedSeries2::y(nx, nz);
  const auto one = TruncatedSeries2::constant(nx, nz, 1);
  const auto xzz = X * Z * Z;
  const auto base = one + Z - xzz;
  const auto D = base * base - Z * R * Rational(2);
  return (one + Z + xzz + D.sqrt()) * Rational(1, 2);
}

TruncatedSeries2 series_S_inversion(int nx, int nz)
{
  const auto B = series_B(nx, nz);
  const auto Z = TruncatedSeries2::y(nx, nz);
  TruncatedSeries2 Y = Z;
  for (int pass = 0; pass <= nz; ++pass)
    Y = Z * B.compose_y(Y).inverse();
  return B.compose_y(Y);
}

TruncatedSeries2 series_S(int nx, int nz)
{
  auto a = series_S_radical(nx, nz);
  const auto b = series_S_inversion(nx, nz);
  if (a != b)
    throw Error(Errc::InternalMismatch, "the two constructions of S disagree");
  return a;
}

std::string format_series(const TruncatedSeries2& s, char var)
{
  std::ostringstream out;
  for (int deg = 0; deg <= s.max_x() + s.max_y(); ++deg)
    for (int i = std::min(deg, s.max_x()); i >= 0 && deg - i <= s.max_y(); --i) {
      const Rational& c = s(i, deg - i);
      if (c != 0)
        out << "x^" << i << ' ' << var << '^' << (deg - i) << " : " << c.get_str() << '\n';
    }
  return out.str();
}

} // namespace mapglue

#ifndef MAPGLUE_SERIES_HPP
#define MAPGLUE_SERIES_HPP

#include <string>
#include <vector>

#include "mapglue/bigint.hpp"
#include "mapglue/error.hpp"

namespace mapglue {

// Bivariate power series truncated at x^nx and y^ny, exact rational
// coefficients. Binary operations need equal orders.
class TruncatedSeries2 {
public:
  TruncatedSeries2() : TruncatedSeries2(0, 0) {}
  TruncatedSeries2(int nx, int ny);

  static TruncatedSeries2 constant(int nx, int ny, const Rational& c);
  static TruncatedSeries2 x(int nx, int ny);
  static TruncatedSeries2 y(int nx, int ny);

  int max_x() const { return nx_; }
  int max_y() const { return ny_; }
  const Rational& operator()(int i, int j) const { return c_[index(i, j)]; }
  Rational& at(int i, int j) { return c_[index(i, j)]; }

  TruncatedSeries2& operator+=(const TruncatedSeries2& o);
  TruncatedSeries2& operator-=(const TruncatedSeries2& o);
  TruncatedSeries2& operator*=(const Rational& k);
  friend TruncatedSeries2 operator+(TruncatedSeries2 a, const TruncatedSeries2& b) { return a += b; }
  friend TruncatedSeries2 operator-(TruncatedSeries2 a, const TruncatedSeries2& b) { return a -= b; }
  friend TruncatedSeries2 operator*(TruncatedSeries2 a, const Rational& k) { return a *= k; }
  friend TruncatedSeries2 operator*(const TruncatedSeries2& a, const TruncatedSeries2& b);

  // Needs a nonzero constant term.
  TruncatedSeries2 inverse() const;
  // Newton iteration; needs constant term 1. Returns the root with constant 1.
  TruncatedSeries2 sqrt() const;
  // this(x, g(x, z)) for g divisible by z; orders are those of g. Throws
  // InternalMismatch otherwise.
  TruncatedSeries2 compose_y(const TruncatedSeries2& g) const;
  // Sum over j of the coefficients (evaluation at y = 1, as a series in x).
  std::vector<Rational> at_y_one() const;
  TruncatedSeries2 truncated(int nx, int ny) const;
  // True if every coefficient is a non-negative integer.
  bool nonnegative_integral() const;

  bool operator==(const TruncatedSeries2&) const = default;

private:
  int index(int i, int j) const { return i * (ny_ + 1) + j; }
  int nx_, ny_;
  std::vector<Rational> c_;
};

// 2 * 3^e / ((e+1)(e+2)) * binom(2e, e), e = 0..n.
std::vector<BigInt> series_B1(int n);
// Expansion of -(1 - 18x - (1-12x)^{3/2}) / (54x^2) up to x^n.
std::vector<Rational> series_B1_radical(int n);

// Solution of B = 1 + x y^2 B^2 + x y (B(x,1) - y B) / (1 - y) by iteration in x.
TruncatedSeries2 series_B(int nx, int ny);

// Simple-boundary series S(x, z) from the radical (unit-constant branch).
TruncatedSeries2 series_S_radical(int nx, int nz);
// S(x, z) = B(x, Y) where Y = z / B(x, Y).
TruncatedSeries2 series_S_inversion(int nx, int nz);
// Both constructions; throws InternalMismatch when they differ.
TruncatedSeries2 series_S(int nx, int nz);

// Nonzero coefficients as `x^i <var>^j : c`, by total degree, then by
// decreasing power of x.
std::string format_series(const TruncatedSeries2& s, char var = 'y');

} // namespace mapglue

#endif // MAPGLUE_SERIES_HPP

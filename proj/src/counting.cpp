#include "mapglue/counting.hpp"

#include <map>
#include <numeric>
#include <string>

namespace mapglue {

namespace {

BigInt integral(const Rational& r, const char* what)
{
  if (r.get_den() != 1)
    throw Error(Errc::NonIntegral, std::string(what) + " is not an integer: " + r.get_str());
  return r.get_num();
}

void require(bool ok, const std::string& why)
{
  if (!ok)
    throw Error(Errc::Infeasible, why);
}

void require_qf(int q, int f)
{
  require(q == 3 || q == 4, "q must be 3 or 4");
  require(f >= 1, "f must be positive");
  require(q != 3 || f % 2 == 0, "triangulations have an even number of faces");
}

// Size-dependent part shared by every closed form, with r trees of m edges
// in total: 2^{f-2m} (3f/2+m-2)!! / ((f/2-m+2-r)! (f/2+3m)!!) for q = 3 and
// 3^{f-m} (2f+m-1)! / ((f+2m)! (f-m+2-r)!) for q = 4.
Rational map_factor(int q, int f, long m, long r)
{
  if (q == 3) {
    const long h = f / 2;
    require(h - m + 2 - r >= 0, "too many tree edges for the face count");
    return pow_q(2, f - 2 * m) * ratio(double_factorial(3 * h + m - 2))
           / ratio(factorial(h - m + 2 - r) * double_factorial(h + 3 * m));
  }
  require(f - m + 2 - r >= 0, "too many tree edges for the face count");
  return pow_q(3, f - m) * ratio(factorial(2 * f + m - 1)) / ratio(factorial(f + 2 * m) * factorial(f - m + 2 - r));
}

// Per-tree factor: multinomial(4m; 2m, m, m) / (m+1) or multinomial(3m; m, m, m) / (m+1).
Rational tree_factor(int q, long m)
{
  const BigInt multi = q == 3 ? multinomial({2 * m, m, m}) : multinomial({m, m, m});
  return ratio(multi, BigInt(m + 1));
}

void require_sizes(const std::vector<int>& sizes)
{
  require(!sizes.empty(), "a forest has at least one tree");
  for (int m : sizes)
    require(m >= 1, "trees have at least one edge");
}

BigInt symmetry_factorials(const std::vector<int>& sizes)
{
  std::map<int, long> mult;
  for (int m : sizes)
    ++mult[m];
  BigInt out = 1;
  for (const auto& [m, c] : mult)
    out *= factorial(c);
  return out;
}

} // namespace

BigInt double_factorial(long n)
{
  require(n >= -1, "double factorial of n < -1");
  if (n <= 0)
    return 1;
  BigInt r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

long oriented_edges(int q, int f) { return static_cast<long>(q) * f; }

long q_vertices(int q, int f) { return q == 3 ? f / 2 + 2 : f + 2; }

BigInt count_tree_decorated(int q, int f, int m, RootMode mode)
{
  require_qf(q, f);
  require(m >= 1, "the tree has at least one edge");
  require(m <= q_vertices(q, f) - 1, "the tree has more edges than the map allows");
  const Rational anywhere = map_factor(q, f, m, 1) * oriented_edges(q, f) * tree_factor(q, m);
  if (mode == RootMode::Anywhere)
    return integral(anywhere, "tree-decorated count");
  return integral(anywhere * (2 * m) / oriented_edges(q, f), "tree-decorated count rooted on the tree");
}

BigInt count_spanning(int q, int f, RootMode mode)
{
  require_qf(q, f);
  const int m = static_cast<int>(q_vertices(q, f)) - 1;
  const BigInt general = count_tree_decorated(q, f, m, mode);
  if (q == 4) {
    const BigInt multi = multinomial({f, f, f});
    const Rational closed = mode == RootMode::OnTree
                                ? ratio(2 * multi, BigInt((f + 1) * (f + 2)))
                                : ratio(4 * f * multi, BigInt((f + 1) * (f + 1) * (f + 2)));
    if (closed != general)
      throw Error(Errc::InternalMismatch, "spanning quadrangulation forms disagree");
  }
  return general;
}

Rational count_spanning_tri_printed(int f)
{
  require_qf(3, f);
  return ratio(12 * f * multinomial({f, f / 2, f / 2}), BigInt((f + 4) * (f + 2) * (f + 2)));
}

namespace {

Rational boundary_decorated(int q, int f, int m1, int m2, long tree_den)
{
  require_qf(q, f);
  require(m1 >= 0 && m2 >= 0 && m1 + m2 >= 1, "sizes must be non-negative, not both zero");
  const long m = m1 + m2;
  require(m <= q_vertices(q, f) - 1, "boundary too long for the face count");
  const Rational trees = ratio(binomial(2 * m2, m2), BigInt(tree_den));
  if (q == 3)
    return map_factor(3, f, m, 1) * 2 * m * ratio(binomial(4 * m, 2 * m)) * trees;
  return map_factor(4, f, m, 1) * 2 * m * ratio(binomial(3 * m, m)) * trees;
}

} // namespace

BigInt count_boundary_decorated(int q, int f, int m1, int m2)
{
  return integral(boundary_decorated(q, f, m1, m2, m2 + 1), "boundary-decorated count");
}

Rational count_boundary_decorated_printed(int q, int f, int m1, int m2)
{
  return boundary_decorated(q, f, m1, m2, q == 3 ? 2 * m2 + 1 : m2 + 1);
}

Rational count_forest_exact(int q, int f, const std::vector<int>& sizes, bool labeled)
{
  require_qf(q, f);
  require_sizes(sizes);
  const long m = std::accumulate(sizes.begin(), sizes.end(), 0L);
  const long r = static_cast<long>(sizes.size());
  Rational out = map_factor(q, f, m, r);
  for (int mi : sizes)
    out *= tree_factor(q, mi) * (labeled ? 2 * mi : 1);
  if (!labeled)
    out *= ratio(oriented_edges(q, f) * factorial(r), symmetry_factorials(sizes));
  return out;
}

BigInt count_forest(int q, int f, const std::vector<int>& sizes, bool labeled)
{
  if (labeled)
    return integral(count_forest_exact(q, f, sizes, true), "forest count");
  return integral(count_forest_from_labeled(q, f, sizes), "forest count");
}

Rational count_forest_from_labeled(int q, int f, const std::vector<int>& sizes)
{
  Rational out = count_forest_exact(q, f, sizes, true) * oriented_edges(q, f);
  out /= ratio(symmetry_factorials(sizes));
  for (int mi : sizes)
    out /= 2 * mi;
  return out;
}

namespace {

void require_spanning(int q, int f, const std::vector<int>& sizes)
{
  require_qf(q, f);
  require_sizes(sizes);
  const long covered = std::accumulate(sizes.begin(), sizes.end(), 0L) + static_cast<long>(sizes.size());
  require(covered == q_vertices(q, f), "a spanning forest covers every vertex");
}

} // namespace

BigInt count_spanning_forest(int q, int f, const std::vector<int>& sizes)
{
  require_spanning(q, f, sizes);
  return count_forest(q, f, sizes, false);
}

Rational count_spanning_forest_printed(int q, int f, const std::vector<int>& sizes)
{
  require_spanning(q, f, sizes);
  const long r = static_cast<long>(sizes.size());
  Rational out = ratio(oriented_edges(q, f) * factorial(r), symmetry_factorials(sizes));
  for (int mi : sizes)
    out *= tree_factor(q, mi);
  if (q == 3)
    return out * pow_q(4, r - 2) * ratio(double_factorial(2 * f + 2 - r))
           / ratio(double_factorial(2 * f + 6 - 3 * r));
  return out * pow_q(3, r - 2) * ratio(factorial(3 * f - r + 1)) / ratio(factorial(3 * f - 2 * r + 4));
}

BigInt count_bubble(int e, int m)
{
  require(e >= 0 && m >= 1, "bubble counts need e >= 0 and m >= 1");
  const Rational out = ratio(pow_ui(3, e) * factorial(2 * e + 2 * m - 1), factorial(e) * factorial(e + 2 * m + 1))
                       * ratio(2 * (e + m), m + 1) * ratio(multinomial({2L * m, 1L * m, 1L * m}));
  return integral(out, "bubble count");
}

BigInt mullin_count(int e)
{
  require(e >= 0, "edge count must be non-negative");
  return catalan(e) * catalan(e + 1);
}

bool reroot_check(int q, int f, const std::vector<int>& sizes)
{
  const Rational labeled = count_forest_exact(q, f, sizes, true);
  const Rational unlabeled = count_forest_exact(q, f, sizes, false);
  Rational rhs = unlabeled * ratio(factorial(static_cast<long>(sizes.size())), symmetry_factorials(sizes));
  for (int mi : sizes)
    rhs *= 2 * mi;
  return labeled * oriented_edges(q, f) == rhs;
}

BigInt catalan_ext(int m, int n)
{
  require(m >= 1 && n >= 0, "C_{m,n} needs m >= 1 and n >= 0");
  std::vector<long> parts(m + 1, n);
  const BigInt num = multinomial(parts);
  const BigInt den = binomial(m + n, n);
  if (num % den != 0)
    throw Error(Errc::NonIntegral, "C_{" + std::to_string(m) + "," + std::to_string(n) + "} is not an integer");
  return num / den;
}

long legendre_valuation(long p, long k)
{
  long v = 0;
  for (long pk = p; pk <= k; pk *= p) {
    v += k / pk;
    if (pk > k / p)
      break;
  }
  return v;
}

bool verify_integrality(int m, int n)
{
  require(m >= 1 && n >= 0, "C_{m,n} needs m >= 1 and n >= 0");
  const long top = std::max<long>((m + 1L) * n, m + n);
  std::vector<char> composite(top + 1, 0);
  const BigInt value = catalan_ext(m, n);
  for (long p = 2; p <= top; ++p) {
    if (composite[p])
      continue;
    for (long k = p * p; k <= top; k += p)
      composite[k] = 1;
    long total = 0;
    for (long pi = p; pi <= top; pi *= p) {
      const long t1 = (m + 1L) * n / pi - (m + 1L) * (n / pi);
      const long t2 = -((m + n) / pi) + n / pi + m / pi;
      if (t1 < 0 || t2 < -1 || t1 + t2 < 0)
        return false;
      total += t1 + t2;
      if (pi > top / p)
        break;
    }
    const long direct = legendre_valuation(p, (m + 1L) * n) - (m + 1L) * legendre_valuation(p, n)
                        - legendre_valuation(p, m + n) + legendre_valuation(p, n) + legendre_valuation(p, m);
    if (direct != total || total < 0)
      return false;
    BigInt rest = value;
    long actual = 0;
    if (rest != 0)
      while (rest % p == 0) {
        rest /= p;
        ++actual;
      }
    if (actual != total)
      return false;
  }
  return true;
}

} // namespace mapglue

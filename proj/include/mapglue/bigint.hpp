#ifndef MAPGLUE_BIGINT_HPP
#define MAPGLUE_BIGINT_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <span>

namespace mapglue {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt factorial(long n)
{
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline BigInt binomial(long n, long k)
{
  if (k < 0 || k > n)
    return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// n! / (k_1! ... k_r!) with n = sum of the parts.
inline BigInt multinomial(std::span<const long> parts)
{
  long n = 0;
  BigInt r = 1;
  for (long k : parts) {
    n += k;
    r *= binomial(n, k);
  }
  return r;
}

inline BigInt multinomial(std::initializer_list<long> parts)
{
  return multinomial(std::span<const long>(parts.begin(), parts.size()));
}

inline BigInt pow_ui(long base, unsigned long exp)
{
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return r;
}

// n / d in lowest terms.
inline Rational ratio(const BigInt& n, const BigInt& d = 1)
{
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// base^exp for possibly negative exp.
inline Rational pow_q(long base, long exp)
{
  if (exp >= 0)
    return Rational(pow_ui(base, static_cast<unsigned long>(exp)));
  return Rational(BigInt(1), pow_ui(base, static_cast<unsigned long>(-exp)));
}

} // namespace mapglue

#endif // MAPGLUE_BIGINT_HPP

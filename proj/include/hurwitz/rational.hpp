#pragma once

// Exact scalars. Rat is GMP's mpq_class, which keeps every value in lowest
// terms with a positive denominator after each arithmetic operation.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hurwitz {

using BigInt = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const BigInt& num, const BigInt& den = 1) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Serializes as "p/q" with q > 0, always including the denominator.
inline std::string to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat parse_rat(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return make_rat(BigInt(s));
    return make_rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: " + s);
  }
}

inline BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative number");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// Binomial coefficient as a polynomial in n: zero for k < 0, and the
/// generalized value (-1)^k C(k-n-1, k) when n < 0.
inline BigInt binomial(long n, long k) {
  if (k < 0) return 0;
  BigInt r;
  if (n >= 0) {
    if (k > n) return 0;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
  }
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
  return (k % 2 == 0) ? r : BigInt(-r);
}

/// x (x-1) ... (x-k+1); the empty product for k = 0.
inline BigInt falling_factorial(long x, long k) {
  if (k < 0) throw std::domain_error("negative falling factorial length");
  BigInt r = 1;
  for (long i = 0; i < k; ++i) r *= (x - i);
  return r;
}

inline Rat falling_factorial(const Rat& x, long k) {
  if (k < 0) throw std::domain_error("negative falling factorial length");
  Rat r = 1;
  for (long i = 0; i < k; ++i) r *= Rat(x - i);
  return r;
}

inline Rat pow(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    return Rat(1) / pow(base, -e);
  }
  Rat r = 1;
  Rat b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline BigInt ipow(long base, long e) {
  if (e < 0) throw std::domain_error("negative integer exponent");
  BigInt r;
  BigInt b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

/// Raised when two independent computation routes disagree or an internal
/// exactness assertion fails. Indicates a bug, never bad input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hurwitz

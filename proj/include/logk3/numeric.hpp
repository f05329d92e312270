#pragma once

// Exact arithmetic kit shared by the whole library: big integers, big
// rationals, valuations, modular helpers and small-prime utilities.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace logk3 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

[[noreturn]] inline void fail(const std::string& msg) {
  throw std::runtime_error(msg);
}

// Mixed rational/int comparisons must go through these helpers:
// boost::rational's heterogeneous operators recurse on cpp_int.
inline bool is_zero(const Rat& q) { return q.numerator().is_zero(); }

inline int sign_of(const Rat& q) { return q.numerator().sign(); }

[[noreturn]] inline void bad_input(const std::string& msg) {
  throw std::invalid_argument(msg);
}

inline Int isqrt(const Int& n) {
  if (n < 0) bad_input("isqrt of negative number");
  return boost::multiprecision::sqrt(n);
}

inline bool is_square(const Int& n) {
  if (n < 0) return false;
  Int r = isqrt(n);
  return r * r == n;
}

// Floored modulus, result in [0, m).
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

// Extended gcd: returns g and sets x, y with a*x + b*y = g.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  if (b == 0) {
    x = (a < 0) ? -1 : 1;
    y = 0;
    return a < 0 ? Int(-a) : a;
  }
  Int x1, y1;
  Int g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

inline Int mod_inverse(const Int& a, const Int& m) {
  Int x, y;
  Int g = ext_gcd(mod_floor(a, m), m, x, y);
  if (g != 1) bad_input("mod_inverse: arguments not coprime");
  return mod_floor(x, m);
}

inline Int pow_mod(Int base, Int exp, const Int& m) {
  return boost::multiprecision::powm(mod_floor(base, m), exp, m);
}

// Exact p-adic valuation of a nonzero integer.
inline long val_p(Int n, const Int& p) {
  if (n == 0) bad_input("val_p of zero");
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline long val_p(const Rat& q, const Int& p) {
  if (is_zero(q)) bad_input("val_p of zero");
  return val_p(q.numerator(), p) - val_p(q.denominator(), p);
}

// Removes all factors of p; n must be nonzero.
inline Int drop_p(Int n, const Int& p) {
  while (n % p == 0) n /= p;
  return n;
}

// The p-unit part of a nonzero rational, reduced mod p (p odd or 2^k).
inline Int unit_part_mod(const Rat& q, const Int& p, const Int& modulus) {
  Int num = drop_p(q.numerator(), p);
  Int den = drop_p(q.denominator(), p);
  return mod_floor(mod_floor(num, modulus) * mod_inverse(den, modulus),
                   modulus);
}

// Trial-division primality; fine at the scale this library works at.
inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Int d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<Int> primes_up_to(long bound) {
  std::vector<Int> out;
  if (bound < 2) return out;
  std::vector<bool> sieve(static_cast<size_t>(bound) + 1, true);
  for (long i = 2; i <= bound; ++i) {
    if (!sieve[i]) continue;
    out.emplace_back(i);
    for (long j = 2 * i; j <= bound; j += i) sieve[j] = false;
  }
  return out;
}

// Prime factorization by trial division; pairs (prime, exponent).
inline std::vector<std::pair<Int, long>> factorize(Int n) {
  if (n == 0) bad_input("factorize(0)");
  if (n < 0) n = -n;
  std::vector<std::pair<Int, long>> out;
  for (Int d = 2; d * d <= n; d == 2 ? d = 3 : d += 2) {
    if (n % d != 0) continue;
    long e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_square_free(const Int& n) {
  if (n == 0) return false;
  for (auto& [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

// Legendre symbol (a | p) for odd prime p, in {-1, 0, +1}.
inline int legendre(const Int& a, const Int& p) {
  Int r = mod_floor(a, p);
  if (r == 0) return 0;
  Int s = pow_mod(r, (p - 1) / 2, p);
  return s == 1 ? 1 : -1;
}

// Multiplicative order of a mod p (a must be a unit).
inline long mult_order(const Int& a, const Int& p) {
  Int x = mod_floor(a, p);
  if (x == 0) bad_input("mult_order of 0");
  long k = 1;
  Int cur = x;
  while (cur != 1) {
    cur = mod_floor(cur * x, p);
    ++k;
  }
  return k;
}

inline Int parse_int(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::exception&) {
    bad_input("not an integer: '" + s + "'");
  }
}

// Accepts "p", "-p" or "p/q".
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s), Int(1));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) bad_input("zero denominator in '" + s + "'");
  return Rat(num, den);
}

inline std::string to_string(const Int& n) { return n.str(); }

inline std::string to_string(const Rat& q) {
  if (q.denominator() == 1) return q.numerator().str();
  return q.numerator().str() + "/" + q.denominator().str();
}

}  // namespace logk3

#pragma once

// Hilbert symbols (α, β)_v over Q: +1 iff z^2 = αx^2 + βy^2 has a
// nontrivial solution over the completion at v. Computed by the
// classical valuation/Legendre formulas at odd p, the ε/ω exponent
// formula at 2, and sign inspection at the real place.

#include <string>

#include "logk3/numeric.hpp"

namespace logk3 {

struct HilbertPlace {
  bool infinite = false;
  Int p = 0;  // the finite prime when !infinite

  static HilbertPlace real() { return {true, 0}; }
  static HilbertPlace finite(const Int& p) {
    if (!is_prime(p)) bad_input("HilbertPlace: not a prime");
    return {false, p};
  }

  friend bool operator==(const HilbertPlace&, const HilbertPlace&) = default;

  std::string str() const { return infinite ? "inf" : p.str(); }
};

inline HilbertPlace parse_place(const std::string& s) {
  if (s == "inf" || s == "oo" || s == "infinity" || s == "real")
    return HilbertPlace::real();
  return HilbertPlace::finite(parse_int(s));
}

namespace detail {

// (u-1)/2 mod 2 for odd u; the quadratic character of -1 at 2.
inline int eps2(const Int& u) { return mod_floor(u, 4) == 1 ? 0 : 1; }

// (u^2-1)/8 mod 2 for odd u; the quadratic character of 2 at 2.
inline int omega2(const Int& u) {
  Int r = mod_floor(u, 8);
  return (r == 1 || r == 7) ? 0 : 1;
}

}  // namespace detail

inline int hilbert_symbol(const Rat& alpha, const Rat& beta,
                          const HilbertPlace& v) {
  if (is_zero(alpha) || is_zero(beta))
    bad_input("hilbert_symbol: arguments must be nonzero");
  if (v.infinite) return (sign_of(alpha) < 0 && sign_of(beta) < 0) ? -1 : 1;
  const Int& p = v.p;
  long a = val_p(alpha, p);
  long b = val_p(beta, p);
  if (p == 2) {
    Int u = unit_part_mod(alpha, p, Int(8));
    Int w = unit_part_mod(beta, p, Int(8));
    long exponent = detail::eps2(u) * detail::eps2(w) + a * detail::omega2(w) +
                    b * detail::omega2(u);
    return exponent % 2 == 0 ? 1 : -1;
  }
  Int u = unit_part_mod(alpha, p, p);
  Int w = unit_part_mod(beta, p, p);
  int leg_u = legendre(u, p);
  int leg_w = legendre(w, p);
  int result = 1;
  if ((a % 2 != 0) && (b % 2 != 0) && mod_floor(p, 4) == 3) result = -result;
  if (b % 2 != 0 && leg_u == -1) result = -result;
  if (a % 2 != 0 && leg_w == -1) result = -result;
  return result;
}

}  // namespace logk3

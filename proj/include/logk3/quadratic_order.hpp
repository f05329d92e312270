#pragma once

// Arithmetic in the real quadratic order Z[sqrt(a)] for square-free
// a = 2, 3 (mod 4): fundamental units by continued fractions, norm
// equations, split primes with surjective unit reduction, and the
// resulting integral point families on (x^2 - a y^2) t = y - 1.

#include <optional>
#include <string>
#include <vector>

#include "logk3/numeric.hpp"
#include "logk3/surface.hpp"

namespace logk3 {

// u + v*sqrt(a); the order is fixed by context.
struct QuadInt {
  Int u, v;

  friend bool operator==(const QuadInt&, const QuadInt&) = default;
};

struct QuadraticOrder {
  Int a;

  explicit QuadraticOrder(const Int& a_) : a(a_) {
    if (a < 2) bad_input("QuadraticOrder: a must be >= 2");
    if (is_square(a)) bad_input("QuadraticOrder: a must be a nonsquare");
    if (!is_square_free(a)) bad_input("QuadraticOrder: a must be square-free");
    Int r = mod_floor(a, 4);
    if (r != 2 && r != 3)
      bad_input("QuadraticOrder: a must be 2 or 3 mod 4 (Z[sqrt(a)] maximal)");
  }

  QuadInt mul(const QuadInt& p, const QuadInt& q) const {
    return {p.u * q.u + a * p.v * q.v, p.u * q.v + p.v * q.u};
  }

  QuadInt conj(const QuadInt& p) const { return {p.u, -p.v}; }

  QuadInt neg(const QuadInt& p) const { return {-p.u, -p.v}; }

  Int norm(const QuadInt& p) const { return p.u * p.u - a * p.v * p.v; }

  QuadInt pow(QuadInt base, Int e) const {
    QuadInt acc{1, 0};
    while (e > 0) {
      if (e % 2 == 1) acc = mul(acc, base);
      base = mul(base, base);
      e /= 2;
    }
    return acc;
  }

  // Image of u + v*sqrt(a) in Z/p under sqrt(a) -> r.
  Int residue(const QuadInt& p, const Int& r, const Int& prime) const {
    return mod_floor(p.u + p.v * r, prime);
  }
};

// The least unit > 1 of Z[sqrt(a)], by the continued fraction of
// sqrt(a): convergents p/q are scanned for p^2 - a q^2 = ±1.
inline QuadInt fundamental_unit(const Int& a) {
  QuadraticOrder order(a);
  Int a0 = isqrt(a);
  Int m = 0, d = 1, cf = a0;
  Int p_prev = 1, p_cur = a0;
  Int q_prev = 0, q_cur = 1;
  for (int iter = 0; iter < 100000; ++iter) {
    Int norm = p_cur * p_cur - a * q_cur * q_cur;
    if (norm == 1 || norm == -1) return {p_cur, q_cur};
    m = d * cf - m;
    d = (a - m * m) / d;
    cf = (a0 + m) / d;
    Int p_next = cf * p_cur + p_prev;
    Int q_next = cf * q_cur + q_prev;
    p_prev = p_cur;
    p_cur = p_next;
    q_prev = q_cur;
    q_cur = q_next;
  }
  fail("fundamental_unit: continued fraction did not close");
}

// A split prime p together with the square root r of a mod p matching
// the prime element pi (sqrt(a) = r mod (pi)).
struct SplitPrimeDatum {
  Int p;
  Int r;
  QuadInt pi;  // |norm(pi)| = p
};

// Some pi with |norm(pi)| = p, or nothing if the bounded search finds
// none (p inert, or the prime above p not principal).
inline std::optional<QuadInt> solve_norm_equation(const Int& a, const Int& p) {
  QuadraticOrder order(a);
  if (!is_prime(p) || p == 2) bad_input("solve_norm_equation: p must be an odd prime");
  if (p != 2 && mod_floor(a, p) != 0 && legendre(a, p) != 1)
    return std::nullopt;  // inert prime
  QuadInt eps = fundamental_unit(a);
  // Any principal ideal of norm p has a generator in this range.
  Int w_bound = isqrt(p * (eps.u + eps.v * (isqrt(a) + 1) + 2)) + 2;
  for (Int w = 0; w <= w_bound; ++w) {
    Int uu = a * w * w + p;
    if (is_square(uu)) return QuadInt{isqrt(uu), w};
    uu = a * w * w - p;
    if (uu >= 0 && is_square(uu)) return QuadInt{isqrt(uu), w};
  }
  return std::nullopt;
}

// The square root of a mod p determined by pi: from u + v sqrt(a) = 0
// (mod pi), sqrt(a) = -u/v.
inline Int root_from_pi(const Int& a, const Int& p, const QuadInt& pi) {
  Int r = mod_floor(-pi.u * mod_inverse(pi.v, p), p);
  if (mod_floor(r * r - a, p) != 0) fail("root_from_pi: inconsistent datum");
  return r;
}

// Whether <-1, residue(eps)> is all of (Z/p)^*. The subgroup has order
// ord(eps) when -1 is a power of eps, else 2*ord(eps).
inline bool unit_reduction_surjective(const QuadraticOrder& order,
                                      const QuadInt& eps, const Int& r,
                                      const Int& p) {
  Int ebar = order.residue(eps, r, p);
  long ord = mult_order(ebar, p);
  bool contains_minus_one = false;
  Int cur = 1;
  for (long k = 0; k < ord && !contains_minus_one; ++k) {
    contains_minus_one = cur == p - 1;
    cur = mod_floor(cur * ebar, p);
  }
  long size = contains_minus_one ? ord : 2 * ord;
  return Int(size) == p - 1;
}

// All odd split primes p <= bound whose unit reduction is surjective,
// each with a solved prime element.
inline std::vector<SplitPrimeDatum> surjective_primes(const Int& a,
                                                      long bound) {
  QuadraticOrder order(a);
  QuadInt eps = fundamental_unit(a);
  std::vector<SplitPrimeDatum> out;
  for (const Int& p : primes_up_to(bound)) {
    if (p == 2 || mod_floor(a, p) == 0) continue;
    if (legendre(a, p) != 1) continue;
    auto pi = solve_norm_equation(a, p);
    if (!pi) continue;
    Int r = root_from_pi(a, p, *pi);
    if (unit_reduction_surjective(order, eps, r, p))
      out.push_back({p, r, *pi});
  }
  return out;
}

// An integral point on the curve x^2 - a y^2 = ±p of the surface
// (x^2 - a y^2) t = y - 1, plus the data needed to generate more.
struct CurvePoint {
  MPoint point;
  QuadInt element;  // x + y sqrt(a)
  Int norm;         // ±p
  long unit_order;  // order of eps mod p; multiplying by eps^unit_order
                    // yields the next point on the same curve
};

namespace detail {

inline CurvePoint curve_point_from_element(const QuadraticOrder& order,
                                           const SplitPrimeDatum& datum,
                                           const QuadInt& el) {
  CurvePoint out;
  out.element = el;
  out.norm = order.norm(el);
  if (out.norm != datum.p && out.norm != -datum.p)
    fail("curve point has wrong norm");
  if (mod_floor(el.v - 1, datum.p) != 0)
    fail("curve point violates y = 1 mod p");
  Int t = (el.v - 1) / out.norm;
  out.point = {Rat(el.u), Rat(el.v), Rat(t), Int(1)};
  QuadInt eps = fundamental_unit(order.a);
  out.unit_order = mult_order(order.residue(eps, datum.r, datum.p), datum.p);
  return out;
}

}  // namespace detail

// The first unit multiple s * eps^k * conj(pi) (s = +1 scanned first,
// then s = -1) whose residue mod (pi) equals 2r. Its coordinates give
// an integral point on C_p with y = 1 (mod p) and t exactly integral.
inline CurvePoint point_on_curve(const Int& a, const SplitPrimeDatum& datum) {
  QuadraticOrder order(a);
  QuadInt eps = fundamental_unit(a);
  Int target = mod_floor(2 * datum.r, datum.p);
  long ord = mult_order(order.residue(eps, datum.r, datum.p), datum.p);
  for (int sign = 0; sign < 2; ++sign) {
    QuadInt cur = order.conj(datum.pi);
    if (sign == 1) cur = order.neg(cur);
    for (long k = 0; k < ord; ++k) {
      if (order.residue(cur, datum.r, datum.p) == target)
        return detail::curve_point_from_element(order, datum, cur);
      cur = order.mul(cur, eps);
    }
  }
  bad_input("point_on_curve: unit reduction not surjective for this datum");
}

// Successive points on the same curve: multiply by eps^unit_order,
// which fixes the residue mod (pi) and the absolute norm.
inline CurvePoint next_point_on_curve(const Int& a,
                                      const SplitPrimeDatum& datum,
                                      const CurvePoint& prev) {
  QuadraticOrder order(a);
  QuadInt eps = fundamental_unit(a);
  QuadInt el = order.mul(prev.element, order.pow(eps, Int(prev.unit_order)));
  return detail::curve_point_from_element(order, datum, el);
}

struct DensityCurve {
  SplitPrimeDatum datum;
  std::vector<CurvePoint> points;
};

struct DensityReport {
  Int a;
  std::vector<DensityCurve> curves;
  bool all_verified = false;
  std::string note;
};

// num_primes distinct curves C_p carrying points_per_curve exact
// integral points each, all verified against the surface equation.
inline DensityReport density_experiment(const Int& a, int num_primes,
                                        int points_per_curve,
                                        long prime_search_bound = 2000) {
  if (num_primes < 1 || points_per_curve < 1)
    bad_input("density_experiment: counts must be >= 1");
  DensityReport rep;
  rep.a = a;
  auto primes = surjective_primes(a, prime_search_bound);
  if (static_cast<int>(primes.size()) < num_primes) {
    rep.note = "only " + std::to_string(primes.size()) +
               " surjective primes below " + std::to_string(prime_search_bound);
    rep.all_verified = false;
    return rep;
  }
  SurfaceModel model = norm_form_model(a, Int(0), Int(1), Int(-1));
  rep.all_verified = true;
  for (int i = 0; i < num_primes; ++i) {
    DensityCurve curve;
    curve.datum = primes[i];
    CurvePoint pt = point_on_curve(a, curve.datum);
    for (int j = 0; j < points_per_curve; ++j) {
      bool ok = is_solution(model, pt.point) &&
                (pt.norm == curve.datum.p || pt.norm == -curve.datum.p) &&
                mod_floor(pt.point.y.numerator() - 1, curve.datum.p) == 0;
      if (!ok) rep.all_verified = false;
      curve.points.push_back(pt);
      if (j + 1 < points_per_curve) pt = next_point_on_curve(a, curve.datum, pt);
    }
    rep.curves.push_back(std::move(curve));
  }
  return rep;
}

}  // namespace logk3

#pragma once

// Explicit affine surface families f(x,y)t = g(x,y), exact M-integral
// point search in boxes, and the curve decomposition that certifies
// non-density of integral points on the trivial-class model.
//
// Everything here is exact; no floating point.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "logk3/numeric.hpp"

namespace logk3 {

struct SurfaceModel {
  enum class Family {
    Bilinear,   // (a*x*y + b*x + c*y + d) t = e*x + f
    NormForm,   // (x^2 - a*y^2) t = b*x + c*y + d
    GeneralD7,  // ((a*x + b)*y + m) t = c*x + d
  };
  Family family;
  std::vector<Rat> coeffs;

  Rat lhs_coeff(const Rat& x, const Rat& y) const {
    switch (family) {
      case Family::Bilinear:
        return coeffs[0] * x * y + coeffs[1] * x + coeffs[2] * y + coeffs[3];
      case Family::NormForm:
        return x * x - coeffs[0] * y * y;
      case Family::GeneralD7:
        return (coeffs[0] * x + coeffs[1]) * y + coeffs[4];
    }
    fail("unknown family");
  }

  Rat rhs(const Rat& x, const Rat& y) const {
    switch (family) {
      case Family::Bilinear:
        return coeffs[4] * x + coeffs[5];
      case Family::NormForm:
        return coeffs[1] * x + coeffs[2] * y + coeffs[3];
      case Family::GeneralD7:
        return coeffs[2] * x + coeffs[3];
    }
    fail("unknown family");
  }
};

inline SurfaceModel bilinear_model(Rat a, Rat b, Rat c, Rat d, Rat e, Rat f) {
  return {SurfaceModel::Family::Bilinear, {a, b, c, d, e, f}};
}

// The trivial-class model (xy - 1)t = x - 1.
inline SurfaceModel trivial_model() {
  return bilinear_model(Rat(1), Rat(0), Rat(0), Rat(-1), Rat(1), Rat(-1));
}

inline SurfaceModel norm_form_model(const Int& a, const Int& b, const Int& c,
                                    const Int& d) {
  if (is_square(a)) bad_input("norm_form_model: a must be a nonsquare");
  return {SurfaceModel::Family::NormForm, {Rat(a), Rat(b), Rat(c), Rat(d)}};
}

inline SurfaceModel general_d7_model(const Int& a, const Int& b, const Int& c,
                                     const Int& d, const Int& m) {
  Int delta = a * d - b * c;
  if (a * c * m * delta == 0)
    bad_input("general_d7_model: requires a*c*m*(ad - bc) != 0");
  return {SurfaceModel::Family::GeneralD7,
          {Rat(a), Rat(b), Rat(c), Rat(d), Rat(m)}};
}

// An exact solution whose coordinates all have denominator dividing M.
struct MPoint {
  Rat x, y, t;
  Int M = 1;

  friend bool operator==(const MPoint& a, const MPoint& b) {
    return a.x == b.x && a.y == b.y && a.t == b.t;
  }
  friend bool operator<(const MPoint& a, const MPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.t < b.t;
  }
};

inline Rat rat_abs(const Rat& q) { return sign_of(q) < 0 ? -q : q; }

inline bool is_m_integral(const Rat& q, const Int& M) {
  return (M * q.numerator()) % q.denominator() == 0;
}

inline bool is_m_integral_point(const MPoint& p) {
  return is_m_integral(p.x, p.M) && is_m_integral(p.y, p.M) &&
         is_m_integral(p.t, p.M);
}

inline bool is_solution(const SurfaceModel& m, const MPoint& p) {
  return m.lhs_coeff(p.x, p.y) * p.t == m.rhs(p.x, p.y);
}

namespace detail {

// With x = i/M, y = j/M, t = k/M and both sides scaled by the lcm L of
// the coefficient denominators, the equation becomes F(i,j)k = M G(i,j)
// with F, G integer forms.
struct ScaledModel {
  SurfaceModel::Family family;
  long long M;
  long long L;
  std::vector<long long> c;  // L * coeffs

  ScaledModel(const SurfaceModel& m, const Int& M_) : family(m.family) {
    Int lcm = 1;
    for (const auto& q : m.coeffs)
      lcm = lcm / gcd(lcm, q.denominator()) * q.denominator();
    M = checked(M_);
    L = checked(lcm);
    for (const auto& q : m.coeffs)
      c.push_back(checked(q.numerator() * (lcm / q.denominator())));
  }

  static long long checked(const Int& v) {
    if (v > Int(1) << 31 || v < -(Int(1) << 31))
      bad_input("search_box: coefficient or bound too large for box search");
    return static_cast<long long>(v);
  }

  __int128 F(long long i, long long j) const {
    switch (family) {
      case SurfaceModel::Family::Bilinear:
        return (__int128)c[0] * i * j + (__int128)c[1] * i * M +
               (__int128)c[2] * j * M + (__int128)c[3] * M * M;
      case SurfaceModel::Family::NormForm:
        return (__int128)L * i * i - (__int128)c[0] * j * j;
      case SurfaceModel::Family::GeneralD7:
        return ((__int128)c[0] * i + (__int128)c[1] * M) * j +
               (__int128)c[4] * M * M;
    }
    fail("unknown family");
  }

  __int128 G(long long i, long long j) const {
    switch (family) {
      case SurfaceModel::Family::Bilinear:
        return ((__int128)c[4] * i + (__int128)c[5] * M) * M;
      case SurfaceModel::Family::NormForm:
        return ((__int128)c[1] * i + (__int128)c[2] * j + (__int128)c[3] * M) *
               M;
      case SurfaceModel::Family::GeneralD7:
        return ((__int128)c[2] * i + (__int128)c[3] * M) * M;
    }
    fail("unknown family");
  }
};

}  // namespace detail

// All M-integral solutions with |Mx|, |My|, |Mt| <= M*B. Points on a
// degenerate fibre (f = g = 0) are emitted for every admissible t.
inline std::vector<MPoint> search_box(const SurfaceModel& m, const Int& M,
                                      const Int& B) {
  if (M < 1 || B < 1) bad_input("search_box: M and B must be >= 1");
  detail::ScaledModel sm(m, M);
  long long bound = detail::ScaledModel::checked(M * B);
  std::vector<MPoint> out;
  auto emit = [&](long long i, long long j, long long k) {
    out.push_back({Rat(Int(i), M), Rat(Int(j), M), Rat(Int(k), M), M});
  };
  for (long long i = -bound; i <= bound; ++i) {
    for (long long j = -bound; j <= bound; ++j) {
      __int128 F = sm.F(i, j);
      __int128 G = sm.G(i, j);
      if (F == 0) {
        if (G != 0) continue;
        for (long long k = -bound; k <= bound; ++k) emit(i, j, k);
        continue;
      }
      __int128 num = (__int128)sm.M * G;
      if (num % F != 0) continue;
      __int128 k = num / F;
      if (k < -bound || k > bound) continue;
      emit(i, j, static_cast<long long>(k));
    }
  }
  return out;
}

// --- curve decomposition for the trivial-class model ---------------------

struct CurveFamily {
  bool includes_t_zero = true;
  std::vector<Rat> y_constants;  // curves y = j
  std::vector<Rat> x_constants;  // curves x = c

  bool contains(const MPoint& p) const {
    if (includes_t_zero && is_zero(p.t)) return true;
    if (std::find(y_constants.begin(), y_constants.end(), p.y) !=
        y_constants.end())
      return true;
    return std::find(x_constants.begin(), x_constants.end(), p.x) !=
           x_constants.end();
  }
};

// C_M = M + 1 bounds |(y-1)/y| over M-integral y != 0 (worst case
// |y| = 1/M), which makes the exclusion chain valid: an M-integral
// solution with |y| > 2M and |x-1| > 2*C_M forces t = 0.
inline Int curve_bound_C(const Int& M) { return M + 1; }

// {t = 0} together with y = j (M-integral, |j| <= 2M) and x = 1 + i
// (M-integral, |i| <= 2*C_M).
inline CurveFamily curve_decomposition(const Int& M) {
  if (M < 1) bad_input("curve_decomposition: M must be >= 1");
  CurveFamily fam;
  for (Int num = -2 * M * M; num <= 2 * M * M; ++num)
    fam.y_constants.push_back(Rat(num, M));
  Int c = curve_bound_C(M);
  for (Int num = -2 * c * M; num <= 2 * c * M; ++num)
    fam.x_constants.push_back(Rat(num, M) + 1);
  return fam;
}

struct NonDensityReport {
  bool pass = false;
  Int M, B;
  long long solution_count = 0;
  long long on_t_zero = 0;     // points with t = 0
  long long on_y_curves = 0;   // points with |y| <= 2M
  long long on_x_curves = 0;   // points with |x - 1| <= 2(M+1)
  std::vector<MPoint> violations;
};

// Runs the box search on the trivial model and checks every hit against
// the curve family. A violation would falsify the implementation, not
// the statement it certifies.
inline NonDensityReport nondensity_certificate(const Int& M, const Int& B) {
  NonDensityReport rep;
  rep.M = M;
  rep.B = B;
  Rat y_bound(2 * M), x_bound(2 * curve_bound_C(M));
  auto hits = search_box(trivial_model(), M, B);
  rep.solution_count = static_cast<long long>(hits.size());
  rep.pass = true;
  for (const auto& p : hits) {
    bool on_t = is_zero(p.t);
    bool on_y = rat_abs(p.y) <= y_bound;
    bool on_x = rat_abs(p.x - 1) <= x_bound;
    if (on_t) ++rep.on_t_zero;
    if (on_y) ++rep.on_y_curves;
    if (on_x) ++rep.on_x_curves;
    if (!(on_t || on_y || on_x)) {
      rep.pass = false;
      rep.violations.push_back(p);
    }
  }
  return rep;
}

}  // namespace logk3

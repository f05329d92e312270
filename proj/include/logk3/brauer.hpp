#pragma once

// The quaternion class A on the family ((ax+b)y + m)t = cx + d, its
// evaluation on local points via Hilbert symbols, residue analysis at
// primes dividing c and m, local solubility witnesses, and the bundled
// counter-example verdict for the integral Hasse principle.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "logk3/hilbert.hpp"
#include "logk3/numeric.hpp"
#include "logk3/surface.hpp"

namespace logk3 {

struct QuaternionClass {
  Int a, b, c, d, m;

  Int delta() const { return a * d - b * c; }

  void require_valid() const {
    if (a * c * m * delta() == 0)
      bad_input("QuaternionClass: requires a*c*m*(ad - bc) != 0");
  }

  // A = ( -c(ax+b)/Δ , ((ax+b)y + m)/m )
  Rat first_entry(const Rat& x) const {
    return Rat(-c) * (Rat(a) * x + Rat(b)) / Rat(delta());
  }
  Rat second_entry(const Rat& x, const Rat& y) const {
    return ((Rat(a) * x + Rat(b)) * y + Rat(m)) / Rat(m);
  }

  SurfaceModel surface() const { return general_d7_model(a, b, c, d, m); }
};

// A point of the surface over the completion at `place`, exact in Q and
// integral there (for a finite place: all coordinates have non-negative
// p-valuation).
struct LocalPoint {
  HilbertPlace place;
  Rat x, y, t;
};

inline std::string local_point_violation(const QuaternionClass& q,
                                         const LocalPoint& pt) {
  Rat lhs = (Rat(q.a) * pt.x + Rat(q.b)) * pt.y + Rat(q.m);
  if (lhs * pt.t != Rat(q.c) * pt.x + Rat(q.d))
    return "point does not satisfy the surface equation";
  if (!pt.place.infinite) {
    for (const Rat* coord : {&pt.x, &pt.y, &pt.t})
      if (!is_zero(*coord) && val_p(*coord, pt.place.p) < 0)
        return "coordinate has negative valuation at p";
  }
  return {};
}

inline void require_local_point(const QuaternionClass& q, const LocalPoint& pt) {
  std::string why = local_point_violation(q, pt);
  if (!why.empty()) bad_input("invalid local point: " + why);
}

// ev_A at a local point: the Hilbert symbol of the two entries at the
// point's place. Refuses points where an entry vanishes.
inline int evaluate_A(const QuaternionClass& q, const LocalPoint& pt) {
  q.require_valid();
  require_local_point(q, pt);
  Rat e1 = q.first_entry(pt.x);
  Rat e2 = q.second_entry(pt.x, pt.y);
  if (is_zero(e1) || is_zero(e2))
    bad_input(
        "evaluate_A: an entry of A vanishes at this point; choose another "
        "point");
  return hilbert_symbol(e1, e2, pt.place);
}

// --- residue analysis at a prime dividing c and m exactly once -----------

struct ResidueReport {
  Int p;
  Int coefficient;          // c/(Δm) mod p
  std::vector<int> values;  // for y = 1..p-1: +1 if coefficient*y is a
                            // square mod p (ev_A trivial), else -1
  bool surjective = false;
  LocalPoint witness_trivial;     // ev_A = +1
  LocalPoint witness_nontrivial;  // ev_A = -1
};

// The residue of A mod p is the class of (c/(Δm)) y; ev_A at a Z_p-point
// with unit y is decided by whether that residue is a square mod p.
inline ResidueReport residue_mod_q_report(const QuaternionClass& q,
                                          const Int& p) {
  q.require_valid();
  if (!is_prime(p) || p == 2) bad_input("residue_mod_q_report: p must be an odd prime");
  if (val_p(q.c, p) != 1 || val_p(q.m, p) != 1)
    bad_input("residue_mod_q_report: p must divide c and m exactly once");
  for (const Int* unit : {&q.a, &q.b, &q.d})
    if (mod_floor(*unit, p) == 0)
      bad_input("residue_mod_q_report: a, b, d must be units mod p");
  if (mod_floor(q.delta(), p) == 0)
    bad_input("residue_mod_q_report: Δ must be a unit mod p");

  ResidueReport rep;
  rep.p = p;
  Rat kappa = Rat(q.c) / (Rat(q.delta()) * Rat(q.m));
  if (val_p(kappa, p) != 0) fail("residue coefficient is not a p-unit");
  rep.coefficient = unit_part_mod(kappa, p, p);

  std::optional<Int> y_square, y_nonsquare;
  for (Int y = 1; y < p; ++y) {
    int sq = legendre(rep.coefficient * y, p);
    rep.values.push_back(sq);
    if (sq == 1 && !y_square) y_square = y;
    if (sq == -1 && !y_nonsquare) y_nonsquare = y;
  }
  if (!y_square || !y_nonsquare) return rep;

  // Explicit witnesses on the slice x = 0: t = d/(b y + m), a p-unit.
  auto witness = [&](const Int& y) {
    LocalPoint pt;
    pt.place = HilbertPlace::finite(p);
    pt.x = 0;
    pt.y = Rat(y);
    pt.t = Rat(q.d) / (Rat(q.b) * Rat(y) + Rat(q.m));
    require_local_point(q, pt);
    return pt;
  };
  rep.witness_trivial = witness(*y_square);
  rep.witness_nontrivial = witness(*y_nonsquare);
  rep.surjective = evaluate_A(q, rep.witness_trivial) == 1 &&
                   evaluate_A(q, rep.witness_nontrivial) == -1;
  return rep;
}

// --- local solubility -----------------------------------------------------

struct LocalWitness {
  HilbertPlace place;
  LocalPoint point;
};

// An exact p-adically integral point. When p does not divide c, the
// y = 0 slice works: solve cx + d = 0 (mod p^k) with k = max(1, v_p(m)),
// so t = (cx+d)/m is p-integral. When p | c (hence p does not divide a,
// since gcd(a,c) = 1), fix x with ax + b a unit and pick y making the
// lhs coefficient a unit; then t = (cx+d)/f is p-integral.
inline LocalPoint local_integral_point(const QuaternionClass& q, const Int& p) {
  q.require_valid();
  if (gcd(q.a, q.c) != 1)
    bad_input("local_integral_point: requires gcd(a, c) = 1");
  LocalPoint pt;
  pt.place = HilbertPlace::finite(p);
  if (mod_floor(q.c, p) != 0) {
    long k = std::max<long>(1, mod_floor(q.m, p) == 0 ? val_p(q.m, p) : 0);
    Int mod = 1;
    for (long i = 0; i < k; ++i) mod *= p;
    Int x0 = mod_floor(-q.d * mod_inverse(q.c, mod), mod);
    pt.x = Rat(x0);
    pt.y = Rat(0);
    pt.t = Rat(q.c * x0 + q.d) / Rat(q.m);
  } else {
    Int x0 = mod_floor(q.b, p) != 0 ? 0 : 1;  // ax0 + b a unit mod p
    Int unit = q.a * x0 + q.b;
    Int y0 = 0;
    if (mod_floor(q.m, p) == 0)
      y0 = mod_floor((1 - q.m) * mod_inverse(unit, p), p);
    pt.x = Rat(x0);
    pt.y = Rat(y0);
    pt.t = Rat(q.c * x0 + q.d) / Rat(unit * y0 + q.m);
  }
  require_local_point(q, pt);
  return pt;
}

inline LocalPoint real_point(const QuaternionClass& q) {
  q.require_valid();
  LocalPoint pt;
  pt.place = HilbertPlace::real();
  pt.x = 0;
  pt.y = 0;
  pt.t = Rat(q.d) / Rat(q.m);
  require_local_point(q, pt);
  return pt;
}

struct LocalScanReport {
  bool all_soluble = false;
  std::vector<LocalWitness> witnesses;  // one per p <= bound, plus the real place
};

inline LocalScanReport local_solubility_scan(const QuaternionClass& q,
                                             long bound) {
  LocalScanReport rep;
  rep.all_soluble = true;
  for (const Int& p : primes_up_to(bound))
    rep.witnesses.push_back({HilbertPlace::finite(p), local_integral_point(q, p)});
  rep.witnesses.push_back({HilbertPlace::real(), real_point(q)});
  return rep;
}

// --- the counter-example ---------------------------------------------------

inline QuaternionClass counterexample_class() {
  return {11, 5, 3, 1, 3};  // ((11x+5)y + 3)t = 3x+1
}

struct EmptinessCertificate {
  bool inequality_window = false;  // |ax+b| > |cx+d| + m on the scanned window
  bool inequality_tails = false;   // monotone affine bounds on both tails
  bool box_empty = false;          // no integral solutions in the box
  long long window = 0;
  Int box = 0;
};

// Certifies |11x+5| > |3x+1| + 3 for all integers x: exact scan on
// [-window, window] plus affine tail bounds (both absolute values are
// affine with positive leading term outside [-1, 0], and the gap
// grows in the tail direction).
inline EmptinessCertificate emptiness_certificate(const QuaternionClass& q,
                                                  long long window,
                                                  const Int& box) {
  EmptinessCertificate cert;
  cert.window = window;
  cert.box = box;
  auto gap = [&](const Int& x) -> Int {
    Int lhs = abs(q.a * x + q.b);
    Int rhs = abs(q.c * x + q.d);
    return lhs - rhs - q.m;
  };
  cert.inequality_window = true;
  for (long long x = -window; x <= window; ++x)
    if (gap(Int(x)) <= 0) {
      cert.inequality_window = false;
      break;
    }
  // Tails: for x >= 0 the gap is (a-c)x + (b-d-m), increasing when
  // a > c; for x <= -1 it is (c-a)x + (d-b-m), increasing towards
  // -infinity under the same condition. Positivity at the boundary
  // then covers the whole tail. Requires a > c > 0, b, d >= 0 and
  // sign-change points of both absolute values inside [-1, 0].
  bool shape_ok = q.a > q.c && q.c > 0 && q.b >= 0 && q.d >= 0 &&
                  q.b <= q.a && q.d <= q.c;  // -1 <= -b/a, -d/c <= 0
  cert.inequality_tails =
      shape_ok && gap(Int(0)) > 0 && gap(Int(-1)) > 0 && window >= 1;
  cert.box_empty = search_box(q.surface(), Int(1), box).empty();
  return cert;
}

struct CounterexampleReport {
  EmptinessCertificate emptiness;
  LocalScanReport local;
  ResidueReport residue;  // at the prime dividing c and m
  bool no_bm_obstruction = false;
  bool verdict = false;  // all sub-checks passed
};

// Bundles: (i) X(Z) empty, (ii) local points at every p <= place_bound
// and at the real place, (iii) ev_A surjective at p = 3, hence (iv) no
// integral Brauer-Manin obstruction despite X(Z) = ∅.
inline CounterexampleReport counterexample_report(const Int& box = 1000,
                                                  long place_bound = 100) {
  QuaternionClass q = counterexample_class();
  CounterexampleReport rep;
  rep.emptiness = emptiness_certificate(q, 1000000, box);
  rep.local = local_solubility_scan(q, place_bound);
  rep.residue = residue_mod_q_report(q, Int(3));
  rep.no_bm_obstruction = rep.local.all_soluble && rep.residue.surjective;
  rep.verdict = rep.emptiness.inequality_window &&
                rep.emptiness.inequality_tails && rep.emptiness.box_empty &&
                rep.no_bm_obstruction;
  return rep;
}

}  // namespace logk3

#pragma once

// Cycle graphs and their dihedral symmetries.
//
// The cycle of length n has vertices 0..n-1 and edge i joining i and
// i+1 (mod n). For n = 2 the two vertices are joined by two parallel
// edges; the edge index i in {0, 1} is the multiplicity tag.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "logk3/numeric.hpp"

namespace logk3 {

struct CycleGraph {
  int n = 0;

  explicit CycleGraph(int n_) : n(n_) {
    if (n < 2) bad_input("CycleGraph needs at least 2 vertices");
  }

  int edge_count() const { return n; }

  bool adjacent(int u, int v) const {
    if (u == v) return false;
    int d = ((u - v) % n + n) % n;
    return d == 1 || d == n - 1;
  }
};

// An element of the dihedral group D_n acting on the n-cycle:
// v -> rot + v (rotation) or v -> rot - v (reflection), mod n.
struct DihedralElement {
  int rot = 0;
  bool refl = false;

  friend bool operator==(const DihedralElement&, const DihedralElement&) =
      default;
};

inline int norm_mod(int a, int n) { return ((a % n) + n) % n; }

inline DihedralElement make_rotation(int r, int n) {
  return {norm_mod(r, n), false};
}

inline DihedralElement make_reflection(int r, int n) {
  return {norm_mod(r, n), true};
}

inline int apply(const DihedralElement& g, int v, int n) {
  return g.refl ? norm_mod(g.rot - v, n) : norm_mod(g.rot + v, n);
}

// Image of edge e (joining e and e+1) under g. A reflection v -> r - v
// sends the edge midpoint e + 1/2 to r - e - 1/2, i.e. edge r - 1 - e.
inline int apply_edge(const DihedralElement& g, int e, int n) {
  return g.refl ? norm_mod(g.rot - 1 - e, n) : norm_mod(g.rot + e, n);
}

inline DihedralElement identity_element() { return {0, false}; }

inline bool is_identity(const DihedralElement& g) {
  return g.rot == 0 && !g.refl;
}

// Composition g∘h (h applied first).
inline DihedralElement compose(const DihedralElement& g,
                               const DihedralElement& h, int n) {
  DihedralElement out;
  out.refl = g.refl != h.refl;
  out.rot = g.refl ? norm_mod(g.rot - h.rot, n) : norm_mod(g.rot + h.rot, n);
  return out;
}

inline DihedralElement inverse(const DihedralElement& g, int n) {
  if (g.refl) return g;  // reflections are involutions
  return {norm_mod(-g.rot, n), false};
}

inline DihedralElement conjugate(const DihedralElement& h,
                                 const DihedralElement& g, int n) {
  return compose(h, compose(g, inverse(h, n), n), n);
}

// The sign character: +1 on rotations, -1 on reflections.
inline int sign_character(const DihedralElement& g) { return g.refl ? -1 : 1; }

// All 2n symmetries of the n-cycle.
inline std::vector<DihedralElement> all_dihedral_elements(int n) {
  std::vector<DihedralElement> out;
  out.reserve(2 * n);
  for (int r = 0; r < n; ++r) out.push_back({r, false});
  for (int r = 0; r < n; ++r) out.push_back({r, true});
  return out;
}

// Encoding that sorts rotations before reflections; used for canonical
// forms and as the element index of D_n viewed as an abstract group.
inline int encode(const DihedralElement& g, int n) {
  return (g.refl ? n : 0) + g.rot;
}

inline DihedralElement decode(int code, int n) {
  return {code % n, code >= n};
}

// Images of the abstract generators tau (rotation) and sigma
// (reflection) determined by an ordered pair of neighbouring vertices:
// tau is the rotation sending v0 to v1, sigma the reflection fixing v0.
struct DihedralGenerators {
  DihedralElement tau;
  DihedralElement sigma;
};

inline DihedralGenerators dihedral_iso_from_pair(int v0, int v1, int n) {
  if (norm_mod(v1 - v0, n) != 1 && norm_mod(v0 - v1, n) != 1)
    bad_input("dihedral_iso_from_pair: vertices are not neighbours");
  DihedralGenerators out;
  out.tau = make_rotation(v1 - v0, n);
  out.sigma = make_reflection(2 * v0, n);
  return out;
}

// The element tau^r sigma^b under the given generator images.
inline DihedralElement word(const DihedralGenerators& gen, int r, bool b,
                            int n) {
  DihedralElement out = identity_element();
  if (b) out = gen.sigma;
  for (int i = 0; i < norm_mod(r, n); ++i) out = compose(gen.tau, out, n);
  return out;
}

// Inverts the isomorphism determined by gen: finds (r, b) with
// tau^r sigma^b = g. The 2n words are exhausted.
inline std::pair<int, bool> word_of(const DihedralGenerators& gen,
                                    const DihedralElement& g, int n) {
  for (int b = 0; b < 2; ++b)
    for (int r = 0; r < n; ++r)
      if (word(gen, r, b != 0, n) == g) return {r, b != 0};
  fail("word_of: generators do not generate the element");
}

// Every adjacency-preserving vertex permutation of the n-cycle, found
// by filtering all n! permutations. Returns the permutations.
inline std::vector<std::vector<int>> cycle_automorphisms_brute_force(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CycleGraph cycle(n);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      ok = cycle.adjacent(perm[v], perm[norm_mod(v + 1, n)]);
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline std::vector<int> to_permutation(const DihedralElement& g, int n) {
  std::vector<int> perm(n);
  for (int v = 0; v < n; ++v) perm[v] = apply(g, v, n);
  return perm;
}

}  // namespace logk3

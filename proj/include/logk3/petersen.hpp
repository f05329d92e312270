#pragma once

// The Petersen graph in Kneser coordinates: vertices are the ten
// 2-element subsets of {1..5}, edges join disjoint subsets. This is the
// intersection graph of the (-1)-curves on a degree-5 del Pezzo
// surface, with S5 acting by relabeling.

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <vector>

#include "logk3/dihedral.hpp"
#include "logk3/numeric.hpp"

namespace logk3 {

using PetersenAut = std::array<int, 10>;  // vertex permutation
using FiveCycle = std::array<int, 5>;     // vertex list, cyclically closed

struct PetersenGraph {
  // 2-subsets in lexicographic order; vertex ids 0..9.
  std::array<std::pair<int, int>, 10> subsets;
  std::array<std::array<bool, 10>, 10> adj{};

  PetersenGraph() {
    int id = 0;
    for (int a = 1; a <= 5; ++a)
      for (int b = a + 1; b <= 5; ++b) subsets[id++] = {a, b};
    for (int u = 0; u < 10; ++u)
      for (int v = 0; v < 10; ++v) {
        auto [a, b] = subsets[u];
        auto [c, d] = subsets[v];
        adj[u][v] = a != c && a != d && b != c && b != d;
      }
  }

  bool adjacent(int u, int v) const { return adj[u][v]; }

  int vertex_of(std::pair<int, int> s) const {
    if (s.first > s.second) std::swap(s.first, s.second);
    for (int v = 0; v < 10; ++v)
      if (subsets[v] == s) return v;
    bad_input("not a 2-subset of {1..5}");
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < 10; ++u)
      for (int v = u + 1; v < 10; ++v)
        if (adj[u][v]) out.push_back({u, v});
    return out;
  }
};

inline const PetersenGraph& petersen() {
  static const PetersenGraph g;
  return g;
}

// Lexicographically least rotation/reflection of the vertex list.
inline FiveCycle canonical_cycle(FiveCycle c) {
  FiveCycle best = c;
  for (const auto& g : all_dihedral_elements(5)) {
    FiveCycle cand;
    for (int i = 0; i < 5; ++i) cand[apply(g, i, 5)] = c[i];
    best = std::min(best, cand);
  }
  return best;
}

inline bool is_five_cycle(const FiveCycle& c) {
  const auto& g = petersen();
  std::set<int> distinct(c.begin(), c.end());
  if (distinct.size() != 5) return false;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      bool consecutive = (j - i == 1) || (i == 0 && j == 4);
      if (g.adjacent(c[i], c[j]) != consecutive) return false;
    }
  return true;
}

// The twelve five-cycles of (-1)-curves, in canonical form.
inline std::vector<FiveCycle> enumerate_five_cycles() {
  const auto& g = petersen();
  std::set<FiveCycle> seen;
  std::vector<FiveCycle> out;
  FiveCycle c{};
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == 5) {
      if (!g.adjacent(c[4], c[0])) return;
      FiveCycle canon = canonical_cycle(c);
      if (is_five_cycle(canon) && seen.insert(canon).second)
        out.push_back(canon);
      return;
    }
    for (int v = 0; v < 10; ++v) {
      if (std::find(c.begin(), c.begin() + depth, v) != c.begin() + depth)
        continue;
      if (depth > 0 && !g.adjacent(c[depth - 1], v)) continue;
      c[depth] = v;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// The automorphism induced by a permutation of {1..5} (perm5[i] is the
// image of i+1).
inline PetersenAut aut_from_s5(const std::array<int, 5>& perm5) {
  const auto& g = petersen();
  PetersenAut out{};
  for (int v = 0; v < 10; ++v) {
    auto [a, b] = g.subsets[v];
    out[v] = g.vertex_of({perm5[a - 1], perm5[b - 1]});
  }
  return out;
}

inline bool is_petersen_automorphism(const PetersenAut& p) {
  const auto& g = petersen();
  for (int u = 0; u < 10; ++u)
    for (int v = 0; v < 10; ++v)
      if (g.adjacent(u, v) != g.adjacent(p[u], p[v])) return false;
  return true;
}

// The full automorphism group: the 120 relabelings of {1..5}.
inline std::vector<PetersenAut> automorphism_group() {
  std::array<int, 5> perm5{1, 2, 3, 4, 5};
  std::vector<PetersenAut> out;
  out.reserve(120);
  do {
    PetersenAut p = aut_from_s5(perm5);
    if (!is_petersen_automorphism(p)) fail("S5 image is not an automorphism");
    out.push_back(p);
  } while (std::next_permutation(perm5.begin(), perm5.end()));
  return out;
}

// Exhaustive filter over all 10! vertex permutations; certifies that
// the 120 relabelings above are the whole group.
inline std::vector<PetersenAut> automorphisms_brute_force() {
  const auto& g = petersen();
  auto edges = g.edges();
  std::array<int, 10> perm;
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<PetersenAut> out;
  do {
    bool ok = true;
    for (const auto& [u, v] : edges)
      if (!g.adj[perm[u]][perm[v]]) {
        ok = false;
        break;
      }
    if (ok) {
      PetersenAut p;
      std::copy(perm.begin(), perm.end(), p.begin());
      out.push_back(p);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline FiveCycle apply_aut(const PetersenAut& p, const FiveCycle& c) {
  FiveCycle out;
  for (int i = 0; i < 5; ++i) out[i] = p[c[i]];
  return out;
}

// Automorphisms mapping the cycle to itself (as a subgraph).
inline std::vector<PetersenAut> cycle_stabilizer(const FiveCycle& c) {
  if (!is_five_cycle(c)) bad_input("cycle_stabilizer: not a five-cycle");
  std::set<int> cset(c.begin(), c.end());
  std::vector<PetersenAut> out;
  for (const auto& p : automorphism_group()) {
    bool maps = true;
    for (int v : c) maps = maps && cset.count(p[v]) > 0;
    if (maps) out.push_back(p);
  }
  return out;
}

// Restriction of a cycle-stabilizing automorphism to the cycle, as a
// dihedral element in cycle positions.
inline DihedralElement restrict_to_cycle(const PetersenAut& p,
                                         const FiveCycle& c) {
  std::vector<int> pos_image(5, -1);
  for (int i = 0; i < 5; ++i) {
    int image = p[c[i]];
    for (int j = 0; j < 5; ++j)
      if (c[j] == image) pos_image[i] = j;
    if (pos_image[i] < 0) bad_input("automorphism does not stabilize the cycle");
  }
  int q0 = pos_image[0], q1 = pos_image[1];
  DihedralElement g = norm_mod(q1 - q0, 5) == 1 ? make_rotation(q0, 5)
                                                : make_reflection(q0, 5);
  for (int i = 0; i < 5; ++i)
    if (apply(g, i, 5) != pos_image[i]) fail("restriction is not dihedral");
  return g;
}

struct ComplementCycle {
  FiveCycle cycle;  // ordered so that c[i] meets cycle[2i mod 5]
};

// The five vertices outside c form a cycle; the returned ordering obeys
// the incidence law: vertex i of c is adjacent to vertex j of the
// complement iff j = 2i (mod 5).
inline ComplementCycle complement_cycle(const FiveCycle& c) {
  const auto& g = petersen();
  if (!is_five_cycle(c)) bad_input("complement_cycle: not a five-cycle");
  std::set<int> cset(c.begin(), c.end());
  // w[i]: the unique neighbour of c[i] outside the cycle.
  std::array<int, 5> w{};
  for (int i = 0; i < 5; ++i) {
    int found = -1;
    for (int v = 0; v < 10; ++v)
      if (!cset.count(v) && g.adjacent(c[i], v)) {
        if (found >= 0) fail("cycle vertex has two outside neighbours");
        found = v;
      }
    if (found < 0) fail("cycle vertex has no outside neighbour");
    w[i] = found;
  }
  // Position j of the complement carries w[3j] since 2*3 = 1 (mod 5).
  ComplementCycle out;
  for (int j = 0; j < 5; ++j) out.cycle[j] = w[(3 * j) % 5];
  if (!is_five_cycle(out.cycle)) fail("complement is not a five-cycle");
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (g.adjacent(c[i], out.cycle[j]) != (j == (2 * i) % 5))
        fail("complement ordering violates the incidence law");
  return out;
}

// The unique automorphism restricting to the dihedral identification
// phi between two five-cycles: position i of c1 maps to position
// phi(i) of c2, and outside neighbours follow.
inline PetersenAut extend_cycle_iso_to_graph(const FiveCycle& c1,
                                             const FiveCycle& c2,
                                             const DihedralElement& phi) {
  const auto& g = petersen();
  if (!is_five_cycle(c1) || !is_five_cycle(c2))
    bad_input("extend_cycle_iso_to_graph: not five-cycles");
  std::set<int> s1(c1.begin(), c1.end()), s2(c2.begin(), c2.end());
  auto outside_neighbour = [&](int v, const std::set<int>& cset) {
    for (int u = 0; u < 10; ++u)
      if (!cset.count(u) && g.adjacent(v, u)) return u;
    fail("no outside neighbour");
  };
  PetersenAut p{};
  p.fill(-1);
  for (int i = 0; i < 5; ++i) {
    int j = apply(phi, i, 5);
    p[c1[i]] = c2[j];
    p[outside_neighbour(c1[i], s1)] = outside_neighbour(c2[j], s2);
  }
  for (int v = 0; v < 10; ++v)
    if (p[v] < 0) fail("extension does not cover the graph");
  if (!is_petersen_automorphism(p)) fail("extension is not an automorphism");
  return p;
}

struct PetersenReport {
  int five_cycles = 0;
  int aut_order = 0;
  int stabilizer_order = 0;
  bool incidence_law_verified = false;
};

inline PetersenReport petersen_report() {
  PetersenReport r;
  auto cycles = enumerate_five_cycles();
  r.five_cycles = static_cast<int>(cycles.size());
  r.aut_order = static_cast<int>(automorphism_group().size());
  r.stabilizer_order = static_cast<int>(cycle_stabilizer(cycles.front()).size());
  r.incidence_law_verified = true;
  for (const auto& c : cycles) complement_cycle(c);  // throws on violation
  return r;
}

}  // namespace logk3

#pragma once

// The corner blow-up / blow-down rewriting calculus and the reduction
// of an admissible structure to degree 5.
//
// A blow-up inserts a new (-1)-vertex on each edge of a Galois-stable
// edge orbit and decrements each endpoint once per incident blown edge.
// A blow-down removes a stable orbit of pairwise non-adjacent
// (-1)-vertices and increments the two neighbours of each.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "logk3/structure.hpp"

namespace logk3 {

struct RewriteStep {
  enum class Op { BlowUp, BlowDown };
  Op op;
  std::vector<int> orbit;  // edge indices (BlowUp) or vertex indices (BlowDown)
  SelfIntersectionSeq result_seq;
};

using RewriteTrace = std::vector<RewriteStep>;

namespace detail {

// Recover (rot, refl) data from a vertex position map together with the
// image of edge 0. The edge image matters: on a 2-cycle the identity
// and the reflection through both vertices induce the same vertex map
// but swap the parallel edges differently.
inline DihedralElement element_from_positions(const std::vector<int>& pos_image,
                                              int edge0_image, int n) {
  for (bool refl : {false, true}) {
    // either candidate sends vertex 0 to pos_image[0]
    DihedralElement g{norm_mod(pos_image[0], n), refl};
    bool ok = apply_edge(g, 0, n) == edge0_image;
    for (int v = 0; v < n && ok; ++v) ok = apply(g, v, n) == pos_image[v];
    if (ok) return g;
  }
  fail("position map is not a cycle automorphism");
}

}  // namespace detail

inline bool edge_orbit_stable(const LogK3Structure& s,
                              const std::set<int>& orbit) {
  int n = s.cycle_size();
  for (int g = 0; g < s.action.group.order; ++g)
    for (int e : orbit)
      if (!orbit.count(apply_edge(s.action.images[g], e, n))) return false;
  return true;
}

inline bool vertex_orbit_stable(const LogK3Structure& s,
                                const std::set<int>& orbit) {
  int n = s.cycle_size();
  for (int g = 0; g < s.action.group.order; ++g)
    for (int v : orbit)
      if (!orbit.count(apply(s.action.images[g], v, n))) return false;
  return true;
}

inline LogK3Structure corner_blow_up(const LogK3Structure& s,
                                     const std::vector<int>& edge_orbit) {
  require_valid_structure(s);
  int n = s.cycle_size();
  std::set<int> orbit(edge_orbit.begin(), edge_orbit.end());
  if (orbit.empty()) bad_input("corner_blow_up: empty edge orbit");
  for (int e : orbit)
    if (e < 0 || e >= n) bad_input("corner_blow_up: edge index out of range");
  if (!edge_orbit_stable(s, orbit))
    bad_input("corner_blow_up: edge orbit is not stable under the action");

  int k = static_cast<int>(orbit.size());
  int new_n = n + k;

  // Walk the old cycle; after vertex i insert the new vertex of edge i.
  std::vector<int> vertex_pos(n), edge_pos(n, -1);
  SelfIntersectionSeq seq;
  seq.reserve(new_n);
  for (int i = 0; i < n; ++i) {
    vertex_pos[i] = static_cast<int>(seq.size());
    int dec = static_cast<int>(orbit.count(i)) +
              static_cast<int>(orbit.count(norm_mod(i - 1, n)));
    seq.push_back(s.seq[i] - dec);
    if (orbit.count(i)) {
      edge_pos[i] = static_cast<int>(seq.size());
      seq.push_back(-1);
    }
  }

  LogK3Structure out;
  out.degree = s.degree - k;
  out.seq = std::move(seq);
  out.ample = s.ample;
  if (s.ample) {
    if (out.degree < 1) bad_input("corner_blow_up: degree underflow for ample structure");
    for (int a : out.seq)
      if (a < -1)
        bad_input("corner_blow_up: entry below -1; blown edge touches a (-1)-vertex");
  }

  // Extend the action: old vertices map as before, the new vertex on
  // edge e follows e. The result cycle has size >= 3, so the vertex map
  // already determines the element; the edge image is derived from the
  // images of positions 0 and 1.
  out.action.n = new_n;
  out.action.group = s.action.group;
  out.action.images.reserve(s.action.images.size());
  for (const auto& g : s.action.images) {
    std::vector<int> pos_image(new_n, -1);
    for (int v = 0; v < n; ++v)
      pos_image[vertex_pos[v]] = vertex_pos[apply(g, v, n)];
    for (int e : orbit)
      pos_image[edge_pos[e]] = edge_pos[apply_edge(g, e, n)];
    int edge0_image = pos_image[1] == norm_mod(pos_image[0] + 1, new_n)
                          ? pos_image[0]
                          : pos_image[1];
    out.action.images.push_back(
        detail::element_from_positions(pos_image, edge0_image, new_n));
  }
  require_valid_structure(out);
  return out;
}

inline LogK3Structure corner_blow_down(const LogK3Structure& s,
                                       const std::vector<int>& vertex_orbit) {
  require_valid_structure(s);
  int n = s.cycle_size();
  if (n < 3) bad_input("corner_blow_down: needs a cycle of size >= 3");
  std::set<int> orbit(vertex_orbit.begin(), vertex_orbit.end());
  if (orbit.empty()) bad_input("corner_blow_down: empty vertex orbit");
  for (int v : orbit) {
    if (v < 0 || v >= n) bad_input("corner_blow_down: vertex index out of range");
    if (s.seq[v] != -1)
      bad_input("corner_blow_down: only (-1)-vertices can be blown down");
    if (orbit.count(norm_mod(v + 1, n)))
      bad_input("corner_blow_down: orbit contains adjacent vertices");
  }
  if (!vertex_orbit_stable(s, orbit))
    bad_input("corner_blow_down: vertex orbit is not stable under the action");

  int k = static_cast<int>(orbit.size());
  int new_n = n - k;

  std::vector<int> vertex_pos(n, -1);
  std::vector<int> survivors;
  SelfIntersectionSeq seq;
  seq.reserve(new_n);
  for (int i = 0; i < n; ++i) {
    if (orbit.count(i)) continue;
    vertex_pos[i] = static_cast<int>(seq.size());
    survivors.push_back(i);
    int inc = static_cast<int>(orbit.count(norm_mod(i - 1, n))) +
              static_cast<int>(orbit.count(norm_mod(i + 1, n)));
    seq.push_back(s.seq[i] + inc);
  }

  // Provenance of the new edges: edge j joins survivors j and j+1 and
  // comes either from the old edge between them or from the removed
  // vertex between them. Needed to reconstruct reflections faithfully
  // when the result is a 2-cycle.
  std::vector<int> new_edge_of_old_edge(n, -1), new_edge_of_removed(n, -1);
  for (int j = 0; j < new_n; ++j) {
    int u = survivors[j];
    int w = survivors[(j + 1) % new_n];
    if (norm_mod(w - u, n) == 1) {
      new_edge_of_old_edge[u] = j;
    } else {
      new_edge_of_removed[norm_mod(u + 1, n)] = j;
    }
  }

  LogK3Structure out;
  out.degree = s.degree + k;
  out.seq = std::move(seq);
  out.ample = s.ample;
  out.action.n = new_n;
  out.action.group = s.action.group;
  for (const auto& g : s.action.images) {
    std::vector<int> pos_image(new_n, -1);
    for (int v = 0; v < n; ++v)
      if (vertex_pos[v] >= 0) pos_image[vertex_pos[v]] = vertex_pos[apply(g, v, n)];
    int u0 = survivors[0];
    int w0 = survivors[1 % new_n];
    int edge0_image;
    if (norm_mod(w0 - u0, n) == 1) {
      edge0_image = new_edge_of_old_edge[apply_edge(g, u0, n)];
    } else {
      edge0_image = new_edge_of_removed[apply(g, norm_mod(u0 + 1, n), n)];
    }
    if (edge0_image < 0) fail("corner_blow_down: broken edge provenance");
    out.action.images.push_back(
        detail::element_from_positions(pos_image, edge0_image, new_n));
  }
  require_valid_structure(out);
  return out;
}

// --- reduction to degree 5 ----------------------------------------------

namespace detail {

// Edges incident to vertex v on an n-cycle: edge v-1 and edge v.
inline std::vector<int> incident_edges(int v, int n) {
  return {norm_mod(v - 1, n), v};
}

inline std::optional<int> unique_vertex_with_entry(const LogK3Structure& s,
                                                   int entry) {
  std::optional<int> found;
  for (int v = 0; v < s.cycle_size(); ++v)
    if (s.seq[v] == entry) {
      if (found) return std::nullopt;
      found = v;
    }
  return found;
}

}  // namespace detail

// One reduction step of the admissible case analysis; returns the
// rewrite applied. Structures of degree 5 are fixed points.
inline std::optional<RewriteStep> reduction_step(const LogK3Structure& s) {
  int n = s.cycle_size();
  if (s.degree == 5) return std::nullopt;
  RewriteStep step;
  if (s.degree == 8) {
    // (3,1): blow up both intersection points.
    step.op = RewriteStep::Op::BlowUp;
    step.orbit = {0, 1};
    return step;
  }
  if (s.degree == 7) {
    bool has_minus_one =
        std::find(s.seq.begin(), s.seq.end(), -1) != s.seq.end();
    if (!has_minus_one) {
      // (0,0,1): blow up the stable pair of points on the 1-vertex.
      auto v = detail::unique_vertex_with_entry(s, 1);
      if (!v) bad_input("reduction_step: inadmissible degree-7 sequence");
      step.op = RewriteStep::Op::BlowUp;
      step.orbit = detail::incident_edges(*v, n);
      return step;
    }
    // (-1,0,2): blow up the fixed point not on the (-1)-curve.
    for (int e = 0; e < n; ++e) {
      int u = e, v = norm_mod(e + 1, n);
      if (s.seq[u] != -1 && s.seq[v] != -1) {
        step.op = RewriteStep::Op::BlowUp;
        step.orbit = {e};
        return step;
      }
    }
    bad_input("reduction_step: inadmissible degree-7 sequence");
  }
  if (s.degree == 6) {
    int count_minus_one =
        static_cast<int>(std::count(s.seq.begin(), s.seq.end(), -1));
    if (count_minus_one == 2) {
      // (-1,-1,0,0): blow up the intersection point of the two 0-curves.
      for (int e = 0; e < n; ++e) {
        int u = e, v = norm_mod(e + 1, n);
        if (s.seq[u] == 0 && s.seq[v] == 0) {
          step.op = RewriteStep::Op::BlowUp;
          step.orbit = {e};
          return step;
        }
      }
    } else if (count_minus_one == 3) {
      // (-1,-1,-1,1): blow down the (-1)-curve meeting two others.
      for (int v = 0; v < n; ++v)
        if (s.seq[v] == -1 && s.seq[norm_mod(v - 1, n)] == -1 &&
            s.seq[norm_mod(v + 1, n)] == -1) {
          step.op = RewriteStep::Op::BlowDown;
          step.orbit = {v};
          return step;
        }
    }
    bad_input("reduction_step: inadmissible degree-6 sequence");
  }
  bad_input("reduction_step: degree outside the admissible range [5, 8]");
}

struct ReductionResult {
  LogK3Structure structure;
  RewriteTrace trace;
};

// Rewrites an admissible ample structure down to degree 5 and the
// all-(-1) sequence, following the bounded case analysis above.
inline ReductionResult reduce_to_degree5(const LogK3Structure& s) {
  require_valid_structure(s);
  if (!s.ample) bad_input("reduce_to_degree5: structure must be ample");
  if (!is_admissible_sequence(s.degree, s.seq))
    bad_input("reduce_to_degree5: sequence is not admissible for its degree");

  ReductionResult res{s, {}};
  while (auto step = reduction_step(res.structure)) {
    if (step->op == RewriteStep::Op::BlowUp) {
      std::set<int> orbit(step->orbit.begin(), step->orbit.end());
      if (!edge_orbit_stable(res.structure, orbit))
        bad_input(
            "reduce_to_degree5: the required edge orbit is not stable under "
            "the given action; the action datum is not realizable");
      res.structure = corner_blow_up(res.structure, step->orbit);
    } else {
      std::set<int> orbit(step->orbit.begin(), step->orbit.end());
      if (!vertex_orbit_stable(res.structure, orbit))
        bad_input(
            "reduce_to_degree5: the required vertex orbit is not stable under "
            "the given action; the action datum is not realizable");
      res.structure = corner_blow_down(res.structure, step->orbit);
    }
    step->result_seq = res.structure.seq;
    res.trace.push_back(*step);
    if (res.trace.size() > 8) fail("reduce_to_degree5: rewrite did not terminate");
  }
  return res;
}

// --- legal-orbit enumeration (used by property tests and the CLI) -------

// All nonempty action-stable edge sets whose blow-up keeps the
// structure ample.
inline std::vector<std::vector<int>> legal_blow_up_orbits(
    const LogK3Structure& s) {
  int n = s.cycle_size();
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::set<int> orbit;
    for (int e = 0; e < n; ++e)
      if (mask & (1u << e)) orbit.insert(e);
    if (!edge_orbit_stable(s, orbit)) continue;
    if (s.ample) {
      if (s.degree - static_cast<int>(orbit.size()) < 1) continue;
      bool ok = true;
      for (int v = 0; v < n && ok; ++v) {
        int dec = static_cast<int>(orbit.count(v)) +
                  static_cast<int>(orbit.count(norm_mod(v - 1, n)));
        ok = s.seq[v] - dec >= -1;
      }
      if (!ok) continue;
    }
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

// All nonempty action-stable sets of pairwise non-adjacent (-1)-vertices.
inline std::vector<std::vector<int>> legal_blow_down_orbits(
    const LogK3Structure& s) {
  int n = s.cycle_size();
  std::vector<std::vector<int>> out;
  if (n < 3) return out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::set<int> orbit;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if (mask & (1u << v)) {
        orbit.insert(v);
        ok = s.seq[v] == -1;
      }
    if (!ok) continue;
    for (int v : orbit)
      if (orbit.count(norm_mod(v + 1, n))) ok = false;
    if (!ok || !vertex_orbit_stable(s, orbit)) continue;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

}  // namespace logk3

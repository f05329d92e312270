#pragma once

// Log K3 structures at the combinatorial level: a degree, a
// self-intersection sequence around the boundary cycle, and a finite
// group acting by dihedral symmetries.

#include <string>
#include <vector>

#include "logk3/cycle_action.hpp"
#include "logk3/sequence.hpp"

namespace logk3 {

struct LogK3Structure {
  int degree = 0;
  SelfIntersectionSeq seq;
  CycleAction action;
  bool ample = true;

  int cycle_size() const { return static_cast<int>(seq.size()); }
};

// Degree d and cycle length n are tied by n = 10 - d.
inline bool sum_invariant_check(const LogK3Structure& s) {
  return static_cast<int>(s.seq.size()) == 10 - s.degree &&
         sequence_sum(s.seq) == 3 * s.degree - 20;
}

inline std::string structure_violation(const LogK3Structure& s) {
  int n = s.cycle_size();
  if (n < 2) return "boundary cycle needs at least 2 components";
  if (n != 10 - s.degree) return "cycle length must equal 10 - degree";
  if (s.ample && (s.degree < 1 || s.degree > 8))
    return "ample structures have degree in [1, 8]";
  if (sequence_sum(s.seq) != 3 * s.degree - 20)
    return "entries must sum to 3*degree - 20";
  if (s.ample)
    for (int a : s.seq)
      if (a < -1) return "ample structures have entries >= -1";
  if (s.action.n != n) return "action lives on a cycle of the wrong size";
  std::string why = action_violation(s.action);
  if (!why.empty()) return why;
  for (int g = 0; g < s.action.group.order; ++g)
    for (int v = 0; v < n; ++v)
      if (s.seq[apply(s.action.images[g], v, n)] != s.seq[v])
        return "action does not preserve the self-intersection sequence";
  return {};
}

inline bool validate_structure(const LogK3Structure& s) {
  return structure_violation(s).empty();
}

inline void require_valid_structure(const LogK3Structure& s) {
  std::string why = structure_violation(s);
  if (!why.empty()) bad_input("invalid log K3 structure: " + why);
}

inline LogK3Structure make_structure(int degree, SelfIntersectionSeq seq,
                                     CycleAction action, bool ample = true) {
  LogK3Structure s;
  s.degree = degree;
  s.seq = std::move(seq);
  s.action = std::move(action);
  s.ample = ample;
  require_valid_structure(s);
  return s;
}

inline LogK3Structure make_structure(int degree, SelfIntersectionSeq seq,
                                     bool ample = true) {
  int n = static_cast<int>(seq.size());
  return make_structure(degree, std::move(seq), trivial_action(n), ample);
}

}  // namespace logk3

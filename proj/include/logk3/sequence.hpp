#pragma once

// Self-intersection sequences around a boundary cycle, their
// intersection matrices, and the admissibility filter (entries >= -1,
// anticanonical degree sum, unimodular intersection matrix).

#include <algorithm>
#include <set>
#include <vector>

#include "logk3/dihedral.hpp"
#include "logk3/numeric.hpp"

namespace logk3 {

using SelfIntersectionSeq = std::vector<int>;

// Lexicographically least among all rotations and reflections. Two
// sequences describe the same cyclically-ordered data iff their
// canonical forms agree.
inline SelfIntersectionSeq canonical_sequence(const SelfIntersectionSeq& s) {
  int n = static_cast<int>(s.size());
  SelfIntersectionSeq best = s;
  for (const auto& g : all_dihedral_elements(n)) {
    SelfIntersectionSeq cand(n);
    for (int i = 0; i < n; ++i) cand[apply(g, i, n)] = s[i];
    best = std::min(best, cand);
  }
  return best;
}

inline bool dihedral_equivalent(const SelfIntersectionSeq& a,
                                const SelfIntersectionSeq& b) {
  return a.size() == b.size() && canonical_sequence(a) == canonical_sequence(b);
}

// n x n matrix with diagonal a_i and off-diagonal the number of shared
// edges on the cycle (1 for neighbours, 2 when n = 2).
inline std::vector<std::vector<Int>> intersection_matrix(
    const SelfIntersectionSeq& s) {
  int n = static_cast<int>(s.size());
  if (n < 2) bad_input("intersection_matrix needs a cycle of size >= 2");
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = s[i];
  if (n == 2) {
    m[0][1] = m[1][0] = 2;
  } else {
    for (int i = 0; i < n; ++i) {
      int j = (i + 1) % n;
      m[i][j] = m[j][i] = 1;
    }
  }
  return m;
}

// Exact determinant by fraction-free (Bareiss) elimination.
inline Int determinant(std::vector<std::vector<Int>> m) {
  int n = static_cast<int>(m.size());
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Whether the boundary components span the Picard lattice, detected by
// |det| = 1 of the intersection matrix.
inline bool unimodular_check(const SelfIntersectionSeq& s) {
  Int d = determinant(intersection_matrix(s));
  return d == 1 || d == -1;
}

inline Int sequence_sum(const SelfIntersectionSeq& s) {
  Int sum = 0;
  for (int a : s) sum += a;
  return sum;
}

// All sequences of length 10-d with entries >= -1, sum 3d-20 and
// unimodular intersection matrix, up to dihedral equivalence.
inline std::vector<SelfIntersectionSeq> enumerate_admissible(int d) {
  if (d < 5 || d > 8) bad_input("enumerate_admissible: degree must be in [5, 8]");
  int n = 10 - d;
  int target = 3 * d - 20;
  int hi = target + (n - 1);  // others at their minimum -1
  std::set<SelfIntersectionSeq> seen;
  std::vector<SelfIntersectionSeq> out;
  SelfIntersectionSeq cur(n, -1);
  auto rec = [&](auto&& self, int pos, int sum) -> void {
    if (pos == n) {
      if (sum != target || !unimodular_check(cur)) return;
      SelfIntersectionSeq canon = canonical_sequence(cur);
      if (seen.insert(canon).second) out.push_back(canon);
      return;
    }
    int remaining = n - pos - 1;
    for (int a = -1; a <= hi; ++a) {
      if (sum + a + (-1) * remaining > target) break;
      if (sum + a + hi * remaining < target) continue;
      cur[pos] = a;
      self(self, pos + 1, sum + a);
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_admissible_sequence(int degree, const SelfIntersectionSeq& s) {
  if (degree < 5 || degree > 8) return false;
  auto table = enumerate_admissible(degree);
  SelfIntersectionSeq canon = canonical_sequence(s);
  return std::find(table.begin(), table.end(), canon) != table.end();
}

}  // namespace logk3

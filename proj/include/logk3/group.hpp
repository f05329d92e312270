#pragma once

// Finite groups as explicit multiplication tables. A table is enough at
// the scale this library works at: identities, inverses, associativity
// and homomorphism searches are all brute-forced.

#include <functional>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "logk3/dihedral.hpp"
#include "logk3/numeric.hpp"

namespace logk3 {

struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> table;  // table[g][h] = g*h
  std::vector<int> generators;
  std::string name;  // optional display name

  int mul(int g, int h) const { return table[g][h]; }
};

// Returns an empty string when the table is a group and the generators
// generate it, otherwise a description of the first violation.
inline std::string group_violation(const FiniteGroup& g) {
  int n = g.order;
  if (n <= 0) return "order must be positive";
  if (static_cast<int>(g.table.size()) != n) return "table has wrong height";
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(g.table[a].size()) != n) return "table row has wrong width";
    for (int b = 0; b < n; ++b)
      if (g.table[a][b] < 0 || g.table[a][b] >= n)
        return "table entry out of range";
  }
  // identity
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b)
      ok = g.table[a][b] == b && g.table[b][a] == b;
    if (ok) e = a;
  }
  if (e < 0) return "no identity element";
  // inverses
  for (int a = 0; a < n; ++a) {
    bool has = false;
    for (int b = 0; b < n && !has; ++b)
      has = g.table[a][b] == e && g.table[b][a] == e;
    if (!has) return "element " + std::to_string(a) + " has no inverse";
  }
  // associativity
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
          return "associativity fails at (" + std::to_string(a) + "," +
                 std::to_string(b) + "," + std::to_string(c) + ")";
  // generators generate
  for (int s : g.generators)
    if (s < 0 || s >= n) return "generator index out of range";
  std::vector<bool> seen(n, false);
  seen[e] = true;
  std::queue<int> todo;
  todo.push(e);
  while (!todo.empty()) {
    int a = todo.front();
    todo.pop();
    for (int s : g.generators) {
      int b = g.table[a][s];
      if (!seen[b]) {
        seen[b] = true;
        todo.push(b);
      }
    }
  }
  for (int a = 0; a < n; ++a)
    if (!seen[a]) return "generators do not generate element " + std::to_string(a);
  return {};
}

inline bool is_valid_group(const FiniteGroup& g) {
  return group_violation(g).empty();
}

inline void require_valid_group(const FiniteGroup& g) {
  std::string why = group_violation(g);
  if (!why.empty()) bad_input("invalid group data: " + why);
}

inline int group_identity(const FiniteGroup& g) {
  for (int a = 0; a < g.order; ++a)
    if (g.table[a][0] == 0) {
      bool ok = true;
      for (int b = 0; b < g.order && ok; ++b)
        ok = g.table[a][b] == b && g.table[b][a] == b;
      if (ok) return a;
    }
  fail("group has no identity");
}

inline int group_inverse(const FiniteGroup& g, int a) {
  int e = group_identity(g);
  for (int b = 0; b < g.order; ++b)
    if (g.table[a][b] == e) return b;
  fail("group element has no inverse");
}

// --- small-group constructors ------------------------------------------

inline FiniteGroup trivial_group() {
  return {1, {{0}}, {0}, "C1"};
}

inline FiniteGroup cyclic_group(int n) {
  if (n < 1) bad_input("cyclic_group: order must be >= 1");
  FiniteGroup g;
  g.order = n;
  g.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  g.generators = {n == 1 ? 0 : 1};
  g.name = "C" + std::to_string(n);
  return g;
}

// Dihedral group of order 2k, elements encoded as in dihedral.hpp.
inline FiniteGroup dihedral_group(int k) {
  if (k < 1) bad_input("dihedral_group: k must be >= 1");
  FiniteGroup g;
  g.order = 2 * k;
  g.table.assign(2 * k, std::vector<int>(2 * k));
  for (int a = 0; a < 2 * k; ++a)
    for (int b = 0; b < 2 * k; ++b)
      g.table[a][b] = encode(compose(decode(a, k), decode(b, k), k), k);
  g.generators = {1 % (2 * k), k};  // rotation by 1 and a reflection
  if (k == 1) g.generators = {1};
  g.name = "D" + std::to_string(k);
  return g;
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  g.order = a.order * b.order;
  g.table.assign(g.order, std::vector<int>(g.order));
  auto idx = [&](int x, int y) { return x * b.order + y; };
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          g.table[idx(x1, y1)][idx(x2, y2)] =
              idx(a.table[x1][x2], b.table[y1][y2]);
  int ea = group_identity(a), eb = group_identity(b);
  for (int s : a.generators) g.generators.push_back(idx(s, eb));
  for (int s : b.generators) g.generators.push_back(idx(ea, s));
  g.name = a.name + "x" + b.name;
  return g;
}

// Quaternion group of order 8: elements 1,-1,i,-i,j,-j,k,-k.
inline FiniteGroup quaternion_group() {
  // encode: sign bit (0:+,1:-) * 4 + basis (0:1, 1:i, 2:j, 3:k)
  auto mul_basis = [](int a, int b, int& sign) -> int {
    // multiplication table of {1,i,j,k} with sign tracking
    static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    sign *= sgn[a][b];
    return prod[a][b];
  };
  FiniteGroup g;
  g.order = 8;
  g.table.assign(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int sign = (a >= 4 ? -1 : 1) * (b >= 4 ? -1 : 1);
      int basis = mul_basis(a % 4, b % 4, sign);
      g.table[a][b] = (sign < 0 ? 4 : 0) + basis;
    }
  g.generators = {1, 2};  // i and j
  g.name = "Q8";
  return g;
}

// All isomorphism types of groups of order <= 10.
inline std::vector<FiniteGroup> groups_up_to_order_10() {
  std::vector<FiniteGroup> out;
  for (int n = 1; n <= 10; ++n) out.push_back(cyclic_group(n));
  out.push_back(direct_product(cyclic_group(2), cyclic_group(2)));   // V4
  out.push_back(dihedral_group(3));                                  // S3
  out.push_back(direct_product(cyclic_group(4), cyclic_group(2)));
  out.push_back(direct_product(
      direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2)));
  out.push_back(dihedral_group(4));
  out.push_back(quaternion_group());
  out.push_back(direct_product(cyclic_group(3), cyclic_group(3)));
  out.push_back(dihedral_group(5));
  return out;
}

// Parses names like "Z5"/"C5", "D4" (order 8), "Q8", "Z2xZ2".
inline FiniteGroup group_by_name(const std::string& name) {
  auto parse_atom = [](const std::string& s) -> FiniteGroup {
    if (s == "Q8") return quaternion_group();
    if (s.size() >= 2 && (s[0] == 'Z' || s[0] == 'C'))
      return cyclic_group(std::stoi(s.substr(1)));
    if (s.size() >= 2 && s[0] == 'D') return dihedral_group(std::stoi(s.substr(1)));
    if (s == "S3") return dihedral_group(3);
    bad_input("unknown group name: '" + s + "'");
  };
  std::vector<FiniteGroup> parts;
  size_t start = 0;
  while (start < name.size()) {
    size_t x = name.find('x', start);
    if (x == std::string::npos) x = name.size();
    parts.push_back(parse_atom(name.substr(start, x - start)));
    start = x + 1;
  }
  if (parts.empty()) bad_input("empty group name");
  FiniteGroup g = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) g = direct_product(g, parts[i]);
  return g;
}

// All homomorphisms from g into a finite target given by its size and
// composition law, found by assigning generator images and propagating.
// Each result maps element index -> target element index.
inline std::vector<std::vector<int>> enumerate_homomorphisms(
    const FiniteGroup& g, int target_size,
    const std::function<int(int, int)>& target_mul, int target_identity) {
  require_valid_group(g);
  int e = group_identity(g);
  int ngen = static_cast<int>(g.generators.size());
  std::vector<std::vector<int>> out;
  std::vector<int> choice(ngen, 0);
  while (true) {
    // propagate generator images through the Cayley graph
    std::vector<int> img(g.order, -1);
    img[e] = target_identity;
    std::queue<int> todo;
    todo.push(e);
    bool consistent = true;
    while (!todo.empty() && consistent) {
      int a = todo.front();
      todo.pop();
      for (int i = 0; i < ngen; ++i) {
        int b = g.table[a][g.generators[i]];
        int want = target_mul(img[a], choice[i]);
        if (img[b] < 0) {
          img[b] = want;
          todo.push(b);
        } else if (img[b] != want) {
          consistent = false;
          break;
        }
      }
    }
    if (consistent) {
      for (int a = 0; a < g.order && consistent; ++a)
        for (int b = 0; b < g.order && consistent; ++b)
          consistent = img[g.table[a][b]] == target_mul(img[a], img[b]);
      if (consistent) out.push_back(img);
    }
    // next assignment
    int i = 0;
    for (; i < ngen; ++i) {
      if (++choice[i] < target_size) break;
      choice[i] = 0;
    }
    if (i == ngen) break;
  }
  return out;
}

}  // namespace logk3

#pragma once

// Actions of finite groups on cycle graphs by dihedral symmetries.

#include <string>
#include <vector>

#include "logk3/dihedral.hpp"
#include "logk3/group.hpp"

namespace logk3 {

struct CycleAction {
  int n = 0;  // cycle size
  FiniteGroup group;
  std::vector<DihedralElement> images;  // indexed by group element

  const DihedralElement& image(int g) const { return images[g]; }
};

inline CycleAction trivial_action(int n, FiniteGroup group = trivial_group()) {
  CycleAction a;
  a.n = n;
  a.images.assign(group.order, identity_element());
  a.group = std::move(group);
  return a;
}

// Returns an empty string when the images define a homomorphism into
// the symmetries of the n-cycle, else the first violated relation.
inline std::string action_violation(const CycleAction& a) {
  if (a.n < 2) return "cycle size must be >= 2";
  std::string why = group_violation(a.group);
  if (!why.empty()) return "group: " + why;
  if (static_cast<int>(a.images.size()) != a.group.order)
    return "images must list one dihedral element per group element";
  for (const auto& g : a.images)
    if (g.rot < 0 || g.rot >= a.n) return "rotation index out of range";
  int e = group_identity(a.group);
  if (!is_identity(a.images[e])) return "identity must act trivially";
  for (int g = 0; g < a.group.order; ++g)
    for (int h = 0; h < a.group.order; ++h) {
      DihedralElement lhs = a.images[a.group.mul(g, h)];
      DihedralElement rhs = compose(a.images[g], a.images[h], a.n);
      if (!(lhs == rhs))
        return "images violate the relation at pair (" + std::to_string(g) +
               "," + std::to_string(h) + ")";
    }
  return {};
}

inline bool validate_action(const CycleAction& a) {
  return action_violation(a).empty();
}

inline void require_valid_action(const CycleAction& a) {
  std::string why = action_violation(a);
  if (!why.empty()) bad_input("invalid cycle action: " + why);
}

// The action obtained by relabeling the cycle with h, i.e. g -> h g h^-1.
inline CycleAction relabel(const CycleAction& a, const DihedralElement& h) {
  CycleAction out = a;
  for (auto& g : out.images) g = conjugate(h, g, a.n);
  return out;
}

// Whether two actions of the same group differ by a dihedral relabeling.
inline bool conjugate_actions(const CycleAction& a, const CycleAction& b) {
  if (a.n != b.n || a.group.order != b.group.order) return false;
  for (const auto& h : all_dihedral_elements(a.n)) {
    bool ok = true;
    for (int g = 0; g < a.group.order && ok; ++g)
      ok = conjugate(h, a.images[g], a.n) == b.images[g];
    if (ok) return true;
  }
  return false;
}

}  // namespace logk3

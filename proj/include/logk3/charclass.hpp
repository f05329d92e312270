#pragma once

// Characteristic classes: conjugacy classes of homomorphisms from a
// finite group into the symmetries of the 5-cycle, the H^1 enumeration
// at finite level, the sign pushforward, and the explicit affine models
// attached to trivial and quadratic classes.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "logk3/cycle_action.hpp"
#include "logk3/numeric.hpp"

namespace logk3 {

// A homomorphism G -> D5 up to conjugation in D5, stored by its
// canonical representative (the conjugate with lexicographically least
// encoded image tuple).
struct CocycleClass {
  FiniteGroup group;
  std::vector<DihedralElement> rep;

  friend bool operator==(const CocycleClass& a, const CocycleClass& b) {
    return a.group.order == b.group.order && a.rep == b.rep;
  }
};

namespace detail {

inline std::vector<int> encode_tuple(const std::vector<DihedralElement>& images,
                                     int n) {
  std::vector<int> out(images.size());
  for (size_t i = 0; i < images.size(); ++i) out[i] = encode(images[i], n);
  return out;
}

}  // namespace detail

// Canonical conjugate of an image tuple under the 10 inner twists.
inline std::vector<DihedralElement> canonical_rep(
    const std::vector<DihedralElement>& images, int n) {
  std::vector<DihedralElement> best = images;
  std::vector<int> best_code = detail::encode_tuple(best, n);
  for (const auto& h : all_dihedral_elements(n)) {
    std::vector<DihedralElement> cand(images.size());
    for (size_t i = 0; i < images.size(); ++i)
      cand[i] = conjugate(h, images[i], n);
    std::vector<int> code = detail::encode_tuple(cand, n);
    if (code < best_code) {
      best_code = std::move(code);
      best = std::move(cand);
    }
  }
  return best;
}

// The characteristic class of an action on the 5-cycle. The base-point
// identification at the neighbour pair (0, 1) is the identity in our
// coordinates; any other choice differs by conjugation, which the
// canonical form quotients out.
inline CocycleClass class_from_action(const CycleAction& rho) {
  require_valid_action(rho);
  if (rho.n != 5) bad_input("class_from_action: the cycle must have size 5");
  CocycleClass out;
  out.group = rho.group;
  out.rep = canonical_rep(rho.images, 5);
  return out;
}

inline CocycleClass trivial_class(const FiniteGroup& g) {
  CocycleClass out;
  out.group = g;
  out.rep.assign(g.order, identity_element());
  return out;
}

inline bool is_trivial_class(const CocycleClass& c) {
  return std::all_of(c.rep.begin(), c.rep.end(),
                     [](const DihedralElement& g) { return is_identity(g); });
}

struct H1Enumeration {
  std::vector<CocycleClass> classes;
  std::vector<int> orbit_sizes;  // conjugation-orbit size per class
  int hom_count = 0;             // |Hom(G, D5)|
};

// Brute-force enumeration of Hom(G, D5) partitioned by D5-conjugacy.
inline H1Enumeration h1_enumerate(const FiniteGroup& g) {
  require_valid_group(g);
  auto mul = [](int a, int b) {
    return encode(compose(decode(a, 5), decode(b, 5), 5), 5);
  };
  auto homs = enumerate_homomorphisms(g, 10, mul, encode(identity_element(), 5));
  H1Enumeration out;
  out.hom_count = static_cast<int>(homs.size());
  std::vector<std::vector<int>> seen_canons;
  for (const auto& hom : homs) {
    std::vector<DihedralElement> images(g.order);
    for (int i = 0; i < g.order; ++i) images[i] = decode(hom[i], 5);
    auto canon = canonical_rep(images, 5);
    auto code = detail::encode_tuple(canon, 5);
    auto it = std::find(seen_canons.begin(), seen_canons.end(), code);
    if (it == seen_canons.end()) {
      seen_canons.push_back(code);
      CocycleClass cls;
      cls.group = g;
      cls.rep = canon;
      out.classes.push_back(cls);
      out.orbit_sizes.push_back(1);
    } else {
      ++out.orbit_sizes[it - seen_canons.begin()];
    }
  }
  // Orbit sizes counted via distinct conjugates, not hom multiplicity:
  // every hom appears exactly once in `homs`, so the counts above are
  // already the orbit sizes.
  return out;
}

// The quadratic character obtained by composing with the sign
// character; entry per group element, in {+1, -1}.
inline std::vector<int> sign_pushforward(const CocycleClass& c) {
  std::vector<int> out(c.rep.size());
  for (size_t i = 0; i < c.rep.size(); ++i) out[i] = sign_character(c.rep[i]);
  return out;
}

inline bool character_is_trivial(const std::vector<int>& chi) {
  return std::all_of(chi.begin(), chi.end(), [](int s) { return s == 1; });
}

// Whether the class factors through {±1}, i.e. its image has order <= 2.
inline bool is_quadratic(const CocycleClass& c) {
  std::set<int> image;
  for (const auto& g : c.rep) image.insert(encode(g, 5));
  return image.size() <= 2;
}

// --- explicit affine models ----------------------------------------------

struct ModelDescriptor {
  enum class Kind { Trivial, Quadratic, NonExplicit };
  Kind kind = Kind::NonExplicit;
  std::optional<Int> a;  // set for Kind::Quadratic

  // (xy - 1)t = x - 1 for the trivial class,
  // (x^2 - ay^2)t = y - 1 for a quadratic class.
  std::string equation() const {
    switch (kind) {
      case Kind::Trivial:
        return "(x*y - 1)*t = x - 1";
      case Kind::Quadratic:
        return "(x^2 - " + a->str() + "*y^2)*t = y - 1";
      case Kind::NonExplicit:
        return "";
    }
    return "";
  }
};

// Attaches the explicit model to a class. Quadratic nontrivial classes
// need the caller to pick the square-free integer a realizing the
// character; classes with image of order 5 or 10 have no explicit model.
inline ModelDescriptor model_from_class(const CocycleClass& c,
                                        std::optional<Int> a = std::nullopt) {
  ModelDescriptor out;
  if (is_trivial_class(c)) {
    out.kind = ModelDescriptor::Kind::Trivial;
    return out;
  }
  if (is_quadratic(c)) {
    if (!a)
      bad_input(
          "model_from_class: a quadratic class needs a square-free integer a");
    if (*a == 0 || *a == 1 || is_square(*a))
      bad_input("model_from_class: a must not be a square");
    if (!is_square_free(*a)) bad_input("model_from_class: a must be square-free");
    out.kind = ModelDescriptor::Kind::Quadratic;
    out.a = *a;
    return out;
  }
  out.kind = ModelDescriptor::Kind::NonExplicit;
  return out;
}

}  // namespace logk3

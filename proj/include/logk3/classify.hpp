#pragma once

// End-to-end classification: rewrite a structure down to degree 5, read
// off its characteristic class, push forward along the sign character,
// and attach the explicit model when one exists.

#include <optional>

#include "logk3/charclass.hpp"
#include "logk3/rewrite.hpp"

namespace logk3 {

struct Classification {
  ReductionResult reduction;
  CocycleClass cls;
  std::vector<int> character;  // sign pushforward, per group element
  ModelDescriptor model;
};

inline Classification classify(const LogK3Structure& s,
                               std::optional<Int> quadratic_a = std::nullopt) {
  Classification out;
  out.reduction = reduce_to_degree5(s);
  out.cls = class_from_action(out.reduction.structure.action);
  out.character = sign_pushforward(out.cls);
  if (is_trivial_class(out.cls) || !is_quadratic(out.cls) || quadratic_a)
    out.model = model_from_class(out.cls, quadratic_a);
  else
    bad_input(
        "classify: this structure has a quadratic class; supply the "
        "square-free integer a realizing the character (--a)");
  return out;
}

}  // namespace logk3

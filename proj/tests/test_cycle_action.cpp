#include <catch2/catch_amalgamated.hpp>

#include "logk3/cycle_action.hpp"

using namespace logk3;

TEST_CASE("trivial actions are valid for any group") {
  for (const auto& g : groups_up_to_order_10())
    CHECK(validate_action(trivial_action(5, g)));
}

TEST_CASE("Z/2 acting by a reflection is a valid action") {
  CycleAction a;
  a.n = 5;
  a.group = cyclic_group(2);
  a.images = {identity_element(), make_reflection(0, 5)};
  CHECK(validate_action(a));
}

TEST_CASE("Z/2 sending the generator to a rotation of order 5 is invalid") {
  CycleAction a;
  a.n = 5;
  a.group = cyclic_group(2);
  a.images = {identity_element(), make_rotation(1, 5)};
  CHECK_FALSE(validate_action(a));
  CHECK(action_violation(a).find("relation") != std::string::npos);
}

TEST_CASE("identity must act trivially") {
  CycleAction a;
  a.n = 5;
  a.group = cyclic_group(1);
  a.images = {make_rotation(1, 5)};
  CHECK_FALSE(validate_action(a));
}

TEST_CASE("relabeling conjugates the action") {
  CycleAction a;
  a.n = 5;
  a.group = cyclic_group(2);
  a.images = {identity_element(), make_reflection(2, 5)};
  for (const auto& h : all_dihedral_elements(5)) {
    auto b = relabel(a, h);
    CHECK(validate_action(b));
    CHECK(conjugate_actions(a, b));
  }
  // a rotation action of Z/5 is not conjugate to the reflection action of Z/2
  CycleAction c;
  c.n = 5;
  c.group = cyclic_group(2);
  c.images = {identity_element(), identity_element()};
  CHECK_FALSE(conjugate_actions(a, c));
}

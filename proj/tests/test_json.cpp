#include <catch2/catch_amalgamated.hpp>

#include "logk3/json_io.hpp"

using namespace logk3;

TEST_CASE("big integers and rationals travel as exact decimal strings") {
  Int big = parse_int("123456789012345678901234567890");
  CHECK(to_json(big).get<std::string>() == "123456789012345678901234567890");
  CHECK(int_from_json(to_json(big)) == big);

  Rat q(Int(-4), Int(14));
  CHECK(to_json(q).get<std::string>() == "-2/7");
  CHECK(rat_from_json(to_json(q)) == q);
  CHECK(rat_from_json(json(17)) == Rat(17));
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
}

TEST_CASE("group round trip") {
  for (const auto& g : {cyclic_group(5), dihedral_group(4), quaternion_group()}) {
    auto back = group_from_json(to_json(g));
    CHECK(back.order == g.order);
    CHECK(back.table == g.table);
    CHECK(back.generators == g.generators);
  }
  json bad = to_json(cyclic_group(3));
  bad["table"][0][0] = 2;
  CHECK_THROWS_AS(group_from_json(bad), std::invalid_argument);
}

TEST_CASE("action and structure round trip") {
  CycleAction a;
  a.n = 5;
  a.group = cyclic_group(2);
  a.images = {identity_element(), make_reflection(3, 5)};
  auto a2 = action_from_json(to_json(a));
  CHECK(a2.n == a.n);
  CHECK(a2.images == a.images);

  auto s = make_structure(7, {0, 0, 1});
  auto s2 = structure_from_json(to_json(s));
  CHECK(s2.degree == 7);
  CHECK(s2.seq == s.seq);
  CHECK(s2.ample);

  // a structure without an action field defaults to the trivial action
  auto s3 = structure_from_json(json{{"degree", 8}, {"seq", {3, 1}}});
  CHECK(s3.action.group.order == 1);

  // invalid structures are rejected at parse time
  json bad{{"degree", 7}, {"seq", {0, 0, 2}}};
  CHECK_THROWS_AS(structure_from_json(bad), std::invalid_argument);
}

TEST_CASE("surface model round trip") {
  auto m = general_d7_model(11, 5, 3, 1, 3);
  auto m2 = surface_model_from_json(to_json(m));
  CHECK(m2.family == m.family);
  CHECK(m2.coeffs == m.coeffs);
  CHECK_THROWS_AS(
      surface_model_from_json(json{{"family", "normform"}, {"coeffs", {"4"}}}),
      std::invalid_argument);
}

TEST_CASE("point serialization keeps exact rationals") {
  MPoint p{Rat(1, 8), Rat(-3), Rat(2209), Int(8)};
  json j = to_json(p);
  CHECK(j["x"] == "1/8");
  CHECK(j["y"] == "-3");
  CHECK(j["t"] == "2209");
  auto p2 = mpoint_from_json(j, Int(8));
  CHECK(p2 == p);
}

TEST_CASE("model descriptor JSON shapes") {
  ModelDescriptor trivial;
  trivial.kind = ModelDescriptor::Kind::Trivial;
  CHECK(to_json(trivial)["kind"] == "trivial");
  CHECK(to_json(trivial)["equation"]["family"] == "bilinear");

  ModelDescriptor quad;
  quad.kind = ModelDescriptor::Kind::Quadratic;
  quad.a = Int(5);
  CHECK(to_json(quad)["equation"]["coeffs"]["a"] == "5");

  ModelDescriptor none;
  CHECK(to_json(none)["kind"] == "non-explicit");
}

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "logk3/surface.hpp"

using namespace logk3;

namespace {

// Independent oracle: iterate all M-integral triples in the box and
// test the equation by exact rational substitution.
std::set<MPoint> naive_box_search(const SurfaceModel& m, const Int& M,
                                  const Int& B) {
  std::set<MPoint> out;
  for (Int i = -M * B; i <= M * B; ++i)
    for (Int j = -M * B; j <= M * B; ++j)
      for (Int k = -M * B; k <= M * B; ++k) {
        MPoint p{Rat(i, M), Rat(j, M), Rat(k, M), M};
        if (is_solution(m, p)) out.insert(p);
      }
  return out;
}

}  // namespace

TEST_CASE("exact solution tests") {
  auto triv = trivial_model();
  CHECK(is_solution(triv, {Rat(0), Rat(7), Rat(1), Int(1)}));
  CHECK(is_solution(triv, {Rat(2), Rat(1), Rat(1), Int(1)}));
  CHECK_FALSE(is_solution(triv, {Rat(2), Rat(1), Rat(2), Int(1)}));

  auto nf = norm_form_model(2, 0, 1, -1);
  CHECK(is_solution(nf, {Rat(3), Rat(2), Rat(1), Int(1)}));
  CHECK(is_solution(nf, {Rat(11), Rat(8), Rat(-1), Int(1)}));
}

TEST_CASE("model constructors enforce their hypotheses") {
  CHECK_THROWS_AS(norm_form_model(4, 0, 1, -1), std::invalid_argument);
  CHECK_THROWS_AS(general_d7_model(11, 5, 3, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(general_d7_model(1, 1, 1, 1, 1), std::invalid_argument);  // Δ = 0
}

TEST_CASE("box search agrees with the naive oracle") {
  struct Case {
    SurfaceModel model;
    Int M, B;
  };
  std::vector<Case> cases;
  cases.push_back({trivial_model(), 1, 8});
  cases.push_back({trivial_model(), 2, 4});
  cases.push_back({norm_form_model(2, 0, 1, -1), 1, 6});
  cases.push_back({general_d7_model(11, 5, 3, 1, 3), 1, 10});
  cases.push_back({bilinear_model(Rat(1), Rat(1, 2), Rat(0), Rat(-1), Rat(1),
                                  Rat(-1)),
                   2, 3});
  for (const auto& c : cases) {
    auto got = search_box(c.model, c.M, c.B);
    std::set<MPoint> got_set(got.begin(), got.end());
    CHECK(got_set.size() == got.size());  // no duplicates
    CHECK(got_set == naive_box_search(c.model, c.M, c.B));
  }
}

TEST_CASE("trivial model carries the two obvious solution families") {
  auto hits = search_box(trivial_model(), 1, 10);
  std::set<MPoint> set(hits.begin(), hits.end());
  for (int y = -10; y <= 10; ++y) {
    CHECK(set.count({Rat(0), Rat(y), Rat(1), Int(1)}) == 1);
    CHECK(set.count({Rat(1), Rat(y), Rat(0), Int(1)}) == 1);
  }
}

TEST_CASE("the counter-example surface has no small integral points") {
  auto hits = search_box(general_d7_model(11, 5, 3, 1, 3), 1, 200);
  CHECK(hits.empty());
}

TEST_CASE("norm form box contains the unit-constructed points") {
  auto hits = search_box(norm_form_model(2, 0, 1, -1), 1, 20);
  std::set<MPoint> set(hits.begin(), hits.end());
  CHECK(set.count({Rat(3), Rat(2), Rat(1), Int(1)}) == 1);
  CHECK(set.count({Rat(11), Rat(8), Rat(-1), Int(1)}) == 1);
}

TEST_CASE("curve decomposition for M = 1") {
  auto fam = curve_decomposition(1);
  REQUIRE(fam.y_constants.size() == 5);  // -2..2
  REQUIRE(fam.x_constants.size() == 9);  // x - 1 in -4..4
  CHECK(fam.y_constants.front() == Rat(-2));
  CHECK(fam.y_constants.back() == Rat(2));
  CHECK(fam.x_constants.front() == Rat(-3));
  CHECK(fam.x_constants.back() == Rat(5));
  CHECK(fam.includes_t_zero);
}

TEST_CASE("curve decomposition for M = 2 and 3") {
  auto fam2 = curve_decomposition(2);
  CHECK(fam2.y_constants.size() == 17);  // n/2 with |n| <= 8
  CHECK(fam2.x_constants.size() == 25);  // 1 + n/2 with |n| <= 12
  auto fam3 = curve_decomposition(3);
  CHECK(fam3.y_constants.size() == 37);  // n/3 with |n| <= 18
  CHECK(fam3.x_constants.size() == 49);  // 1 + n/3 with |n| <= 24
}

TEST_CASE("membership in the curve family matches the defining bounds") {
  auto fam = curve_decomposition(2);
  auto hits = search_box(trivial_model(), 2, 20);
  for (const auto& p : hits) {
    bool bounds = is_zero(p.t) || rat_abs(p.y) <= Rat(4) ||
                  rat_abs(p.x - 1) <= Rat(6);
    CHECK(fam.contains(p) == bounds);
  }
}

TEST_CASE("non-density certificate passes at small scale") {
  for (int m : {1, 2, 3}) {
    auto rep = nondensity_certificate(m, 60);
    INFO("M = " << m);
    CHECK(rep.pass);
    CHECK(rep.violations.empty());
    CHECK(rep.solution_count > 0);
    CHECK(rep.on_t_zero + rep.on_y_curves + rep.on_x_curves >= rep.solution_count);
  }
}

TEST_CASE("search box arguments are validated") {
  CHECK_THROWS_AS(search_box(trivial_model(), 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(search_box(trivial_model(), 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(curve_decomposition(0), std::invalid_argument);
}

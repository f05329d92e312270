#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "logk3/quadratic_order.hpp"

using namespace logk3;

namespace {

// Independent subgroup oracle: close {-1, g} under multiplication mod p.
long subgroup_size(const Int& g, const Int& p) {
  std::set<Int> members{mod_floor(Int(-1), p), mod_floor(g, p)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Int> cur(members.begin(), members.end());
    for (const auto& a : cur)
      for (const auto& b : cur)
        if (members.insert(mod_floor(a * b, p)).second) grew = true;
  }
  return static_cast<long>(members.size());
}

}  // namespace

TEST_CASE("fundamental units for small a") {
  auto e2 = fundamental_unit(2);
  CHECK(e2 == QuadInt{1, 1});
  CHECK(QuadraticOrder(2).norm(e2) == -1);

  auto e3 = fundamental_unit(3);
  CHECK(e3 == QuadInt{2, 1});
  CHECK(QuadraticOrder(3).norm(e3) == 1);

  auto e6 = fundamental_unit(6);
  CHECK(e6 == QuadInt{5, 2});
  CHECK(QuadraticOrder(6).norm(e6) == 1);

  auto e7 = fundamental_unit(7);
  CHECK(e7 == QuadInt{8, 3});

  // a = 46 has a long continued-fraction period
  auto e46 = fundamental_unit(46);
  CHECK(e46 == QuadInt{24335, 3588});
  CHECK(QuadraticOrder(46).norm(e46) == 1);
}

TEST_CASE("fundamental unit is minimal among units with positive v") {
  for (int a : {2, 3, 6, 7, 11, 46}) {
    auto eps = fundamental_unit(a);
    for (Int v = 1; v < eps.v; ++v)
      for (Int sign : {Int(1), Int(-1)}) {
        // no unit u + v sqrt(a) below the fundamental one
        CHECK_FALSE(is_square(a * v * v + sign));
      }
  }
}

TEST_CASE("rejected orders") {
  CHECK_THROWS_AS(fundamental_unit(5), std::invalid_argument);   // 1 mod 4
  CHECK_THROWS_AS(fundamental_unit(9), std::invalid_argument);   // square
  CHECK_THROWS_AS(fundamental_unit(12), std::invalid_argument);  // not square-free
  CHECK_THROWS_AS(fundamental_unit(1), std::invalid_argument);
  CHECK_THROWS_AS(fundamental_unit(-2), std::invalid_argument);
}

TEST_CASE("norm and conjugation are multiplicative") {
  QuadraticOrder order(2);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-50, 50);
  for (int trial = 0; trial < 200; ++trial) {
    QuadInt p{dist(rng), dist(rng)}, q{dist(rng), dist(rng)};
    auto pq = order.mul(p, q);
    CHECK(order.norm(pq) == order.norm(p) * order.norm(q));
    auto cpq = order.mul(order.conj(p), order.conj(q));
    CHECK(order.conj(pq) == cpq);
  }
}

TEST_CASE("frozen unit computation: eps^3 times conj(pi)") {
  QuadraticOrder order(2);
  auto eps3 = order.pow(fundamental_unit(2), 3);
  CHECK(eps3 == QuadInt{7, 5});
  auto el = order.mul(eps3, order.conj(QuadInt{3, 1}));
  CHECK(el == QuadInt{11, 8});
}

TEST_CASE("norm equation solutions") {
  auto pi7 = solve_norm_equation(2, 7);
  REQUIRE(pi7.has_value());
  CHECK(abs(QuadraticOrder(2).norm(*pi7)) == 7);

  CHECK_FALSE(solve_norm_equation(2, 3).has_value());  // 3 inert in Q(sqrt 2)
  CHECK_FALSE(solve_norm_equation(2, 5).has_value());

  auto pi11 = solve_norm_equation(3, 11);
  REQUIRE(pi11.has_value());
  CHECK(abs(QuadraticOrder(3).norm(*pi11)) == 11);

  CHECK_THROWS_AS(solve_norm_equation(2, 4), std::invalid_argument);
}

TEST_CASE("surjective primes for a = 2 below 30") {
  auto data = surjective_primes(2, 30);
  REQUIRE(data.size() == 3);
  CHECK(data[0].p == 7);
  CHECK(data[1].p == 17);
  CHECK(data[2].p == 23);
  for (const auto& d : data) {
    CHECK(mod_floor(d.r * d.r - 2, d.p) == 0);
    CHECK(abs(QuadraticOrder(2).norm(d.pi)) == d.p);
    // independent subgroup closure oracle
    QuadInt eps = fundamental_unit(2);
    Int ebar = mod_floor(eps.u + eps.v * d.r, d.p);
    CHECK(subgroup_size(ebar, d.p) == d.p - 1);
  }
  CHECK(data[0].r == 4);
  CHECK(data[0].pi == QuadInt{3, 1});
}

TEST_CASE("surjectivity does not depend on the choice of root") {
  QuadraticOrder order(2);
  QuadInt eps = fundamental_unit(2);
  // both square roots of 2 mod 7 produce the same verdict
  CHECK(unit_reduction_surjective(order, eps, 4, 7));
  CHECK(unit_reduction_surjective(order, eps, 3, 7));
  // the subgroup generated by eps alone differs: 5 has order 6, 4 has order 3
  CHECK(mult_order(mod_floor(Int(1 + 1 * 4), Int(7)), 7) == 6);
  CHECK(mult_order(mod_floor(Int(1 + 1 * 3), Int(7)), 7) == 3);
}

TEST_CASE("the hand-traceable point on C_7") {
  auto data = surjective_primes(2, 10);
  REQUIRE(data.size() == 1);
  auto pt = point_on_curve(2, data[0]);
  CHECK(pt.point.x == Rat(11));
  CHECK(pt.point.y == Rat(8));
  CHECK(pt.point.t == Rat(-1));
  CHECK(pt.norm == -7);
  CHECK(pt.unit_order == 6);

  auto next = next_point_on_curve(2, data[0], pt);
  CHECK(next.point.x == Rat(2209));
  CHECK(next.point.y == Rat(1562));
  CHECK(next.point.t == Rat(-223));
}

TEST_CASE("curve points satisfy the three exact checks") {
  auto model = norm_form_model(2, 0, 1, -1);
  for (const auto& datum : surjective_primes(2, 40)) {
    auto pt = point_on_curve(2, datum);
    for (int i = 0; i < 4; ++i) {
      CHECK(is_solution(model, pt.point));
      CHECK(abs(pt.norm) == datum.p);
      CHECK(mod_floor(pt.point.y.numerator() - 1, datum.p) == 0);
      pt = next_point_on_curve(2, datum, pt);
    }
  }
}

TEST_CASE("density experiment produces verified distinct curves") {
  auto rep = density_experiment(2, 3, 2);
  CHECK(rep.all_verified);
  REQUIRE(rep.curves.size() == 3);
  std::set<Int> norms;
  std::set<MPoint> all_points;
  for (const auto& c : rep.curves) {
    CHECK(c.points.size() == 2);
    for (const auto& p : c.points) {
      norms.insert(abs(p.norm));
      all_points.insert(p.point);
    }
  }
  CHECK(norms.size() == 3);      // distinct |norms| separate the curves
  CHECK(all_points.size() == 6);  // all points distinct
  // the hand-traceable witness is included
  CHECK(all_points.count({Rat(11), Rat(8), Rat(-1), Int(1)}) == 1);
}

TEST_CASE("density experiment reports insufficient primes") {
  auto rep = density_experiment(2, 50, 1, 40);
  CHECK_FALSE(rep.all_verified);
  CHECK_FALSE(rep.note.empty());
}

TEST_CASE("coordinate growth along one curve is geometric") {
  auto data = surjective_primes(2, 10);
  auto pt = point_on_curve(2, data[0]);
  QuadraticOrder order(2);
  // eps^6 = 99 + 70 sqrt(2); successive x-coordinates approach that ratio
  std::vector<Int> xs;
  for (int i = 0; i < 6; ++i) {
    xs.push_back(abs(pt.point.x.numerator()));
    pt = next_point_on_curve(2, data[0], pt);
  }
  for (size_t i = 1; i + 1 < xs.size(); ++i) {
    Rat r1(xs[i + 1], xs[i]);
    // the x-coordinate recursion multiplies by eps^6, numerically ~198
    CHECK(r1 > Rat(197));
    CHECK(r1 < Rat(199));
  }
}

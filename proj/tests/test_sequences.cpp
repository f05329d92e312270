#include <catch2/catch_amalgamated.hpp>

#include "logk3/sequence.hpp"
#include "logk3/structure.hpp"

using namespace logk3;

namespace {

// Cofactor-expansion determinant, independent of the Bareiss routine.
Int det_cofactor(const std::vector<std::vector<Int>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  Int sum = 0;
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Int>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    Int term = m[0][j] * det_cofactor(minor);
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

}  // namespace

TEST_CASE("canonical form and dihedral equivalence") {
  CHECK(canonical_sequence({3, 1}) == SelfIntersectionSeq{1, 3});
  CHECK(dihedral_equivalent({3, 1}, {1, 3}));
  CHECK(dihedral_equivalent({0, 0, 1}, {0, 1, 0}));
  CHECK(dihedral_equivalent({-1, 0, 2}, {2, 0, -1}));
  CHECK_FALSE(dihedral_equivalent({-1, -1, 0, 0}, {-1, 0, -1, 0}));
  CHECK(canonical_sequence({0, -1, -1, 0}) == SelfIntersectionSeq{-1, -1, 0, 0});
}

TEST_CASE("intersection matrix shapes") {
  auto m = intersection_matrix({3, 1});
  CHECK(m == std::vector<std::vector<Int>>{{3, 2}, {2, 1}});
  CHECK(determinant(m) == -1);

  auto m22 = intersection_matrix({2, 2});
  CHECK(m22[0][1] == 2);
  CHECK(determinant(m22) == 0);

  auto m5 = intersection_matrix({-1, -1, -1, -1, -1});
  CHECK(determinant(m5) == 1);
  CHECK(m5[0][4] == 1);  // cyclic adjacency wraps around
  CHECK(m5[0][2] == 0);
}

TEST_CASE("determinant agrees with cofactor expansion") {
  for (const SelfIntersectionSeq& s :
       {SelfIntersectionSeq{3, 1}, {2, 2}, {0, 0, 1}, {-1, 1, 1}, {-1, 0, 2},
        {-1, -1, 0, 0}, {-1, -1, -1, 1}, {-1, 0, -1, 0},
        {-1, -1, -1, -1, -1}, {0, -1, 2, -1, -5}}) {
    auto m = intersection_matrix(s);
    CHECK(determinant(m) == det_cofactor(m));
  }
}

TEST_CASE("unimodularity filter") {
  CHECK(unimodular_check({0, 0, 1}));
  CHECK_FALSE(unimodular_check({-1, 1, 1}));    // two equal rows
  CHECK_FALSE(unimodular_check({-1, 0, -1, 0}));
  CHECK(unimodular_check({-1, -1, -1, -1, -1}));
}

TEST_CASE("sum invariant") {
  CHECK(sum_invariant_check(make_structure(5, {-1, -1, -1, -1, -1})));
  CHECK(sum_invariant_check(make_structure(8, {3, 1})));
  LogK3Structure bad;
  bad.degree = 7;
  bad.seq = {0, 0, 2};
  bad.action = trivial_action(3);
  CHECK_FALSE(sum_invariant_check(bad));
  CHECK_FALSE(validate_structure(bad));
}

TEST_CASE("admissible sequences match the known tables") {
  auto canon_set = [](std::vector<SelfIntersectionSeq> v) {
    for (auto& s : v) s = canonical_sequence(s);
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(enumerate_admissible(8) == canon_set({{3, 1}}));
  CHECK(enumerate_admissible(7) == canon_set({{0, 0, 1}, {-1, 0, 2}}));
  CHECK(enumerate_admissible(6) == canon_set({{-1, -1, 0, 0}, {-1, -1, -1, 1}}));
  CHECK(enumerate_admissible(5) == canon_set({{-1, -1, -1, -1, -1}}));
  CHECK_THROWS_AS(enumerate_admissible(4), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_admissible(9), std::invalid_argument);
}

TEST_CASE("ample structures reject entries below -1") {
  LogK3Structure s;
  s.degree = 7;
  s.seq = {-2, 0, 3};
  s.action = trivial_action(3);
  s.ample = true;
  CHECK_FALSE(validate_structure(s));
  s.ample = false;
  CHECK(validate_structure(s));
}

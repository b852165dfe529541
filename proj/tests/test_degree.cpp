#include <doctest.h>

#include "kshift/degree.hpp"
#include "kshift/errors.hpp"

using namespace kshift;

TEST_CASE("degree vector constructors") {
  CHECK(DegreeVec::zero(3).entries() == std::vector<int>{0, 0, 0});
  CHECK(DegreeVec::ones(2).entries() == std::vector<int>{1, 1});
  CHECK(DegreeVec::unit(3, 2).entries() == std::vector<int>{0, 1, 0});
  CHECK_THROWS_AS(DegreeVec({1, -1}), Error);
  CHECK_THROWS_AS(DegreeVec::unit(2, 3), Error);
}

TEST_CASE("degree vector arithmetic and order") {
  DegreeVec a({2, 1}), b({1, 1});
  CHECK((a + b).entries() == std::vector<int>{3, 2});
  CHECK((a - b).entries() == std::vector<int>{1, 0});
  CHECK_THROWS_AS(b - a, Error);  // would go negative
  CHECK(a.sum() == 3);
  CHECK(a.max() == 2);
  CHECK_FALSE(a.is_zero());
  CHECK(DegreeVec::zero(2).is_zero());
  CHECK(b < a);
  CHECK(DegreeVec({1, 2}) < DegreeVec({2, 0}));  // lexicographic
  CHECK(dominated(b, a));
  CHECK_FALSE(dominated(a, b));
  CHECK_THROWS_AS(a + DegreeVec({1}), Error);  // rank mismatch
}

TEST_CASE("degree enumeration is lexicographic and complete") {
  auto all = degrees_up_to(DegreeVec({1, 1}));
  REQUIRE(all.size() == 4);
  CHECK(all[0].entries() == std::vector<int>{0, 0});
  CHECK(all[1].entries() == std::vector<int>{0, 1});
  CHECK(all[2].entries() == std::vector<int>{1, 0});
  CHECK(all[3].entries() == std::vector<int>{1, 1});

  auto box = box_points(2, 2);
  CHECK(box.size() == 9);
  CHECK(box.front().is_zero());
  CHECK(box.back().entries() == std::vector<int>{2, 2});

  // Rank 0 has exactly one (empty) point.
  CHECK(box_points(0, 5).size() == 1);
}

TEST_CASE("displacement is a signed difference") {
  CHECK(displacement(DegreeVec({2, 0}), DegreeVec({0, 3})) ==
        std::vector<int>{2, -3});
  CHECK(to_string(DegreeVec({2, 0})) == "(2,0)");
}

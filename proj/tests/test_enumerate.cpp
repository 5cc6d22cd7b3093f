#include <doctest.h>

#include "liftreg/enumerate.hpp"
#include "liftreg/errors.hpp"

using namespace liftreg;

TEST_CASE("lattice points of the dilated standard triangle") {
  std::vector<LinearIneq> tri{{{-1, 0}, Rat(0)}, {{0, -1}, Rat(0)}, {{1, 1}, Rat(2)}};
  IntBox box{{0, 0}, {2, 2}};
  std::vector<IntVec> expected{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}};
  CHECK(enumerate_lattice_points(tri, box) == expected);
}

TEST_CASE("degenerate boxes") {
  CHECK(enumerate_lattice_points({}, {{1, 1}, {0, 0}}).empty());
  std::vector<IntVec> corners{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  CHECK(enumerate_lattice_points({}, {{0, 0}, {1, 1}}) == corners);
}

TEST_CASE("enumeration agrees with a naive scan") {
  std::vector<LinearIneq> ineqs{{{2, -3}, Rat(1)}, {{-1, -1}, Rat(4)}, {{0, 1}, Rat(5, 2)}};
  IntBox box{{-3, -3}, {4, 4}};
  auto fast = enumerate_lattice_points(ineqs, box);
  std::vector<IntVec> naive;
  for (long x = -3; x <= 4; ++x)
    for (long y = -3; y <= 4; ++y) {
      IntVec z{x, y};
      bool ok = true;
      for (const auto& iq : ineqs)
        if (Rat(dot(iq.coeff, z)) > iq.rhs) ok = false;
      if (ok) naive.push_back(z);
    }
  CHECK(fast == naive);
}

TEST_CASE("box cap fails loudly") {
  set_enum_cap(100);
  IntBox big{{0, 0}, {50, 50}};
  CHECK_THROWS_AS(enumerate_lattice_points({}, big), Error);
  try {
    enumerate_lattice_points({}, big);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBoxTooLarge);
    CHECK(e.is_cap_error());
  }
  set_enum_cap(0);
  CHECK(enumerate_lattice_points({}, big).size() == 51 * 51);
}

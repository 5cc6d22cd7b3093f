#include <doctest.h>

#include "liftreg/lattice.hpp"
#include "support.hpp"

using namespace liftreg;

TEST_CASE("hnf basics") {
  {
    HnfResult r = hnf(int_identity(2));
    CHECK(r.h == int_identity(2));
    CHECK(r.u == int_identity(2));
  }
  {
    IntMat m{{2, 0}, {0, 2}};
    HnfResult r = hnf(m);
    CHECK(r.h == m);
    CHECK(r.u == int_identity(2));
  }
  {
    IntMat m{{2, 4}, {1, 3}};
    HnfResult r = hnf(m);
    Int dh = det(r.h);
    CHECK((dh == 2 || dh == -2));
    CHECK(mul(r.u, m) == r.h);
    Int du = det(r.u);
    CHECK((du == 1 || du == -1));
  }
}

TEST_CASE("hnf on random integer matrices") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    IntMat m(rows, IntVec(cols));
    for (auto& row : m)
      for (auto& x : row) x = Int(static_cast<long>(rng() % 11)) - 5;
    HnfResult r = hnf(m);
    CHECK(mul(r.u, m) == r.h);
    if (rows == cols) {
      Int du = det(r.u);
      CHECK((du == 1 || du == -1));
    }
    // row echelon with positive pivots, entries above reduced
    std::size_t last_pivot = 0;
    bool seen = false;
    for (const auto& row : r.h) {
      std::size_t p = 0;
      while (p < cols && row[p] == 0) ++p;
      if (p == cols) continue;
      if (seen) CHECK(p > last_pivot);
      CHECK(row[p] > 0);
      last_pivot = p;
      seen = true;
    }
  }
}

TEST_CASE("kernel lattice examples") {
  {
    IntLattice lat = kernel_lattice({0, 0, 1});
    CHECK(lat.rank() == 2);
    CHECK(lat.basis() == IntMat{{1, 0, 0}, {0, 1, 0}});
  }
  {
    IntLattice lat = kernel_lattice({1, 1});
    REQUIRE(lat.rank() == 1);
    CHECK((lat.basis()[0] == IntVec{1, -1} || lat.basis()[0] == IntVec{-1, 1}));
  }
  {
    IntLattice lat = kernel_lattice({2, 3});
    REQUIRE(lat.rank() == 1);
    CHECK((lat.basis()[0] == IntVec{3, -2} || lat.basis()[0] == IntVec{-3, 2}));
  }
  CHECK_THROWS_AS(kernel_lattice({2, 4}), Error);
  CHECK_THROWS_AS(kernel_lattice({0, 0}), Error);
}

TEST_CASE("kernel lattice equals brute force on small boxes") {
  std::vector<IntVec> normals{{1, 1}, {2, 3}, {1, -2}, {0, 0, 1}, {1, 1, 1}, {2, -1, 3}};
  for (const auto& a : normals) {
    IntLattice lat = kernel_lattice(a);
    for (const auto& b : lat.basis()) CHECK(dot(a, b) == 0);
    std::size_t n = a.size();
    IntBox box;
    box.lo.assign(n, -3);
    box.hi.assign(n, 3);
    for (const auto& z : enumerate_lattice_points({}, box)) {
      bool in_plane = dot(a, z) == 0;
      CHECK(lat.contains(z) == in_plane);
    }
  }
}

TEST_CASE("unimodular completion of a primitive vector") {
  for (IntVec c : {IntVec{1, 0, 0}, IntVec{0, 0, 1}, IntVec{2, 3}, IntVec{3, -5, 7}}) {
    IntMat a = unimodular_with_last_row(c);
    Int d = det(a);
    CHECK((d == 1 || d == -1));
    CHECK(a.back() == c);
  }
}

#pragma once

// Dense exact linear algebra at desk scale (n <= ~6). Plain Gaussian
// elimination over the rationals; no pivot magnitude concerns since
// everything is exact.

#include <optional>
#include <vector>

#include "liftreg/rational.hpp"

namespace liftreg {

class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMat identity(std::size_t n);
  static RatMat from_columns(const std::vector<RatVec>& cols);
  static RatMat from_rows(const std::vector<RatVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  RatVec row(std::size_t r) const;
  RatVec col(std::size_t c) const;

  RatVec mul(const RatVec& x) const;
  RatMat mul(const RatMat& other) const;
  RatMat transposed() const;

  bool operator==(const RatMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

/// Exact determinant of a square matrix.
Rat det(const RatMat& m);

/// Exact solution of A x = b for square A; throws SINGULAR.
RatVec solve(const RatMat& a, const RatVec& b);

/// Exact inverse; throws SINGULAR.
RatMat inverse(const RatMat& a);

/// General (possibly rectangular/singular) system A x = b.
struct GeneralSolution {
  bool consistent = false;
  RatVec particular;            // one solution, when consistent
  std::vector<RatVec> kernel;   // basis of the nullspace of A
};
GeneralSolution solve_general(const RatMat& a, const RatVec& b);

/// Basis of {x : A x = 0}.
std::vector<RatVec> kernel_basis(const RatMat& a);

/// Reusable factorization of A for solving many right-hand sides:
/// ops * A is in reduced row echelon form.
struct RowReduction {
  RatMat ops;
  std::vector<std::size_t> pivots;  // pivot column per pivot row
  std::vector<RatVec> kernel;
  std::size_t cols = 0;

  /// One solution of A x = rhs, or nullopt when inconsistent.
  std::optional<RatVec> particular(const RatVec& rhs) const;
};
RowReduction row_reduce(const RatMat& a);

// --- integer matrices -------------------------------------------------

using IntMat = std::vector<IntVec>;  // row-major

IntMat int_identity(std::size_t n);
Int det(const IntMat& m);
IntMat mul(const IntMat& a, const IntMat& b);
IntVec mul(const IntMat& a, const IntVec& x);
RatMat to_rat(const IntMat& m);

/// Inverse of a unimodular integer matrix (|det| = 1), exact and integral.
IntMat unimodular_inverse(const IntMat& u);

}  // namespace liftreg

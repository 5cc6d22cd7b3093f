#pragma once

// Integer-lattice workhorses: row-style Hermite normal form with a
// unimodular transform, kernel lattices of primitive normals, and basis
// extension (used by the lattice-preserving slice map).

#include "liftreg/linalg.hpp"

namespace liftreg {

struct HnfResult {
  IntMat h;  // row-style HNF of the input
  IntMat u;  // unimodular, u * m = h
};

/// Row-style Hermite normal form: pivots positive, entries above each
/// pivot reduced into [0, pivot). det(u) = +-1 and u*m = h exactly.
HnfResult hnf(const IntMat& m);

class IntLattice {
 public:
  IntLattice() : n_(0) {}
  /// Rows of `basis` generate the lattice; stored HNF-reduced.
  IntLattice(std::size_t ambient_dim, const IntMat& basis);

  std::size_t ambient_dim() const { return n_; }
  std::size_t rank() const { return basis_.size(); }
  const IntMat& basis() const { return basis_; }

  /// Exact membership via back-substitution against the HNF basis.
  bool contains(const IntVec& v) const;

 private:
  std::size_t n_;
  IntMat basis_;                    // HNF rows, zero rows dropped
  std::vector<std::size_t> pivot_;  // pivot column per basis row
};

/// {x in Z^n : a.x = 0} for a primitive integer vector a; rank n-1.
IntLattice kernel_lattice(const IntVec& a);

/// Unimodular matrix whose last row equals the primitive vector c.
IntMat unimodular_with_last_row(const IntVec& c);

}  // namespace liftreg

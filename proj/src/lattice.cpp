#include "liftreg/lattice.hpp"

namespace liftreg {

HnfResult hnf(const IntMat& m) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  IntMat h = m;
  IntMat u = int_identity(rows);

  auto row_op_gcd = [&](std::size_t ra, std::size_t rb, std::size_t col) {
    // Replace rows ra, rb by [p*ra + q*rb; -b/g*ra + a/g*rb] with
    // p*a + q*b = g = gcd(a, b); zeroes h[rb][col].
    Int a = h[ra][col], b = h[rb][col];
    Int g, p, q;
    mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Int adg = a / g, bdg = b / g;
    for (std::size_t c = 0; c < cols; ++c) {
      Int hi = h[ra][c], hj = h[rb][c];
      h[ra][c] = p * hi + q * hj;
      h[rb][c] = adg * hj - bdg * hi;
    }
    for (std::size_t c = 0; c < rows; ++c) {
      Int ui = u[ra][c], uj = u[rb][c];
      u[ra][c] = p * ui + q * uj;
      u[rb][c] = adg * uj - bdg * ui;
    }
  };

  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && h[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != row) {
      std::swap(h[piv], h[row]);
      std::swap(u[piv], u[row]);
    }
    for (std::size_t r = row + 1; r < rows; ++r)
      if (h[r][col] != 0) row_op_gcd(row, r, col);
    if (h[row][col] < 0) {
      for (auto& x : h[row]) x = -x;
      for (auto& x : u[row]) x = -x;
    }
    // reduce entries above the pivot into [0, pivot)
    for (std::size_t r = 0; r < row; ++r) {
      Int quot;
      mpz_fdiv_q(quot.get_mpz_t(), h[r][col].get_mpz_t(), h[row][col].get_mpz_t());
      if (quot == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) h[r][c] -= quot * h[row][c];
      for (std::size_t c = 0; c < rows; ++c) u[r][c] -= quot * u[row][c];
    }
    ++row;
  }
  return {h, u};
}

IntLattice::IntLattice(std::size_t ambient_dim, const IntMat& basis) : n_(ambient_dim) {
  for (const auto& r : basis)
    if (r.size() != n_) fail(ErrorCode::kInternal, "lattice basis dimension mismatch");
  IntMat h = hnf(basis).h;
  for (auto& r : h) {
    if (is_zero(r)) continue;
    std::size_t p = 0;
    while (r[p] == 0) ++p;
    pivot_.push_back(p);
    basis_.push_back(std::move(r));
  }
}

bool IntLattice::contains(const IntVec& v) const {
  if (v.size() != n_) fail(ErrorCode::kInternal, "lattice membership dimension mismatch");
  IntVec w = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    std::size_t p = pivot_[i];
    for (std::size_t c = 0; c < p; ++c)
      if (w[c] != 0) return false;
    if (w[p] % basis_[i][p] != 0) return false;
    Int q = w[p] / basis_[i][p];
    for (std::size_t c = 0; c < n_; ++c) w[c] -= q * basis_[i][c];
  }
  return is_zero(w);
}

IntLattice kernel_lattice(const IntVec& a) {
  if (is_zero(a)) fail(ErrorCode::kNotPrimitive, "zero normal");
  Int g = 0;
  for (const auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g != 1) fail(ErrorCode::kNotPrimitive, "normal has gcd " + g.get_str());
  std::size_t n = a.size();
  // Row-HNF of the column vector a: u * a = e_1. Rows 2..n of u then span
  // the kernel {x : a.x = 0}.
  IntMat column(n, IntVec(1));
  for (std::size_t i = 0; i < n; ++i) column[i][0] = a[i];
  HnfResult r = hnf(column);
  if (r.h[0][0] != 1) fail(ErrorCode::kInternal, "primitive vector HNF pivot != 1");
  IntMat basis;
  for (std::size_t i = 1; i < n; ++i) basis.push_back(r.u[i]);
  IntLattice lat(n, basis);
  if (lat.rank() != n - 1) fail(ErrorCode::kInternal, "kernel lattice rank mismatch");
  for (const auto& b : lat.basis())
    if (dot(a, b) != 0) fail(ErrorCode::kInternal, "kernel basis not orthogonal");
  return lat;
}

IntMat unimodular_with_last_row(const IntVec& c) {
  std::size_t n = c.size();
  IntMat column(n, IntVec(1));
  for (std::size_t i = 0; i < n; ++i) column[i][0] = c[i];
  HnfResult r = hnf(column);
  if (r.h[0][0] != 1) fail(ErrorCode::kNotPrimitive, "vector is not primitive");
  // u * c = e_1, so c^T is the first row of (u^{-1})^T... more directly:
  // rows of u^{-1} transposed give a basis completing c. Build the matrix
  // whose last row is c by inverting u and permuting.
  IntMat uinv = unimodular_inverse(r.u);  // columns: uinv * e_1 = c
  IntMat a(n, IntVec(n));
  // uinv column 0 equals c; take transpose-like reshuffle: we want last ROW
  // equal to c, i.e. A^T has last COLUMN c. Set A^T = [uinv cols 1..n-1, c].
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) a[j][i] = uinv[i][j + 1];
    a[n - 1][i] = uinv[i][0];
  }
  Int d = det(a);
  if (d != 1 && d != -1) fail(ErrorCode::kInternal, "basis completion not unimodular");
  for (std::size_t i = 0; i < n; ++i)
    if (a[n - 1][i] != c[i]) fail(ErrorCode::kInternal, "basis completion lost c");
  return a;
}

}  // namespace liftreg

#include "liftreg/linalg.hpp"

namespace liftreg {

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

RatMat RatMat::from_columns(const std::vector<RatVec>& cols) {
  if (cols.empty()) return RatMat();
  RatMat m(cols[0].size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != m.rows())
      fail(ErrorCode::kInternal, "from_columns: ragged input");
    for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

RatMat RatMat::from_rows(const std::vector<RatVec>& rows) {
  if (rows.empty()) return RatMat();
  RatMat m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols())
      fail(ErrorCode::kInternal, "from_rows: ragged input");
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

RatVec RatMat::row(std::size_t r) const {
  RatVec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

RatVec RatMat::col(std::size_t c) const {
  RatVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

RatVec RatMat::mul(const RatVec& x) const {
  if (x.size() != cols_) fail(ErrorCode::kInternal, "mul: size mismatch");
  RatVec y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rat s;
    for (std::size_t c = 0; c < cols_; ++c) s += at(r, c) * x[c];
    y[r] = s;
  }
  return y;
}

RatMat RatMat::mul(const RatMat& other) const {
  if (cols_ != other.rows_) fail(ErrorCode::kInternal, "mul: shape mismatch");
  RatMat m(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < other.cols_; ++c) {
      Rat s;
      for (std::size_t k = 0; k < cols_; ++k) s += at(r, k) * other.at(k, c);
      m.at(r, c) = s;
    }
  return m;
}

RatMat RatMat::transposed() const {
  RatMat m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

Rat det(const RatMat& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::kInternal, "det: not square");
  std::size_t n = m.rows();
  RatMat a = m;
  Rat d(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a.at(piv, col).is_zero()) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(a.at(piv, c), a.at(col, c));
      d = -d;
    }
    d *= a.at(col, col);
    Rat inv = a.at(col, col).inv();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a.at(r, col).is_zero()) continue;
      Rat factor = a.at(r, col) * inv;
      for (std::size_t c = col; c < n; ++c)
        a.at(r, c) -= factor * a.at(col, c);
    }
  }
  return d;
}

namespace {

// Row-reduces [a | rhs] to reduced row echelon form in place.
// Returns the pivot column of each pivot row.
std::vector<std::size_t> rref(RatMat& a, std::vector<RatVec>& rhs) {
  std::size_t n = a.rows(), m = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && a.at(piv, col).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != row) {
      for (std::size_t c = 0; c < m; ++c) std::swap(a.at(piv, c), a.at(row, c));
      for (auto& v : rhs) std::swap(v[piv], v[row]);
    }
    Rat inv = a.at(row, col).inv();
    for (std::size_t c = 0; c < m; ++c) a.at(row, c) *= inv;
    for (auto& v : rhs) v[row] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a.at(r, col).is_zero()) continue;
      Rat factor = a.at(r, col);
      for (std::size_t c = 0; c < m; ++c) a.at(r, c) -= factor * a.at(row, c);
      for (auto& v : rhs) v[r] -= factor * v[row];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RatVec solve(const RatMat& a, const RatVec& b) {
  if (a.rows() != a.cols()) fail(ErrorCode::kInternal, "solve: not square");
  GeneralSolution s = solve_general(a, b);
  if (!s.consistent || !s.kernel.empty())
    fail(ErrorCode::kSingular, "singular system");
  return s.particular;
}

RatMat inverse(const RatMat& a) {
  if (a.rows() != a.cols()) fail(ErrorCode::kInternal, "inverse: not square");
  std::size_t n = a.rows();
  RatMat work = a;
  std::vector<RatVec> rhs;
  for (std::size_t c = 0; c < n; ++c) {
    RatVec e(n);
    e[c] = Rat(1);
    rhs.push_back(e);
  }
  auto pivots = rref(work, rhs);
  if (pivots.size() != n) fail(ErrorCode::kSingular, "singular matrix");
  RatMat inv(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) inv.at(r, c) = rhs[c][r];
  return inv;
}

GeneralSolution solve_general(const RatMat& a, const RatVec& b) {
  if (b.size() != a.rows()) fail(ErrorCode::kInternal, "solve_general: size mismatch");
  RatMat work = a;
  std::vector<RatVec> rhs{b};
  auto pivots = rref(work, rhs);
  const RatVec& r = rhs[0];

  GeneralSolution out;
  for (std::size_t row = pivots.size(); row < a.rows(); ++row)
    if (!r[row].is_zero()) return out;  // inconsistent
  out.consistent = true;
  out.particular.assign(a.cols(), Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) out.particular[pivots[i]] = r[i];

  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVec k(a.cols());
    k[free] = Rat(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) k[pivots[i]] = -work.at(i, free);
    out.kernel.push_back(std::move(k));
  }
  return out;
}

std::vector<RatVec> kernel_basis(const RatMat& a) {
  return solve_general(a, RatVec(a.rows())).kernel;
}

RowReduction row_reduce(const RatMat& a) {
  RowReduction out;
  out.cols = a.cols();
  RatMat work = a;
  std::vector<RatVec> rhs;
  for (std::size_t c = 0; c < a.rows(); ++c) {
    RatVec e(a.rows());
    e[c] = Rat(1);
    rhs.push_back(std::move(e));
  }
  out.pivots = rref(work, rhs);
  out.ops = RatMat(a.rows(), a.rows());
  for (std::size_t c = 0; c < a.rows(); ++c)
    for (std::size_t r = 0; r < a.rows(); ++r) out.ops.at(r, c) = rhs[c][r];
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : out.pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVec k(a.cols());
    k[free] = Rat(1);
    for (std::size_t i = 0; i < out.pivots.size(); ++i) k[out.pivots[i]] = -work.at(i, free);
    out.kernel.push_back(std::move(k));
  }
  return out;
}

std::optional<RatVec> RowReduction::particular(const RatVec& rhs) const {
  RatVec t = ops.mul(rhs);
  for (std::size_t row = pivots.size(); row < t.size(); ++row)
    if (!t[row].is_zero()) return std::nullopt;
  RatVec x(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = t[i];
  return x;
}

IntMat int_identity(std::size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Int det(const IntMat& m) {
  Rat d = det(to_rat(m));
  if (!d.is_integer()) fail(ErrorCode::kInternal, "integer det not integral");
  return d.num();
}

IntMat mul(const IntMat& a, const IntMat& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMat c(n, IntVec(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) fail(ErrorCode::kInternal, "mul: shape mismatch");
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < k; ++l) c[i][j] += a[i][l] * b[l][j];
  }
  return c;
}

IntVec mul(const IntMat& a, const IntVec& x) {
  IntVec y(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != x.size()) fail(ErrorCode::kInternal, "mul: size mismatch");
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  }
  return y;
}

RatMat to_rat(const IntMat& m) {
  RatMat r(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) r.at(i, j) = Rat(m[i][j]);
  return r;
}

IntMat unimodular_inverse(const IntMat& u) {
  Int d = det(u);
  if (d != 1 && d != -1) fail(ErrorCode::kInternal, "matrix is not unimodular");
  RatMat inv = inverse(to_rat(u));
  IntMat out(u.size(), IntVec(u.size()));
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) {
      const Rat& v = inv.at(i, j);
      if (!v.is_integer()) fail(ErrorCode::kInternal, "unimodular inverse not integral");
      out[i][j] = v.num();
    }
  return out;
}

}  // namespace liftreg

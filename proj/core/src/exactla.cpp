#include "lierig/exactla.hpp"

#include "lierig/error.hpp"

#include <algorithm>

namespace lierig {

std::size_t rank(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer den = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).get_num() * (den / m(r, c).get_den());
  }

  std::size_t pivot_row = 0;
  Integer previous = 1;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t found = pivot_row;
    while (found < rows && a[found][c] == 0) ++found;
    if (found == rows) continue;
    std::swap(a[found], a[pivot_row]);
    const Integer& pivot = a[pivot_row][c];
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = pivot * a[r][j] - a[r][c] * a[pivot_row][j];
        mpz_divexact(a[r][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      a[r][c] = 0;
    }
    previous = pivot;
    ++pivot_row;
  }
  return pivot_row;
}

RowReducer::RowReducer(std::size_t cols) : cols_(cols), work_(cols, Rational(0)) {}

bool RowReducer::add(const Vector& row) {
  if (row.size() != cols_) throw DimensionError("row length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) work_[c] = row[c];
  return reduce_and_insert();
}

bool RowReducer::add(const SparseRow& row) {
  for (const auto& [c, v] : row) {
    if (c >= cols_) throw DimensionError("sparse row column out of range");
    work_[c] += v;
  }
  return reduce_and_insert();
}

bool RowReducer::reduce_and_insert() {
  for (const auto& [p, prow] : pivots_) {
    if (sgn(work_[p]) == 0) continue;
    const Rational f = work_[p];
    for (const auto& [c, v] : prow) work_[c] -= f * v;
  }
  std::size_t lead = 0;
  while (lead < cols_ && sgn(work_[lead]) == 0) ++lead;
  if (lead == cols_) return false;

  const Rational inv = 1 / work_[lead];
  SparseRow row;
  for (std::size_t c = lead; c < cols_; ++c) {
    if (sgn(work_[c]) != 0) {
      row.emplace_back(c, work_[c] * inv);
      work_[c] = 0;
    }
  }
  pivots_.emplace(lead, std::move(row));
  reduced_ = false;
  return true;
}

void RowReducer::finish() const {
  if (reduced_) return;
  Vector buf(cols_, Rational(0));
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    auto& row = it->second;
    bool touched = false;
    for (const auto& [c, v] : row) {
      if (c != it->first && pivots_.count(c)) {
        touched = true;
        break;
      }
    }
    if (!touched) continue;
    for (const auto& [c, v] : row) buf[c] = v;
    for (auto later = pivots_.upper_bound(it->first); later != pivots_.end(); ++later) {
      if (sgn(buf[later->first]) == 0) continue;
      const Rational f = buf[later->first];
      for (const auto& [c, v] : later->second) buf[c] -= f * v;
    }
    SparseRow fresh;
    for (std::size_t c = it->first; c < cols_; ++c) {
      if (sgn(buf[c]) != 0) {
        fresh.emplace_back(c, buf[c]);
        buf[c] = 0;
      }
    }
    row = std::move(fresh);
  }
  reduced_ = true;
}

std::vector<Vector> RowReducer::reduced_rows() const {
  finish();
  std::vector<Vector> out;
  out.reserve(pivots_.size());
  for (const auto& [p, row] : pivots_) {
    Vector v(cols_, Rational(0));
    for (const auto& [c, x] : row) v[c] = x;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::size_t> RowReducer::pivot_columns() const {
  std::vector<std::size_t> out;
  out.reserve(pivots_.size());
  for (const auto& entry : pivots_) out.push_back(entry.first);
  return out;
}

std::vector<Vector> RowReducer::kernel_basis() const {
  finish();
  std::vector<long> free_index(cols_, -1);
  std::vector<Vector> basis;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (pivots_.count(c)) continue;
    free_index[c] = static_cast<long>(basis.size());
    Vector v(cols_, Rational(0));
    v[c] = 1;
    basis.push_back(std::move(v));
  }
  for (const auto& [p, row] : pivots_) {
    for (const auto& [c, x] : row) {
      if (free_index[c] >= 0) basis[static_cast<std::size_t>(free_index[c])][p] = -x;
    }
  }
  return basis;
}

EchelonForm rref(const Matrix& m) {
  RowReducer reducer(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) reducer.add(m.row(r));
  auto rows = reducer.reduced_rows();
  EchelonForm out;
  out.reduced = rows.empty() ? Matrix(0, m.cols()) : Matrix::from_rows(rows);
  out.pivots = reducer.pivot_columns();
  return out;
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  RowReducer reducer(ambient_dim);
  for (const auto& v : vectors) reducer.add(v);
  Subspace s(ambient_dim);
  s.basis_ = reducer.reduced_rows();
  s.pivots_ = reducer.pivot_columns();
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.basis_.push_back(unit_vector(ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Vector Subspace::residual(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("vector does not live in the ambient space");
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational f = r[pivots_[i]];
    if (sgn(f) != 0) axpy(r, -f, basis_[i]);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return is_zero(residual(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("ambient dimension mismatch");
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vector& v) { return contains(v); });
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw InputError("vector is not in the subspace");
  Vector c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

std::vector<std::size_t> Subspace::complement_coordinates() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (k < pivots_.size() && pivots_[k] == i) {
      ++k;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

Subspace nullspace(const Matrix& m) {
  RowReducer reducer(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) reducer.add(m.row(r));
  return Subspace::span(m.cols(), reducer.kernel_basis());
}

Subspace nullspace(std::size_t cols, const std::vector<SparseRow>& rows) {
  RowReducer reducer(cols);
  for (const auto& r : rows) reducer.add(r);
  return Subspace::span(cols, reducer.kernel_basis());
}

Subspace column_space(const Matrix& m) {
  std::vector<Vector> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace::span(m.rows(), cols);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ambient dimension mismatch");
  const std::size_t n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(n);
  // Equations cutting out b, evaluated on the basis of a.
  RowReducer b_equations(n);
  for (const auto& v : b.basis()) b_equations.add(v);
  const auto annihilator = b_equations.kernel_basis();
  RowReducer system(a.dim());
  for (const auto& y : annihilator) {
    Vector row(a.dim(), Rational(0));
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(y[k]) != 0 && sgn(a.basis()[i][k]) != 0) row[i] += y[k] * a.basis()[i][k];
      }
    }
    system.add(row);
  }
  std::vector<Vector> vectors;
  for (const auto& alpha : system.kernel_basis()) {
    Vector v = zero_vector(n);
    for (std::size_t i = 0; i < a.dim(); ++i) axpy(v, alpha[i], a.basis()[i]);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(n, vectors);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ambient dimension mismatch");
  std::vector<Vector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

bool contains(const Subspace& a, const Vector& v) { return a.contains(v); }

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side length mismatch");
  const std::size_t n = m.cols();
  RowReducer reducer(n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vector row = m.row(r);
    row.push_back(b[r]);
    reducer.add(row);
  }
  const auto pivots = reducer.pivot_columns();
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  const auto rows = reducer.reduced_rows();
  Vector x = zero_vector(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rows[i][n];
  return x;
}

bool is_nilpotent_matrix(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("nilpotency test needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return true;
  Matrix power = m;
  for (std::size_t k = 1; k < n; ++k) {
    if (power.is_zero()) return true;
    power = power * m;
  }
  return power.is_zero();
}

Polynomial characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("characteristic polynomial needs a square matrix");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  Matrix acc(n, n);
  const Matrix id = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    acc = m * acc + c[n - k + 1] * id;
    const Matrix product = m * acc;
    c[n - k] = -product.trace() / Rational(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

EigenSplit rational_eigen_split(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("eigenvalue split needs a square matrix");
  EigenSplit out;
  if (m.rows() == 0) {
    out.residual = Polynomial(std::vector<Rational>{Rational(1)});
    return out;
  }
  auto split = split_rational_roots(characteristic_polynomial(m));
  out.rational_roots = std::move(split.roots);
  out.residual = std::move(split.residual);
  out.residual_degree = static_cast<std::size_t>(std::max(out.residual.degree(), 0));
  out.residual_real_roots = count_real_roots(out.residual);
  return out;
}

}  // namespace lierig

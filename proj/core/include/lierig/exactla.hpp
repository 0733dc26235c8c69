#pragma once

#include "lierig/matrix.hpp"
#include "lierig/polynomial.hpp"
#include "lierig/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace lierig {

/// Rank by fraction-free (Bareiss) elimination over the integers.
std::size_t rank(const Matrix& m);

/// Sparse row: (column, value) pairs with strictly increasing columns and nonzero values.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Incremental Gauss-Jordan elimination. Rows are reduced against the pivots
/// seen so far as they arrive; `finish` brings the pivot rows to reduced form.
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols);

  /// Returns true if the row was independent of those already added.
  bool add(const Vector& row);
  bool add(const SparseRow& row);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }

  /// Reduced row echelon rows, ordered by pivot column.
  std::vector<Vector> reduced_rows() const;
  std::vector<std::size_t> pivot_columns() const;
  /// Basis of {x : row . x = 0 for every added row}, one vector per free column.
  std::vector<Vector> kernel_basis() const;

 private:
  bool reduce_and_insert();
  void finish() const;

  std::size_t cols_;
  Vector work_;
  // pivot column -> row with a 1 at the pivot and zeros before it
  mutable std::map<std::size_t, SparseRow> pivots_;
  mutable bool reduced_ = true;
};

struct EchelonForm {
  Matrix reduced;                    // nonzero rows only
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form.
EchelonForm rref(const Matrix& m);

/// A subspace of Q^n stored by its reduced row echelon basis, so equal
/// subspaces have identical representations.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace whole(std::size_t ambient_dim);
  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its projection along pivot coordinates; zero iff v is in the subspace.
  Vector residual(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v in the echelon basis. Requires contains(v).
  Vector coordinates(const Vector& v) const;
  /// Standard basis indices not used as pivots; their unit vectors span a complement.
  std::vector<std::size_t> complement_coordinates() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Kernel of m as a canonical subspace of Q^cols.
Subspace nullspace(const Matrix& m);
/// Kernel of a system given row by row.
Subspace nullspace(std::size_t cols, const std::vector<SparseRow>& rows);
Subspace column_space(const Matrix& m);

Subspace subspace_intersect(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const Vector& v);

/// Solves m x = b, returning some solution if one exists.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// True iff m^n = 0 for the n x n matrix m. Throws DimensionError if not square.
bool is_nilpotent_matrix(const Matrix& m);

/// det(x I - m), by the Faddeev-LeVerrier recurrence.
Polynomial characteristic_polynomial(const Matrix& m);

struct EigenSplit {
  std::vector<std::pair<Rational, std::size_t>> rational_roots;  // ascending
  std::size_t residual_degree = 0;
  Polynomial residual;                 // monic factor with no rational roots
  std::size_t residual_real_roots = 0; // distinct real (hence irrational) roots of residual
};

EigenSplit rational_eigen_split(const Matrix& m);

}  // namespace lierig

#pragma once

#include "lierig/error.hpp"
#include "lierig/matrix.hpp"
#include "lierig/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lierig {

/// Sparse structure constants c_{ij}^k, stored for i < j only. Not yet known
/// to satisfy the Jacobi identity; see LieAlgebra::validated.
class StructureConstants {
 public:
  using Bracket = std::map<std::size_t, Rational>;  // k -> c_{ij}^k, zeros dropped
  using Table = std::map<std::pair<std::size_t, std::size_t>, Bracket>;

  StructureConstants() = default;
  StructureConstants(std::string name, std::size_t dim);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::size_t dim() const { return dim_; }

  /// Optional basis labels; empty means e0, e1, ...
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::string label(std::size_t i) const;

  /// Sets c_{ij}^k. For i > j the antisymmetric partner c_{ji}^k = -value is stored.
  void set(std::size_t i, std::size_t j, std::size_t k, const Rational& value);
  /// c_{ij}^k for any i, j.
  Rational get(std::size_t i, std::size_t j, std::size_t k) const;
  /// [e_i, e_j] as a dense vector.
  Vector bracket_basis(std::size_t i, std::size_t j) const;

  const Table& table() const { return table_; }

  friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  std::string name_;
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  Table table_;
};

struct JacobiViolation {
  std::size_t i, j, k;
  Vector residual;
};

/// Jacobi sums over all basis triples i < j < k; empty means the table is a Lie algebra.
std::vector<JacobiViolation> validate_jacobi(const StructureConstants& sc);

class JacobiError : public InputError {
 public:
  JacobiError(const std::string& what, std::vector<JacobiViolation> violations)
      : InputError(what), violations_(std::move(violations)) {}
  const std::vector<JacobiViolation>& violations() const { return violations_; }

 private:
  std::vector<JacobiViolation> violations_;
};

/// A Jacobi-validated Lie algebra over Q. The only way to obtain one is
/// through `validated`, so every downstream routine may assume the identity.
class LieAlgebra {
 public:
  static LieAlgebra validated(StructureConstants sc);

  const std::string& name() const { return sc_.name(); }
  std::size_t dim() const { return sc_.dim(); }
  const StructureConstants& structure() const { return sc_; }
  std::string label(std::size_t i) const { return sc_.label(i); }

  Vector bracket(const Vector& u, const Vector& v) const;
  const Vector& bracket_basis(std::size_t i, std::size_t j) const;
  /// ad(e_i) as a matrix: column j is [e_i, e_j].
  const Matrix& ad_basis(std::size_t i) const { return ad_.at(i); }
  Matrix ad(const Vector& x) const;

  Vector basis_vector(std::size_t i) const { return unit_vector(dim(), i); }

  /// Same algebra under a new display name.
  LieAlgebra renamed(std::string name) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.sc_ == b.sc_; }

 private:
  explicit LieAlgebra(StructureConstants sc);

  StructureConstants sc_;
  std::vector<Matrix> ad_;
  std::vector<Vector> brackets_;  // dense [e_i, e_j], row-major over (i, j)
};

}  // namespace lierig

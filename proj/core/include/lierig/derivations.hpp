#pragma once

#include "lierig/exactla.hpp"
#include "lierig/lie_algebra.hpp"

#include <string>
#include <vector>

namespace lierig {

/// A subspace of gl(n) held by a canonical basis of n x n matrices: the
/// echelon basis of the column-major flattening.
class OperatorAlgebra {
 public:
  OperatorAlgebra() = default;
  static OperatorAlgebra span(std::size_t n, const std::vector<Matrix>& generators);
  /// Smallest commutator-closed span containing the generators.
  static OperatorAlgebra generated_by(std::size_t n, const std::vector<Matrix>& generators);

  std::size_t degree() const { return n_; }
  std::size_t dim() const { return ops_.size(); }
  const std::vector<Matrix>& ops() const { return ops_; }
  const Subspace& flattened() const { return span_; }

  bool contains(const Matrix& m) const;
  Vector coordinates(const Matrix& m) const;
  bool is_closed() const;

  /// Structure constants of the span under commutators. Throws InputError if not closed.
  LieAlgebra as_lie_algebra(const std::string& name) const;

 private:
  std::size_t n_ = 0;
  Subspace span_;
  std::vector<Matrix> ops_;
};

/// D[x,y] = [Dx,y] + [x,Dy] on all basis pairs.
bool is_derivation(const LieAlgebra& L, const Matrix& d);

/// Der(L): solution space of the n^2-unknown derivation system.
OperatorAlgebra derivation_algebra(const LieAlgebra& L);

/// Engel chain V_0 = Q^n, V_{k+1} = span{D v}; true iff it reaches 0.
bool engel_all_nilpotent(const OperatorAlgebra& a);

/// h (+) L with [D,D'] = DD' - D'D, [D,v] = Dv, [v,w] = [v,w]_L. Basis: h's ops first.
LieAlgebra semidirect(const OperatorAlgebra& h, const LieAlgebra& L, const std::string& name = {});

struct CharNilpotencyReport {
  std::size_t der_dim = 0;
  bool via_der_nilpotent = false;
  bool via_all_elements_nilpotent = false;
  bool via_semidirect_nilpotent = false;
  bool agree = false;
};

/// Evaluates the three equivalent characterizations independently. Requires dim L > 1.
CharNilpotencyReport is_characteristically_nilpotent(const LieAlgebra& L);

OperatorAlgebra inner_derivations(const LieAlgebra& L);
std::size_t outer_derivation_dim(const LieAlgebra& L);

}  // namespace lierig

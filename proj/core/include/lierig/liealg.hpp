#pragma once

#include "lierig/exactla.hpp"
#include "lierig/lie_algebra.hpp"
#include "lierig/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lierig {

enum class SeriesKind { LowerCentral, Derived };

struct SeriesReport {
  SeriesKind kind = SeriesKind::LowerCentral;
  std::vector<Subspace> terms;  // strictly decreasing dimensions
  std::size_t stabilized_dim = 0;

  std::vector<std::size_t> dims() const;
};

/// span{[a, b] : a in A, b in B}
Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b);

SeriesReport lower_central_series(const LieAlgebra& L);
SeriesReport derived_series(const LieAlgebra& L);

bool is_nilpotent(const LieAlgebra& L);
bool is_solvable(const LieAlgebra& L);
/// Length of the lower central series for nilpotent L; nullopt otherwise.
std::optional<std::size_t> nilpotency_class(const LieAlgebra& L);

enum class FlagStatus { Yes, No, Undecided };
std::string to_string(FlagStatus s);

struct FlagWitness {
  std::size_t stage = 0;         // dimension of the ideal reached before failing
  std::size_t element = 0;       // basis index in L whose adjoint witnesses the obstruction
  std::size_t residual_degree = 0;  // degree of its factor without rational roots (0: no common eigenvector at all)
  Polynomial residual;
};

struct FlagVerdict {
  FlagStatus status = FlagStatus::Undecided;
  std::vector<Subspace> flag;  // ideals of dims 0..n when status == Yes
  std::optional<FlagWitness> witness;
};

/// Searches for a full flag of ideals 0 = a_0 < a_1 < ... < a_n = L with
/// dim a_i = i, one rational common eigenvector of the quotient at a time.
FlagVerdict completely_solvable_flag(const LieAlgebra& L);

Subspace center(const LieAlgebra& L);
Subspace centralizer(const LieAlgebra& L, const Subspace& s);
Subspace normalizer_subalgebra(const LieAlgebra& L, const Subspace& s);

bool is_subalgebra(const LieAlgebra& L, const Subspace& w);
bool is_ideal(const LieAlgebra& L, const Subspace& w);
bool is_abelian(const LieAlgebra& L, const Subspace& w);

/// L / I on the basis given by I's complement coordinates (lowest indices first).
LieAlgebra quotient(const LieAlgebra& L, const Subspace& ideal);

/// Image of x in quotient(L, ideal) coordinates.
Vector project_to_quotient(const Subspace& ideal, const Vector& x);

/// a (+) b with a's basis first.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace lierig

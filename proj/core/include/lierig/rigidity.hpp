#pragma once

#include "lierig/derivations.hpp"
#include "lierig/exactla.hpp"
#include "lierig/lie_algebra.hpp"
#include "lierig/liealg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lierig {

class EmbeddingError : public InputError {
 public:
  using InputError::InputError;
};

/// A certified injective homomorphism phi: domain -> codomain. The matrix is
/// dim(codomain) x dim(domain); column j is phi(e_j).
class Embedding {
 public:
  /// Throws EmbeddingError on size mismatch, rank deficiency, or a bracket pair
  /// that is not preserved (reported with its residual).
  static Embedding certify(LieAlgebra domain, LieAlgebra codomain, Matrix matrix);

  const LieAlgebra& domain() const { return domain_; }
  const LieAlgebra& codomain() const { return codomain_; }
  const Matrix& matrix() const { return matrix_; }

  Subspace image() const;
  /// phi^{-1} on the image. Throws if v is not in the image.
  Vector preimage(const Vector& v) const;

 private:
  Embedding(LieAlgebra domain, LieAlgebra codomain, Matrix matrix);

  LieAlgebra domain_;
  LieAlgebra codomain_;
  Matrix matrix_;
};

/// phi embedded as the last dim(domain) coordinates (the ideal factor of h x L).
Matrix tail_inclusion(std::size_t domain_dim, std::size_t codomain_dim);
Matrix head_inclusion(std::size_t domain_dim, std::size_t codomain_dim);

Subspace normalizer_of_image(const Embedding& e);
Subspace centralizer_of_image(const Embedding& e);
bool is_ideal_image(const Embedding& e);

/// X -> phi^{-1} o ad(X)|_{phi(l)} o phi on the normalizer of phi(l).
struct GoingThroughDifferential {
  Subspace normalizer;                 // in the codomain
  std::vector<Matrix> images;          // one derivation of the domain per normalizer basis vector
  Subspace image;                      // span of the images, flattened (dim l)^2
  Subspace kernel;                     // in the codomain
};

GoingThroughDifferential going_through_differential(const Embedding& e);

/// Hom_lin(l, g) is flattened column-major: entry (i, j) of a dim g x dim l matrix at j * dim g + i.
Subspace cocycle_space(const Embedding& e);
Subspace coboundary_space(const Embedding& e);
Subspace vertical_subspace(const Embedding& e);

/// True iff c[x,y] = [c x, phi y] + [phi x, c y] on all basis pairs.
bool is_cocycle(const Embedding& e, const Matrix& c);
/// True iff [c x, c y] = 0 on all basis pairs, i.e. phi + t c is a homomorphism for every t.
bool is_linearly_integrable(const Embedding& e, const Matrix& c);

enum class VerdictStatus { RigidInfinitesimally, NotRigid, Undecided };
std::string to_string(VerdictStatus s);

struct Verdict {
  VerdictStatus status = VerdictStatus::Undecided;
  /// Certified witness cocycle for NotRigid; candidate cocycle for Undecided.
  std::optional<Vector> witness;
  /// Derivation D with witness = phi o D, when the witness comes from the vertical subspace.
  std::optional<Matrix> derivation;
  std::string reason;
};

struct RigidityReport {
  bool is_ideal = false;
  std::size_t normalizer_dim = 0;
  std::size_t centralizer_dim = 0;
  std::size_t der_dim = 0;
  std::size_t gtd_image_dim = 0;
  std::size_t z1_dim = 0;
  std::size_t b1_dim = 0;
  std::size_t vertical_subspace_dim = 0;
  bool gtd_surjective = false;
  bool vertical_in_coboundaries = false;
  Verdict vertical;
  Verdict horizontal;
  Verdict local;
};

/// Tangent-level vertical / horizontal / local verdicts (with trivial H).
RigidityReport rigidity_report(const Embedding& e);

enum class ObstructionStatus { Obstructed, NoObstruction, Undecided };
std::string to_string(ObstructionStatus s);

struct ObstructionVerdict {
  ObstructionStatus status = ObstructionStatus::Undecided;
  bool g_nilpotent = false;
  bool der_nilpotent = false;
  FlagStatus g_flag = FlagStatus::Undecided;
  FlagStatus der_flag = FlagStatus::Undecided;
  std::string reason;
};

/// No vertically rigid embeddings of l into g exist when g is nilpotent and Der(l)
/// is not, or when g is completely solvable and Der(l) is not.
ObstructionVerdict theorem_obstruction(const LieAlgebra& l, const LieAlgebra& g);

struct AbelianUniqueness {
  bool unique = false;
  std::size_t kernel_dim = 0;
  std::size_t transversal_index = 0;            // basis index of x0 outside A
  std::optional<Subspace> second_subalgebra;    // another abelian subalgebra of the same dimension
  std::string note;
};

/// Decides whether the abelian codimension-one ideal A is the only abelian
/// subalgebra of its dimension.
AbelianUniqueness unique_codim1_abelian(const LieAlgebra& L, const Subspace& a);

}  // namespace lierig

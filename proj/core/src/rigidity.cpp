#include "lierig/rigidity.hpp"

#include "lierig/error.hpp"

#include <map>
#include <sstream>

namespace lierig {

Embedding::Embedding(LieAlgebra domain, LieAlgebra codomain, Matrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {}

Embedding Embedding::certify(LieAlgebra domain, LieAlgebra codomain, Matrix matrix) {
  if (matrix.rows() != codomain.dim() || matrix.cols() != domain.dim()) {
    std::ostringstream os;
    os << "embedding matrix is " << matrix.rows() << "x" << matrix.cols() << ", expected " << codomain.dim() << "x"
       << domain.dim();
    throw EmbeddingError(os.str());
  }
  const std::size_t r = rank(matrix);
  if (r != domain.dim()) {
    throw EmbeddingError("embedding matrix has rank " + std::to_string(r) + " < " + std::to_string(domain.dim()) +
                         " (not injective)");
  }
  for (std::size_t i = 0; i < domain.dim(); ++i) {
    for (std::size_t j = i + 1; j < domain.dim(); ++j) {
      const Vector lhs = matrix.apply(domain.bracket_basis(i, j));
      const Vector rhs = codomain.bracket(matrix.column(i), matrix.column(j));
      if (lhs != rhs) {
        std::ostringstream os;
        os << "bracket of basis pair (" << i << "," << j << ") is not preserved; residual (";
        const Vector d = lhs - rhs;
        for (std::size_t k = 0; k < d.size(); ++k) os << (k ? "," : "") << d[k].get_str();
        os << ")";
        throw EmbeddingError(os.str());
      }
    }
  }
  return Embedding(std::move(domain), std::move(codomain), std::move(matrix));
}

Subspace Embedding::image() const { return column_space(matrix_); }

Vector Embedding::preimage(const Vector& v) const {
  auto x = solve(matrix_, v);
  if (!x) throw InputError("vector is not in the image of the embedding");
  return *x;
}

Matrix tail_inclusion(std::size_t domain_dim, std::size_t codomain_dim) {
  if (domain_dim > codomain_dim) throw DimensionError("inclusion into a smaller algebra");
  Matrix m(codomain_dim, domain_dim);
  for (std::size_t j = 0; j < domain_dim; ++j) m(codomain_dim - domain_dim + j, j) = 1;
  return m;
}

Matrix head_inclusion(std::size_t domain_dim, std::size_t codomain_dim) {
  if (domain_dim > codomain_dim) throw DimensionError("inclusion into a smaller algebra");
  Matrix m(codomain_dim, domain_dim);
  for (std::size_t j = 0; j < domain_dim; ++j) m(j, j) = 1;
  return m;
}

Subspace normalizer_of_image(const Embedding& e) { return normalizer_subalgebra(e.codomain(), e.image()); }

Subspace centralizer_of_image(const Embedding& e) { return centralizer(e.codomain(), e.image()); }

bool is_ideal_image(const Embedding& e) { return normalizer_of_image(e).dim() == e.codomain().dim(); }

GoingThroughDifferential going_through_differential(const Embedding& e) {
  const LieAlgebra& l = e.domain();
  const LieAlgebra& g = e.codomain();
  GoingThroughDifferential out;
  out.normalizer = normalizer_of_image(e);
  std::vector<Vector> flat;
  for (const auto& x : out.normalizer.basis()) {
    const Matrix restricted = g.ad(x) * e.matrix();
    Matrix d(l.dim(), l.dim());
    for (std::size_t j = 0; j < l.dim(); ++j) {
      auto pre = solve(e.matrix(), restricted.column(j));
      if (!pre) throw InternalError("normalizer element does not stabilize the image");
      d.set_column(j, *pre);
    }
    if (!is_derivation(l, d)) throw InternalError("going-through image is not a derivation");
    flat.push_back(flatten(d));
    out.images.push_back(std::move(d));
  }
  out.image = Subspace::span(l.dim() * l.dim(), flat);
  out.kernel = centralizer_of_image(e);
  if (out.image.dim() + out.kernel.dim() != out.normalizer.dim()) {
    throw InternalError("going-through differential: rank + kernel != normalizer dimension");
  }
  return out;
}

namespace {

std::size_t hom_index(std::size_t codomain_dim, std::size_t i, std::size_t j) { return j * codomain_dim + i; }

void require_contained(const Subspace& outer, const Subspace& inner, const char* what) {
  if (!outer.contains(inner)) throw InternalError(std::string(what) + " is not contained in the cocycle space");
}

Subspace cocycles_unchecked(const Embedding& e) {
  const LieAlgebra& l = e.domain();
  const LieAlgebra& g = e.codomain();
  const std::size_t dl = l.dim();
  const std::size_t dg = g.dim();
  std::vector<Matrix> ad_phi(dl);
  for (std::size_t j = 0; j < dl; ++j) ad_phi[j] = g.ad(e.matrix().column(j));

  std::vector<SparseRow> rows;
  std::map<std::size_t, Rational> acc;
  for (std::size_t a = 0; a < dl; ++a) {
    for (std::size_t b = a + 1; b < dl; ++b) {
      const Vector& cab = l.bracket_basis(a, b);
      for (std::size_t k = 0; k < dg; ++k) {
        acc.clear();
        // c([e_a, e_b]) + ad(phi e_b) c(e_a) - ad(phi e_a) c(e_b) = 0, component k
        for (std::size_t m = 0; m < dl; ++m)
          if (sgn(cab[m]) != 0) acc[hom_index(dg, k, m)] += cab[m];
        for (std::size_t i = 0; i < dg; ++i) {
          const Rational& p = ad_phi[b](k, i);
          if (sgn(p) != 0) acc[hom_index(dg, i, a)] += p;
          const Rational& q = ad_phi[a](k, i);
          if (sgn(q) != 0) acc[hom_index(dg, i, b)] -= q;
        }
        SparseRow row;
        for (auto& [col, v] : acc)
          if (sgn(v) != 0) row.emplace_back(col, v);
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }
  return nullspace(dl * dg, rows);
}

Subspace coboundaries_unchecked(const Embedding& e) {
  const LieAlgebra& g = e.codomain();
  std::vector<Vector> flat;
  for (std::size_t x = 0; x < g.dim(); ++x) flat.push_back(flatten(g.ad_basis(x) * e.matrix()));
  return Subspace::span(g.dim() * e.domain().dim(), flat);
}

Subspace vertical_unchecked(const Embedding& e, const OperatorAlgebra& der) {
  std::vector<Vector> flat;
  for (const auto& d : der.ops()) flat.push_back(flatten(e.matrix() * d));
  return Subspace::span(e.codomain().dim() * e.domain().dim(), flat);
}

}  // namespace

Subspace cocycle_space(const Embedding& e) { return cocycles_unchecked(e); }

Subspace coboundary_space(const Embedding& e) {
  Subspace b = coboundaries_unchecked(e);
  require_contained(cocycles_unchecked(e), b, "coboundary space");
  return b;
}

Subspace vertical_subspace(const Embedding& e) {
  Subspace v = vertical_unchecked(e, derivation_algebra(e.domain()));
  require_contained(cocycles_unchecked(e), v, "vertical subspace");
  return v;
}

bool is_cocycle(const Embedding& e, const Matrix& c) {
  const LieAlgebra& l = e.domain();
  const LieAlgebra& g = e.codomain();
  if (c.rows() != g.dim() || c.cols() != l.dim()) throw DimensionError("cochain has the wrong size");
  for (std::size_t a = 0; a < l.dim(); ++a) {
    for (std::size_t b = a + 1; b < l.dim(); ++b) {
      const Vector lhs = c.apply(l.bracket_basis(a, b));
      const Vector rhs = g.bracket(c.column(a), e.matrix().column(b)) + g.bracket(e.matrix().column(a), c.column(b));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool is_linearly_integrable(const Embedding& e, const Matrix& c) {
  const LieAlgebra& g = e.codomain();
  for (std::size_t a = 0; a < c.cols(); ++a)
    for (std::size_t b = a + 1; b < c.cols(); ++b)
      if (!is_zero(g.bracket(c.column(a), c.column(b)))) return false;
  return true;
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::RigidInfinitesimally: return "RigidInfinitesimally";
    case VerdictStatus::NotRigid: return "NotRigid";
    case VerdictStatus::Undecided: return "Undecided";
  }
  return "Undecided";
}

namespace {

// First basis vector of `space` outside `excluded` whose line phi + t c stays
// inside Hom(l, g); falls back to the first one outside as a candidate.
Verdict scan_complement(const Embedding& e, const Subspace& space, const Subspace& excluded, const std::string& what) {
  Verdict v;
  for (const auto& c : space.basis()) {
    if (excluded.contains(c)) continue;
    const Matrix cm = unflatten(c, e.codomain().dim(), e.domain().dim());
    if (is_linearly_integrable(e, cm)) {
      v.status = VerdictStatus::NotRigid;
      v.witness = c;
      v.reason = "cocycle outside " + what + " with phi + t*c a homomorphism for all t";
      return v;
    }
    if (!v.witness) v.witness = c;
  }
  v.status = VerdictStatus::Undecided;
  v.reason = "cocycles outside " + what + " exist but none in the echelon basis is certified integrable";
  return v;
}

}  // namespace

RigidityReport rigidity_report(const Embedding& e) {
  const OperatorAlgebra der = derivation_algebra(e.domain());
  const GoingThroughDifferential gtd = going_through_differential(e);
  const Subspace z1 = cocycles_unchecked(e);
  const Subspace b1 = coboundaries_unchecked(e);
  const Subspace vert = vertical_unchecked(e, der);
  require_contained(z1, b1, "coboundary space");
  require_contained(z1, vert, "vertical subspace");

  RigidityReport r;
  r.normalizer_dim = gtd.normalizer.dim();
  r.is_ideal = r.normalizer_dim == e.codomain().dim();
  r.centralizer_dim = gtd.kernel.dim();
  r.der_dim = der.dim();
  r.gtd_image_dim = gtd.image.dim();
  r.z1_dim = z1.dim();
  r.b1_dim = b1.dim();
  r.vertical_subspace_dim = vert.dim();
  r.gtd_surjective = gtd.image.dim() == der.dim();
  r.vertical_in_coboundaries = b1.contains(vert);
  if (r.gtd_surjective != r.vertical_in_coboundaries) {
    throw InternalError("vertical tests disagree: going-through surjectivity vs vertical subspace in B1");
  }

  if (r.vertical_in_coboundaries) {
    r.vertical.status = VerdictStatus::RigidInfinitesimally;
    r.vertical.reason = "going-through differential is onto Der(l)";
  } else {
    for (const auto& d : der.ops()) {
      const Vector c = flatten(e.matrix() * d);
      if (b1.contains(c)) continue;
      r.vertical.status = VerdictStatus::NotRigid;
      r.vertical.witness = c;
      r.vertical.derivation = d;
      r.vertical.reason = "derivation D with phi o D outside B1; phi o exp(tD) leaves the orbit";
      break;
    }
    if (r.vertical.status != VerdictStatus::NotRigid) throw InternalError("no vertical witness found");
  }

  const Subspace b1_plus_v = subspace_sum(b1, vert);
  if (b1_plus_v == z1) {
    r.horizontal.status = VerdictStatus::RigidInfinitesimally;
    r.horizontal.reason = "Z1 = B1 + vertical subspace";
  } else {
    r.horizontal = scan_complement(e, z1, b1_plus_v, "B1 + vertical subspace");
  }

  if (b1 == z1) {
    r.local.status = VerdictStatus::RigidInfinitesimally;
    r.local.reason = "Z1 = B1";
  } else if (r.vertical.status == VerdictStatus::NotRigid) {
    r.local = r.vertical;
  } else if (r.horizontal.status == VerdictStatus::NotRigid) {
    r.local = r.horizontal;
  } else {
    r.local = scan_complement(e, z1, b1, "B1");
  }
  return r;
}

std::string to_string(ObstructionStatus s) {
  switch (s) {
    case ObstructionStatus::Obstructed: return "Obstructed";
    case ObstructionStatus::NoObstruction: return "NoObstruction";
    case ObstructionStatus::Undecided: return "Undecided";
  }
  return "Undecided";
}

ObstructionVerdict theorem_obstruction(const LieAlgebra& l, const LieAlgebra& g) {
  const LieAlgebra der = derivation_algebra(l).as_lie_algebra("Der(" + l.name() + ")");
  ObstructionVerdict v;
  v.g_nilpotent = is_nilpotent(g);
  v.der_nilpotent = is_nilpotent(der);
  v.g_flag = completely_solvable_flag(g).status;
  v.der_flag = completely_solvable_flag(der).status;
  if (v.g_nilpotent && !v.der_nilpotent) {
    v.status = ObstructionStatus::Obstructed;
    v.reason = "g is nilpotent and Der(l) is not";
  } else if (v.g_flag == FlagStatus::Yes && v.der_flag == FlagStatus::No) {
    v.status = ObstructionStatus::Obstructed;
    v.reason = "g is completely solvable and Der(l) is not";
  } else if ((v.g_flag == FlagStatus::Undecided && v.der_flag != FlagStatus::Yes) ||
             (v.g_flag == FlagStatus::Yes && v.der_flag == FlagStatus::Undecided)) {
    v.status = ObstructionStatus::Undecided;
    v.reason = "complete solvability could not be decided over Q";
  } else {
    v.status = ObstructionStatus::NoObstruction;
    v.reason = "neither hypothesis applies";
  }
  return v;
}

AbelianUniqueness unique_codim1_abelian(const LieAlgebra& L, const Subspace& a) {
  if (a.ambient_dim() != L.dim()) throw DimensionError("subspace is not in the algebra");
  if (a.dim() + 1 != L.dim()) throw InputError("subspace does not have codimension one");
  if (!is_abelian(L, a)) throw InputError("subspace is not abelian");
  if (!is_ideal(L, a)) throw InputError("subspace is not an ideal");

  AbelianUniqueness out;
  out.transversal_index = a.complement_coordinates().front();
  const Matrix& ad = L.ad_basis(out.transversal_index);
  if (a.dim() == 0) {
    out.unique = true;
    return out;
  }
  // ad(x0) restricted to A, in A's echelon coordinates
  std::vector<Vector> columns;
  for (const auto& v : a.basis()) columns.push_back(ad.apply(v));
  const Subspace kernel_coords = nullspace(Matrix::from_columns(L.dim(), columns));
  std::vector<Vector> kernel;
  for (const auto& alpha : kernel_coords.basis()) {
    Vector v = zero_vector(L.dim());
    for (std::size_t i = 0; i < alpha.size(); ++i) axpy(v, alpha[i], a.basis()[i]);
    kernel.push_back(std::move(v));
  }
  out.kernel_dim = kernel.size();
  out.unique = out.kernel_dim + 1 < a.dim();
  if (!out.unique) {
    std::vector<Vector> gens{L.basis_vector(out.transversal_index)};
    gens.insert(gens.end(), kernel.begin(), kernel.begin() + static_cast<std::ptrdiff_t>(a.dim() - 1));
    Subspace w = Subspace::span(L.dim(), gens);
    if (w.dim() != a.dim() || w == a || !is_subalgebra(L, w) || !is_abelian(L, w)) {
      throw InternalError("constructed second abelian subalgebra failed verification");
    }
    out.second_subalgebra = std::move(w);
  } else if (a.dim() == 3) {
    out.note = "unique already at dim A = 3: the kernel test does not need dim A > 3";
  }
  return out;
}

}  // namespace lierig

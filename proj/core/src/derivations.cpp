#include "lierig/derivations.hpp"

#include "lierig/error.hpp"
#include "lierig/liealg.hpp"

#include <map>

namespace lierig {

OperatorAlgebra OperatorAlgebra::span(std::size_t n, const std::vector<Matrix>& generators) {
  std::vector<Vector> flat;
  flat.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n) throw DimensionError("operator has the wrong size");
    flat.push_back(flatten(g));
  }
  OperatorAlgebra a;
  a.n_ = n;
  a.span_ = Subspace::span(n * n, flat);
  for (const auto& v : a.span_.basis()) a.ops_.push_back(unflatten(v, n, n));
  return a;
}

OperatorAlgebra OperatorAlgebra::generated_by(std::size_t n, const std::vector<Matrix>& generators) {
  OperatorAlgebra a = span(n, generators);
  for (;;) {
    std::vector<Matrix> grown = a.ops_;
    for (std::size_t i = 0; i < a.ops_.size(); ++i)
      for (std::size_t j = i + 1; j < a.ops_.size(); ++j) grown.push_back(commutator(a.ops_[i], a.ops_[j]));
    OperatorAlgebra next = span(n, grown);
    if (next.dim() == a.dim()) return a;
    a = std::move(next);
  }
}

bool OperatorAlgebra::contains(const Matrix& m) const {
  if (m.rows() != n_ || m.cols() != n_) throw DimensionError("operator has the wrong size");
  return span_.contains(flatten(m));
}

Vector OperatorAlgebra::coordinates(const Matrix& m) const { return span_.coordinates(flatten(m)); }

bool OperatorAlgebra::is_closed() const {
  for (std::size_t i = 0; i < ops_.size(); ++i)
    for (std::size_t j = i + 1; j < ops_.size(); ++j)
      if (!contains(commutator(ops_[i], ops_[j]))) return false;
  return true;
}

LieAlgebra OperatorAlgebra::as_lie_algebra(const std::string& name) const {
  StructureConstants sc(name, ops_.size());
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < ops_.size(); ++a) labels.push_back("D" + std::to_string(a));
  sc.set_labels(labels);
  for (std::size_t a = 0; a < ops_.size(); ++a) {
    for (std::size_t b = a + 1; b < ops_.size(); ++b) {
      const Vector flat = flatten(commutator(ops_[a], ops_[b]));
      if (!span_.contains(flat)) throw InputError("operator family is not closed under commutators");
      const Vector c = span_.coordinates(flat);
      for (std::size_t k = 0; k < c.size(); ++k)
        if (sgn(c[k]) != 0) sc.set(a, b, k, c[k]);
    }
  }
  return LieAlgebra::validated(std::move(sc));
}

bool is_derivation(const LieAlgebra& L, const Matrix& d) {
  const std::size_t n = L.dim();
  if (d.rows() != n || d.cols() != n) throw DimensionError("derivation candidate has the wrong size");
  std::vector<Vector> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = d.column(i);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector lhs = d.apply(L.bracket_basis(i, j));
      const Vector rhs = L.bracket(images[i], L.basis_vector(j)) + L.bracket(L.basis_vector(i), images[j]);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

OperatorAlgebra derivation_algebra(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  // Unknown D(r,c) sits at c*n + r (column-major).
  auto unknown = [n](std::size_t r, std::size_t c) { return c * n + r; };
  std::vector<SparseRow> rows;
  std::map<std::size_t, Rational> acc;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector& cij = L.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        acc.clear();
        // (D [e_i, e_j])_k
        for (std::size_t m = 0; m < n; ++m)
          if (sgn(cij[m]) != 0) acc[unknown(k, m)] += cij[m];
        // - ([D e_i, e_j])_k - ([e_i, D e_j])_k
        for (std::size_t m = 0; m < n; ++m) {
          const Rational& a = L.bracket_basis(m, j)[k];
          if (sgn(a) != 0) acc[unknown(m, i)] -= a;
          const Rational& b = L.bracket_basis(i, m)[k];
          if (sgn(b) != 0) acc[unknown(m, j)] -= b;
        }
        SparseRow row;
        for (auto& [col, v] : acc)
          if (sgn(v) != 0) row.emplace_back(col, v);
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }
  const Subspace solutions = nullspace(n * n, rows);
  std::vector<Matrix> ops;
  ops.reserve(solutions.dim());
  for (const auto& v : solutions.basis()) ops.push_back(unflatten(v, n, n));
  return OperatorAlgebra::span(n, ops);
}

bool engel_all_nilpotent(const OperatorAlgebra& a) {
  const std::size_t n = a.degree();
  Subspace chain = Subspace::whole(n);
  while (chain.dim() > 0) {
    std::vector<Vector> images;
    for (const auto& d : a.ops())
      for (const auto& v : chain.basis()) images.push_back(d.apply(v));
    Subspace next = Subspace::span(n, images);
    if (next.dim() == chain.dim()) return false;
    chain = std::move(next);
  }
  return true;
}

LieAlgebra semidirect(const OperatorAlgebra& h, const LieAlgebra& L, const std::string& name) {
  const std::size_t n = L.dim();
  if (h.degree() != n) throw DimensionError("operators do not act on the algebra");
  for (std::size_t a = 0; a < h.dim(); ++a) {
    if (!is_derivation(L, h.ops()[a])) {
      throw InputError("operator " + std::to_string(a) + " is not a derivation of '" + L.name() + "'");
    }
  }
  const LieAlgebra hl = h.as_lie_algebra("h");
  const std::size_t m = h.dim();
  StructureConstants sc(name.empty() ? "Der(" + L.name() + ")x" + L.name() : name, m + n);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) labels.push_back("D" + std::to_string(a));
  for (std::size_t i = 0; i < n; ++i) labels.push_back(L.label(i));
  sc.set_labels(labels);
  for (const auto& [key, bracket] : hl.structure().table())
    for (const auto& [k, c] : bracket) sc.set(key.first, key.second, k, c);
  for (std::size_t a = 0; a < m; ++a) {
    const Matrix& d = h.ops()[a];
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(d(k, j)) != 0) sc.set(a, m + j, m + k, d(k, j));
  }
  for (const auto& [key, bracket] : L.structure().table())
    for (const auto& [k, c] : bracket) sc.set(m + key.first, m + key.second, m + k, c);
  return LieAlgebra::validated(std::move(sc));
}

CharNilpotencyReport is_characteristically_nilpotent(const LieAlgebra& L) {
  if (L.dim() <= 1) throw InputError("characteristic nilpotency needs dimension greater than 1");
  const OperatorAlgebra der = derivation_algebra(L);
  CharNilpotencyReport report;
  report.der_dim = der.dim();
  report.via_der_nilpotent = is_nilpotent(der.as_lie_algebra("Der(" + L.name() + ")"));
  report.via_all_elements_nilpotent = engel_all_nilpotent(der);
  report.via_semidirect_nilpotent = is_nilpotent(semidirect(der, L));
  report.agree = report.via_der_nilpotent == report.via_all_elements_nilpotent &&
                 report.via_all_elements_nilpotent == report.via_semidirect_nilpotent;
  return report;
}

OperatorAlgebra inner_derivations(const LieAlgebra& L) {
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < L.dim(); ++i) ads.push_back(L.ad_basis(i));
  return OperatorAlgebra::span(L.dim(), ads);
}

std::size_t outer_derivation_dim(const LieAlgebra& L) {
  return derivation_algebra(L).dim() - inner_derivations(L).dim();
}

}  // namespace lierig

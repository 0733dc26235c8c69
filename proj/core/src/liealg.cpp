#include "lierig/liealg.hpp"

#include "lierig/error.hpp"

#include <functional>

namespace lierig {

std::vector<std::size_t> SeriesReport::dims() const {
  std::vector<std::size_t> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.dim());
  return out;
}

Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != L.dim() || b.ambient_dim() != L.dim()) throw DimensionError("subspace is not in the algebra");
  std::vector<Vector> vectors;
  vectors.reserve(a.dim() * b.dim());
  for (const auto& u : a.basis())
    for (const auto& v : b.basis()) vectors.push_back(L.bracket(u, v));
  return Subspace::span(L.dim(), vectors);
}

namespace {

SeriesReport run_series(const LieAlgebra& L, SeriesKind kind) {
  SeriesReport report;
  report.kind = kind;
  const Subspace whole = Subspace::whole(L.dim());
  report.terms.push_back(whole);
  for (;;) {
    const Subspace& last = report.terms.back();
    Subspace next = kind == SeriesKind::LowerCentral ? bracket_span(L, whole, last) : bracket_span(L, last, last);
    if (next.dim() == last.dim()) break;
    report.terms.push_back(std::move(next));
  }
  report.stabilized_dim = report.terms.back().dim();
  return report;
}

}  // namespace

SeriesReport lower_central_series(const LieAlgebra& L) { return run_series(L, SeriesKind::LowerCentral); }

SeriesReport derived_series(const LieAlgebra& L) { return run_series(L, SeriesKind::Derived); }

bool is_nilpotent(const LieAlgebra& L) { return lower_central_series(L).stabilized_dim == 0; }

bool is_solvable(const LieAlgebra& L) { return derived_series(L).stabilized_dim == 0; }

std::optional<std::size_t> nilpotency_class(const LieAlgebra& L) {
  const auto series = lower_central_series(L);
  if (series.stabilized_dim != 0) return std::nullopt;
  return series.terms.size() - 1;
}

std::string to_string(FlagStatus s) {
  switch (s) {
    case FlagStatus::Yes: return "yes";
    case FlagStatus::No: return "no";
    case FlagStatus::Undecided: return "undecided";
  }
  return "undecided";
}

namespace {

// A rational vector spanning a one-dimensional ideal of Q, if one exists.
// Depth-first over rational eigenvalues of ad(b_0), ad(b_1), ... in ascending order.
std::optional<Vector> rational_common_eigenvector(const LieAlgebra& Q) {
  const std::size_t m = Q.dim();
  std::vector<std::optional<EigenSplit>> splits(m);
  std::function<std::optional<Vector>(std::size_t, const Subspace&)> search =
      [&](std::size_t j, const Subspace& w) -> std::optional<Vector> {
    if (w.dim() == 0) return std::nullopt;
    if (j == m) return w.basis().front();
    const Matrix& op = Q.ad_basis(j);
    if (!splits[j]) splits[j] = rational_eigen_split(op);
    for (const auto& [lambda, mult] : splits[j]->rational_roots) {
      const Subspace eigenspace = nullspace(op - lambda * Matrix::identity(m));
      auto found = search(j + 1, subspace_intersect(w, eigenspace));
      if (found) return found;
    }
    return std::nullopt;
  };
  return search(0, Subspace::whole(m));
}

}  // namespace

FlagVerdict completely_solvable_flag(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  FlagVerdict verdict;
  Subspace current = Subspace::zero(n);
  verdict.flag.push_back(current);
  for (std::size_t stage = 0; stage < n; ++stage) {
    const LieAlgebra q = quotient(L, current);
    const auto comp = current.complement_coordinates();
    auto v = rational_common_eigenvector(q);
    if (!v) {
      // The rational search is exhaustive over R unless some adjoint has real irrational eigenvalues.
      std::optional<FlagWitness> complex_witness;
      std::optional<FlagWitness> real_witness;
      for (std::size_t j = 0; j < q.dim(); ++j) {
        auto split = rational_eigen_split(q.ad_basis(j));
        if (split.residual_degree == 0) continue;
        FlagWitness w{stage, comp[j], split.residual_degree, split.residual};
        if (split.residual_real_roots > 0) {
          if (!real_witness) real_witness = w;
        } else if (!complex_witness) {
          complex_witness = w;
        }
      }
      if (real_witness) {
        verdict.status = FlagStatus::Undecided;
        verdict.witness = real_witness;
      } else {
        verdict.status = FlagStatus::No;
        verdict.witness = complex_witness ? *complex_witness : FlagWitness{stage, comp.front(), 0, Polynomial{}};
      }
      verdict.flag.clear();
      return verdict;
    }
    Vector lifted = zero_vector(n);
    for (std::size_t a = 0; a < comp.size(); ++a) lifted[comp[a]] = (*v)[a];
    current = subspace_sum(current, Subspace::span(n, {lifted}));
    verdict.flag.push_back(current);
  }
  verdict.status = FlagStatus::Yes;
  return verdict;
}

Subspace centralizer(const LieAlgebra& L, const Subspace& s) {
  if (s.ambient_dim() != L.dim()) throw DimensionError("subspace is not in the algebra");
  const std::size_t n = L.dim();
  RowReducer system(n);
  for (const auto& v : s.basis()) {
    const Matrix ad = L.ad(v);
    for (std::size_t r = 0; r < n; ++r) system.add(ad.row(r));
  }
  return Subspace::span(n, system.kernel_basis());
}

Subspace center(const LieAlgebra& L) { return centralizer(L, Subspace::whole(L.dim())); }

Subspace normalizer_subalgebra(const LieAlgebra& L, const Subspace& s) {
  if (s.ambient_dim() != L.dim()) throw DimensionError("subspace is not in the algebra");
  const std::size_t n = L.dim();
  RowReducer s_equations(n);
  for (const auto& v : s.basis()) s_equations.add(v);
  const auto annihilator = s_equations.kernel_basis();
  // x normalizes S iff y . [s, x] = 0 for every s in S and y annihilating S.
  RowReducer system(n);
  for (const auto& v : s.basis()) {
    const Matrix ad = L.ad(v);
    for (const auto& y : annihilator) {
      Vector row = zero_vector(n);
      for (std::size_t r = 0; r < n; ++r) {
        if (sgn(y[r]) != 0) axpy(row, y[r], ad.row(r));
      }
      system.add(row);
    }
  }
  return Subspace::span(n, system.kernel_basis());
}

bool is_subalgebra(const LieAlgebra& L, const Subspace& w) {
  if (w.ambient_dim() != L.dim()) throw DimensionError("subspace is not in the algebra");
  const auto& b = w.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!w.contains(L.bracket(b[i], b[j]))) return false;
  return true;
}

bool is_ideal(const LieAlgebra& L, const Subspace& w) {
  if (w.ambient_dim() != L.dim()) throw DimensionError("subspace is not in the algebra");
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (const auto& v : w.basis())
      if (!w.contains(L.ad_basis(i).apply(v))) return false;
  return true;
}

bool is_abelian(const LieAlgebra& L, const Subspace& w) {
  if (w.ambient_dim() != L.dim()) throw DimensionError("subspace is not in the algebra");
  const auto& b = w.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!is_zero(L.bracket(b[i], b[j]))) return false;
  return true;
}

Vector project_to_quotient(const Subspace& ideal, const Vector& x) {
  const Vector r = ideal.residual(x);
  const auto comp = ideal.complement_coordinates();
  Vector out(comp.size());
  for (std::size_t a = 0; a < comp.size(); ++a) out[a] = r[comp[a]];
  return out;
}

LieAlgebra quotient(const LieAlgebra& L, const Subspace& ideal) {
  if (!is_ideal(L, ideal)) throw InputError("quotient of '" + L.name() + "' by a subspace that is not an ideal");
  const auto comp = ideal.complement_coordinates();
  StructureConstants sc(L.name() + "/I", comp.size());
  std::vector<std::string> labels;
  for (auto c : comp) labels.push_back(L.label(c));
  sc.set_labels(labels);
  for (std::size_t a = 0; a < comp.size(); ++a) {
    for (std::size_t b = a + 1; b < comp.size(); ++b) {
      const Vector image = project_to_quotient(ideal, L.bracket_basis(comp[a], comp[b]));
      for (std::size_t c = 0; c < image.size(); ++c)
        if (sgn(image[c]) != 0) sc.set(a, b, c, image[c]);
    }
  }
  return LieAlgebra::validated(std::move(sc));
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t na = a.dim();
  StructureConstants sc(a.name() + "+" + b.name(), na + b.dim());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < na; ++i) labels.push_back(a.label(i));
  for (std::size_t i = 0; i < b.dim(); ++i) labels.push_back(b.label(i));
  sc.set_labels(labels);
  for (const auto& [key, bracket] : a.structure().table())
    for (const auto& [k, c] : bracket) sc.set(key.first, key.second, k, c);
  for (const auto& [key, bracket] : b.structure().table())
    for (const auto& [k, c] : bracket) sc.set(na + key.first, na + key.second, na + k, c);
  return LieAlgebra::validated(std::move(sc));
}

}  // namespace lierig

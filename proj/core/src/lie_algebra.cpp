#include "lierig/lie_algebra.hpp"

#include <map>
#include <sstream>

namespace lierig {

StructureConstants::StructureConstants(std::string name, std::size_t dim) : name_(std::move(name)), dim_(dim) {}

void StructureConstants::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != dim_) {
    throw InputError("basis has " + std::to_string(labels.size()) + " labels for dimension " + std::to_string(dim_));
  }
  labels_ = std::move(labels);
}

std::string StructureConstants::label(std::size_t i) const {
  if (i < labels_.size()) return labels_[i];
  return "e" + std::to_string(i);
}

void StructureConstants::set(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
  if (i >= dim_ || j >= dim_ || k >= dim_) {
    throw InputError("structure constant index out of range: (" + std::to_string(i) + "," + std::to_string(j) + ")->" +
                     std::to_string(k) + " with dim " + std::to_string(dim_));
  }
  if (i == j) {
    if (sgn(value) != 0) throw InputError("[e_i, e_i] must vanish (i = " + std::to_string(i) + ")");
    return;
  }
  const bool flip = i > j;
  const auto key = flip ? std::make_pair(j, i) : std::make_pair(i, j);
  const Rational stored = flip ? Rational(-value) : value;
  auto& bracket = table_[key];
  if (sgn(stored) == 0) {
    bracket.erase(k);
  } else {
    bracket[k] = stored;
  }
  if (bracket.empty()) table_.erase(key);
}

Rational StructureConstants::get(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return 0;
  const bool flip = i > j;
  auto it = table_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == table_.end()) return 0;
  auto kt = it->second.find(k);
  if (kt == it->second.end()) return 0;
  return flip ? Rational(-kt->second) : kt->second;
}

Vector StructureConstants::bracket_basis(std::size_t i, std::size_t j) const {
  Vector v = zero_vector(dim_);
  if (i == j) return v;
  const bool flip = i > j;
  auto it = table_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == table_.end()) return v;
  for (const auto& [k, c] : it->second) v[k] = flip ? Rational(-c) : c;
  return v;
}

std::vector<JacobiViolation> validate_jacobi(const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  using Sparse = std::vector<std::pair<std::size_t, Rational>>;
  std::vector<Sparse> br(n * n);
  for (const auto& [key, bracket] : sc.table()) {
    const auto [i, j] = key;
    for (const auto& [k, c] : bracket) {
      br[i * n + j].emplace_back(k, c);
      br[j * n + i].emplace_back(k, -c);
    }
  }

  // adds [e_a, v] into acc
  auto bracket_into = [&](std::map<std::size_t, Rational>& acc, std::size_t a, const Sparse& v) {
    for (const auto& [m, vm] : v) {
      for (const auto& [k, c] : br[a * n + m]) acc[k] += vm * c;
    }
  };

  std::vector<JacobiViolation> violations;
  std::map<std::size_t, Rational> acc;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        acc.clear();
        bracket_into(acc, i, br[j * n + k]);
        bracket_into(acc, j, br[k * n + i]);
        bracket_into(acc, k, br[i * n + j]);
        Vector sum;
        for (const auto& [m, c] : acc) {
          if (sgn(c) == 0) continue;
          if (sum.empty()) sum = zero_vector(n);
          sum[m] = c;
        }
        if (!sum.empty()) violations.push_back({i, j, k, std::move(sum)});
      }
    }
  }
  return violations;
}

LieAlgebra::LieAlgebra(StructureConstants sc) : sc_(std::move(sc)) {
  const std::size_t n = sc_.dim();
  brackets_.resize(n * n);
  ad_.assign(n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      brackets_[i * n + j] = sc_.bracket_basis(i, j);
      ad_[i].set_column(j, brackets_[i * n + j]);
    }
  }
}

LieAlgebra LieAlgebra::validated(StructureConstants sc) {
  auto violations = validate_jacobi(sc);
  if (!violations.empty()) {
    std::ostringstream os;
    const auto& v = violations.front();
    os << "Jacobi identity fails for " << violations.size() << " triple(s) in '" << sc.name() << "'; first at (" << v.i
       << "," << v.j << "," << v.k << ") with residual (";
    for (std::size_t m = 0; m < v.residual.size(); ++m) os << (m ? "," : "") << v.residual[m].get_str();
    os << ")";
    throw JacobiError(os.str(), std::move(violations));
  }
  return LieAlgebra(std::move(sc));
}

Vector LieAlgebra::bracket(const Vector& u, const Vector& v) const {
  const std::size_t n = dim();
  if (u.size() != n || v.size() != n) throw DimensionError("bracket argument length mismatch");
  Vector out = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || sgn(v[j]) == 0) continue;
      const Vector& b = brackets_[i * n + j];
      axpy(out, u[i] * v[j], b);
    }
  }
  return out;
}

const Vector& LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i >= dim() || j >= dim()) throw DimensionError("basis index out of range");
  return brackets_[i * dim() + j];
}

Matrix LieAlgebra::ad(const Vector& x) const {
  const std::size_t n = dim();
  if (x.size() != n) throw DimensionError("ad argument length mismatch");
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) != 0) out = out + x[i] * ad_[i];
  }
  return out;
}

LieAlgebra LieAlgebra::renamed(std::string name) const {
  LieAlgebra copy = *this;
  copy.sc_.set_name(std::move(name));
  return copy;
}

}  // namespace lierig

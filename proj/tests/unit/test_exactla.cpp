#include "oracles.hpp"

#include "lierig/error.hpp"
#include "lierig/exactla.hpp"

#include <doctest.h>

using namespace lierig;

TEST_SUITE("exactla") {

TEST_CASE("rank examples") {
  CHECK(rank(Matrix::identity(2)) == 2);
  CHECK(rank(Matrix(3, 3)) == 0);
  CHECK(rank(Matrix::from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(Matrix(0, 4)) == 0);
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace(Matrix::identity(3)) == Subspace::zero(3));
  CHECK(nullspace(Matrix(2, 3)) == Subspace::whole(3));
  const Subspace k = nullspace(Matrix::from_rows({{1, 1, 0}}));
  CHECK(k.dim() == 2);
  CHECK(k == Subspace::span(3, {{1, -1, 0}, {0, 0, 1}}));
}

TEST_CASE("lattice examples") {
  const Subspace a = Subspace::span(3, {{1, 2, 3}, {0, 1, 1}});
  CHECK(subspace_intersect(a, a) == a);
  CHECK(subspace_sum(Subspace::span(2, {{1, 0}}), Subspace::span(2, {{0, 1}})) == Subspace::whole(2));
  CHECK(subspace_intersect(Subspace::span(2, {{1, 1}}), Subspace::span(2, {{1, 0}})) == Subspace::zero(2));
  CHECK(contains(a, Vector{1, 3, 4}));
  CHECK_FALSE(contains(a, Vector{0, 0, 1}));
  CHECK_THROWS_AS(subspace_sum(Subspace::zero(2), Subspace::zero(3)), DimensionError);
}

TEST_CASE("nilpotent matrix examples") {
  CHECK(is_nilpotent_matrix(Matrix::from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})));
  CHECK_FALSE(is_nilpotent_matrix(Matrix::identity(3)));
  CHECK_FALSE(is_nilpotent_matrix(Matrix::from_rows({{0, 0}, {0, 1}})));
  CHECK_THROWS_AS(is_nilpotent_matrix(Matrix(2, 3)), DimensionError);
}

TEST_CASE("rational eigen split examples") {
  const auto shift = rational_eigen_split(Matrix::from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
  REQUIRE(shift.rational_roots.size() == 1);
  CHECK(shift.rational_roots[0] == std::make_pair(Rational(0), std::size_t{3}));
  CHECK(shift.residual_degree == 0);

  const auto diag = rational_eigen_split(Matrix::from_rows({{1, 0}, {0, 2}}));
  REQUIRE(diag.rational_roots.size() == 2);
  CHECK(diag.rational_roots[0] == std::make_pair(Rational(1), std::size_t{1}));
  CHECK(diag.rational_roots[1] == std::make_pair(Rational(2), std::size_t{1}));
  CHECK(diag.residual_degree == 0);

  const Matrix rot = Matrix::from_rows({{0, -1}, {1, 0}});
  // det(tI - rot) expanded by hand: t*t - (-1)(1) = t^2 + 1
  CHECK(characteristic_polynomial(rot) == Polynomial({1, 0, 1}));
  const auto r = rational_eigen_split(rot);
  CHECK(r.rational_roots.empty());
  CHECK(r.residual_degree == 2);
  CHECK(r.residual_real_roots == 0);
}

TEST_CASE("irrational real eigenvalues are reported in the residual") {
  const auto s = rational_eigen_split(Matrix::from_rows({{0, 2, 0}, {1, 0, 0}, {0, 0, 3}}));
  REQUIRE(s.rational_roots.size() == 1);
  CHECK(s.rational_roots[0].first == 3);
  CHECK(s.residual_degree == 2);
  CHECK(s.residual_real_roots == 2);
}

TEST_CASE("rank and kernels agree with the schoolbook oracle") {
  oracle::Rng rng(11);
  for (int t = 0; t < 150; ++t) {
    const auto r = static_cast<std::size_t>(rng.integer(1, 7));
    const auto c = static_cast<std::size_t>(rng.integer(1, 7));
    const Matrix m = t % 2 ? rng.int_matrix(r, c) : rng.low_rank_matrix(r, c);
    const std::size_t rk = rank(m);
    CHECK(rk == oracle::rank(m));
    const Subspace k = nullspace(m);
    CHECK(rk + k.dim() == c);
    for (const auto& v : k.basis()) CHECK(is_zero(m.apply(v)));
    CHECK(column_space(m).dim() == rk);
  }
}

TEST_CASE("Grassmann identity on random subspaces") {
  oracle::Rng rng(12);
  for (int t = 0; t < 60; ++t) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 8));
    auto random_space = [&] {
      std::vector<Vector> vs;
      const long k = rng.integer(0, static_cast<long>(n));
      for (long i = 0; i < k; ++i) vs.push_back(rng.vector(n));
      // repeat a combination now and then so spans are not always generic
      if (vs.size() >= 2 && rng.integer(0, 1)) vs.push_back(vs[0] + Rational(3) * vs[1]);
      return Subspace::span(n, vs);
    };
    const Subspace a = random_space(), b = random_space();
    const Subspace s = subspace_sum(a, b), i = subspace_intersect(a, b);
    CHECK(a.dim() + b.dim() == s.dim() + i.dim());
    CHECK(s.contains(a));
    CHECK(s.contains(b));
    CHECK(a.contains(i));
    CHECK(b.contains(i));
  }
}

TEST_CASE("canonical form does not depend on the spanning set") {
  oracle::Rng rng(13);
  for (int t = 0; t < 60; ++t) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 7));
    const auto k = static_cast<std::size_t>(rng.integer(0, static_cast<long>(n)));
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < k; ++i) vs.push_back(rng.vector(n));
    const Subspace a = Subspace::span(n, vs);
    // mix the spanning set by an invertible matrix and add redundant vectors
    std::vector<Vector> ws;
    if (k > 0) {
      const Matrix p = rng.invertible(k);
      for (std::size_t c = 0; c < k; ++c) {
        Vector w = zero_vector(n);
        for (std::size_t r = 0; r < k; ++r) axpy(w, p(r, c), vs[r]);
        ws.push_back(w);
      }
      ws.push_back(Rational(-2) * ws.front());
    }
    ws.push_back(zero_vector(n));
    CHECK(Subspace::span(n, ws) == a);
  }
}

TEST_CASE("Cayley-Hamilton on random matrices") {
  oracle::Rng rng(14);
  for (int t = 0; t < 40; ++t) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 5));
    const Matrix m = rng.int_matrix(n, n, 5);
    const Polynomial p = characteristic_polynomial(m);
    CHECK(p.degree() == static_cast<int>(n));
    Matrix acc(n, n), power = Matrix::identity(n);
    for (std::size_t i = 0; i <= n; ++i) {
      acc = acc + p.coefficient(i) * power;
      power = power * m;
    }
    CHECK(acc.is_zero());
    // every rational root is a genuine eigenvalue
    for (const auto& [root, mult] : rational_eigen_split(m).rational_roots) {
      CHECK(mult >= 1);
      CHECK(rank(m - root * Matrix::identity(n)) < n);
    }
  }
}

TEST_CASE("solve and nilpotency agree with direct checks") {
  oracle::Rng rng(15);
  for (int t = 0; t < 40; ++t) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 5));
    const Matrix s = rng.strictly_upper(n);
    const Matrix p = rng.invertible(n);
    const auto pinv_cols = [&] {
      std::vector<Vector> cols;
      for (std::size_t i = 0; i < n; ++i) cols.push_back(*solve(p, unit_vector(n, i)));
      return Matrix::from_columns(n, cols);
    }();
    CHECK(p * pinv_cols == Matrix::identity(n));
    const Matrix conj = p * s * pinv_cols;
    CHECK(is_nilpotent_matrix(conj));
    CHECK(oracle::nilpotent_by_powers(conj));
    const Matrix shifted = conj + Matrix::identity(n);
    CHECK_FALSE(is_nilpotent_matrix(shifted));
  }
  CHECK_FALSE(solve(Matrix::from_rows({{1, 1}, {2, 2}}), Vector{1, 0}).has_value());
}

}

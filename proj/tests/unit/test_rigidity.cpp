#include "oracles.hpp"

#include "lierig/catalog.hpp"
#include "lierig/derivations.hpp"
#include "lierig/error.hpp"
#include "lierig/liealg.hpp"
#include "lierig/rigidity.hpp"

#include <doctest.h>

using namespace lierig;

namespace {

Embedding identity_of(const LieAlgebra& g) { return Embedding::certify(g, g, Matrix::identity(g.dim())); }

Embedding into_der_semidirect(const LieAlgebra& l) {
  const auto g = make_der_semidirect(l);
  return Embedding::certify(l, g, tail_inclusion(l.dim(), g.dim()));
}

Embedding columns(const LieAlgebra& l, const LieAlgebra& g, const std::vector<std::size_t>& targets) {
  std::vector<Vector> cols;
  for (auto t : targets) cols.push_back(unit_vector(g.dim(), t));
  return Embedding::certify(l, g, Matrix::from_columns(g.dim(), cols));
}

struct Case {
  std::string name;
  Embedding e;
};

std::vector<Case> embedding_suite() {
  std::vector<Case> out;
  const auto h3 = make_heisenberg();
  out.push_back({"id h3", identity_of(h3)});
  out.push_back({"id l4", identity_of(make_ladder(4))});
  out.push_back({"id e2", identity_of(make_euclidean2())});
  out.push_back({"id line", identity_of(make_solvable_line())});
  out.push_back({"h3 -> h3+R", Embedding::certify(h3, direct_sum(h3, make_abelian(1)), head_inclusion(3, 4))});
  out.push_back({"R2 -> h3", columns(make_abelian(2), h3, {0, 2})});
  out.push_back({"R1 -> center h3", columns(make_abelian(1), h3, {2})});
  for (long n = 2; n <= 5; ++n) {
    const auto ln = make_ladder(n);
    out.push_back({"R^n -> l_n", Embedding::certify(make_abelian(n), ln, tail_inclusion(n, ln.dim()))});
    out.push_back({"sigma -> l_n", columns(make_abelian(1), ln, {0})});
  }
  out.push_back({"charnilp -> Der x charnilp", into_der_semidirect(catalog_entry("charnilp", {}).algebra)});
  out.push_back({"R1 -> Der x R1", into_der_semidirect(make_abelian(1))});
  return out;
}

bool verify_cocycle_witness(const Embedding& e, const Vector& w, const Subspace& outside) {
  const Matrix c = unflatten(w, e.codomain().dim(), e.domain().dim());
  return is_cocycle(e, c) && cocycle_space(e).contains(w) && !outside.contains(w);
}

}  // namespace

TEST_SUITE("rigidity") {

TEST_CASE("embedding certification") {
  const auto h3 = make_heisenberg();
  CHECK_NOTHROW(identity_of(h3));
  CHECK_NOTHROW(into_der_semidirect(catalog_entry("charnilp", {}).algebra));
  CHECK_THROWS_AS(Embedding::certify(h3, make_abelian(3), Matrix::identity(3)), EmbeddingError);
  CHECK_THROWS_AS(Embedding::certify(make_abelian(2), h3, Matrix::from_rows({{1, 2}, {0, 0}, {0, 0}})), EmbeddingError);
  CHECK_THROWS_AS(Embedding::certify(make_abelian(2), h3, Matrix::identity(2)), EmbeddingError);
}

TEST_CASE("normalizers and ideals") {
  CHECK(is_ideal_image(into_der_semidirect(catalog_entry("charnilp", {}).algebra)));
  CHECK(is_ideal_image(identity_of(make_ladder(3))));
  for (long n = 2; n <= 5; ++n) {
    const auto e = columns(make_abelian(1), make_ladder(n), {0});
    CHECK_FALSE(is_ideal_image(e));
    // [a sigma + sum b_i e_i, sigma] = -sum_{i<n-1} b_i e_{i+1}, so only sigma and e_{n-1} survive
    const std::size_t d = static_cast<std::size_t>(n + 1);
    CHECK(normalizer_of_image(e) == Subspace::span(d, {unit_vector(d, 0), unit_vector(d, d - 1)}));
  }
}

TEST_CASE("going-through differential examples") {
  const auto cn = catalog_entry("charnilp", {}).algebra;
  const auto gtd = going_through_differential(into_der_semidirect(cn));
  CHECK(gtd.image == derivation_algebra(cn).flattened());

  for (const auto& g : {make_heisenberg(), make_ladder(4), make_euclidean2()}) {
    const auto id = going_through_differential(identity_of(g));
    CHECK(id.image == inner_derivations(g).flattened());
    CHECK(id.kernel == center(g));
  }

  const auto z = going_through_differential(columns(make_abelian(1), make_heisenberg(), {2}));
  CHECK(z.image.dim() == 0);
  CHECK(z.normalizer == Subspace::whole(3));
}

TEST_CASE("cocycle spaces") {
  for (const auto& g : {make_heisenberg(), make_ladder(4), make_euclidean2()}) {
    const auto e = identity_of(g);
    CHECK(cocycle_space(e) == derivation_algebra(g).flattened());
    CHECK(coboundary_space(e) == inner_derivations(g).flattened());
  }
  const auto ab = columns(make_abelian(2), make_abelian(3), {0, 2});
  CHECK(cocycle_space(ab) == Subspace::whole(6));
  CHECK(coboundary_space(ab).dim() == 0);

  const auto e = into_der_semidirect(catalog_entry("charnilp", {}).algebra);
  CHECK(coboundary_space(e).contains(vertical_subspace(e)));
}

TEST_CASE("rigidity report examples") {
  const auto cn = catalog_entry("charnilp", {}).algebra;
  const auto r = rigidity_report(into_der_semidirect(cn));
  CHECK(r.is_ideal);
  CHECK(r.der_dim == 12);
  CHECK(r.gtd_image_dim == 12);
  CHECK(r.vertical.status == VerdictStatus::RigidInfinitesimally);

  for (const auto& g : {make_heisenberg(), make_ladder(4)}) {
    const auto id = rigidity_report(identity_of(g));
    CHECK(id.horizontal.status == VerdictStatus::RigidInfinitesimally);
    CHECK(outer_derivation_dim(g) > 0);
    CHECK(id.local.status != VerdictStatus::RigidInfinitesimally);
  }
  // Der(e2) is ad(e2) plus the scaling of span(x,y)
  const auto e2 = rigidity_report(identity_of(make_euclidean2()));
  CHECK(e2.horizontal.status == VerdictStatus::RigidInfinitesimally);
  CHECK((e2.local.status == VerdictStatus::RigidInfinitesimally) == (outer_derivation_dim(make_euclidean2()) == 0));

  const auto h3 = make_heisenberg();
  const auto hv = rigidity_report(Embedding::certify(h3, direct_sum(h3, make_abelian(1)), head_inclusion(3, 4)));
  REQUIRE(hv.vertical.status == VerdictStatus::NotRigid);
  REQUIRE(hv.vertical.derivation.has_value());
  const Matrix& d = *hv.vertical.derivation;
  CHECK(is_derivation(h3, d));
  CHECK_FALSE(is_nilpotent_matrix(d));
}

TEST_CASE("report invariants over the embedding suite") {
  for (const auto& [name, e] : embedding_suite()) {
    CAPTURE(name);
    const auto r = rigidity_report(e);
    const Subspace z1 = cocycle_space(e), b1 = coboundary_space(e), v = vertical_subspace(e);
    CHECK(z1.contains(b1));
    CHECK(z1.contains(v));
    CHECK(r.b1_dim <= r.z1_dim);
    CHECK(r.vertical_subspace_dim <= r.z1_dim);
    CHECK(r.gtd_image_dim == r.normalizer_dim - r.centralizer_dim);
    CHECK(r.vertical_in_coboundaries == b1.contains(v));
    CHECK(r.gtd_surjective == (r.gtd_image_dim == r.der_dim));
    CHECK(r.vertical_in_coboundaries == r.gtd_surjective);
    CHECK((r.vertical.status == VerdictStatus::RigidInfinitesimally) == r.vertical_in_coboundaries);
    CHECK((r.local.status == VerdictStatus::RigidInfinitesimally) == (z1 == b1));
    CHECK((r.horizontal.status == VerdictStatus::RigidInfinitesimally) == (z1 == subspace_sum(b1, v)));

    if (r.vertical.status == VerdictStatus::NotRigid) {
      REQUIRE(r.vertical.derivation.has_value());
      REQUIRE(r.vertical.witness.has_value());
      CHECK(is_derivation(e.domain(), *r.vertical.derivation));
      CHECK(*r.vertical.witness == flatten(e.matrix() * *r.vertical.derivation));
      CHECK(verify_cocycle_witness(e, *r.vertical.witness, b1));
    }
    if (r.horizontal.status == VerdictStatus::NotRigid) {
      REQUIRE(r.horizontal.witness.has_value());
      CHECK(verify_cocycle_witness(e, *r.horizontal.witness, subspace_sum(b1, v)));
    }
    if (r.local.status == VerdictStatus::NotRigid) {
      REQUIRE(r.local.witness.has_value());
      CHECK(verify_cocycle_witness(e, *r.local.witness, b1));
    }
    for (const auto* verdict : {&r.vertical, &r.horizontal, &r.local}) {
      if (verdict->status == VerdictStatus::NotRigid) CHECK(verdict->witness.has_value());
    }

    const auto ob = theorem_obstruction(e.domain(), e.codomain());
    if (ob.status == ObstructionStatus::Obstructed) CHECK(r.vertical.status == VerdictStatus::NotRigid);
  }
}

TEST_CASE("identity embeddings measure outer derivations") {
  for (const auto& g : {make_heisenberg(), make_ladder(3), make_ladder(4), make_euclidean2(), make_solvable_line()}) {
    const auto r = rigidity_report(identity_of(g));
    CHECK(r.z1_dim == derivation_algebra(g).dim());
    CHECK(r.b1_dim == inner_derivations(g).dim());
    CHECK(r.z1_dim - r.b1_dim == outer_derivation_dim(g));
  }
}

TEST_CASE("obstruction examples") {
  const auto h3 = make_heisenberg();
  for (const auto& g : {direct_sum(h3, make_abelian(1)), make_ladder(4), h3}) {
    CHECK(theorem_obstruction(h3, g).status == ObstructionStatus::Obstructed);
  }
  const auto cn = catalog_entry("charnilp", {}).algebra;
  CHECK(theorem_obstruction(cn, make_der_semidirect(cn)).status == ObstructionStatus::NoObstruction);
  const auto ab = theorem_obstruction(make_abelian(2), h3);
  CHECK(ab.status == ObstructionStatus::Obstructed);
  CHECK(ab.g_nilpotent);
  CHECK_FALSE(ab.der_nilpotent);
  // Der(e2) is not completely solvable, but e2 is not completely solvable either
  CHECK(theorem_obstruction(make_euclidean2(), make_euclidean2()).status == ObstructionStatus::NoObstruction);
}

TEST_CASE("codimension-one abelian ideals") {
  for (long n = 4; n <= 8; ++n) {
    const auto L = make_ladder(n);
    const auto r = unique_codim1_abelian(L, Subspace::span(L.dim(), [&] {
                                           std::vector<Vector> vs;
                                           for (std::size_t i = 1; i < L.dim(); ++i) vs.push_back(L.basis_vector(i));
                                           return vs;
                                         }()));
    CHECK(r.unique);
    CHECK(r.kernel_dim == 1);
    CHECK_FALSE(r.second_subalgebra.has_value());
    CHECK(r.note.empty());
  }
  const auto l3 = make_ladder(3);
  const auto r3 = unique_codim1_abelian(l3, Subspace::span(4, {unit_vector(4, 1), unit_vector(4, 2), unit_vector(4, 3)}));
  CHECK(r3.unique);
  CHECK_FALSE(r3.note.empty());

  const auto l2 = make_ladder(2);
  const Subspace a2 = Subspace::span(3, {unit_vector(3, 1), unit_vector(3, 2)});
  const auto r2 = unique_codim1_abelian(l2, a2);
  CHECK_FALSE(r2.unique);
  CHECK(r2.kernel_dim == 1);
  REQUIRE(r2.second_subalgebra.has_value());
  const Subspace& w = *r2.second_subalgebra;
  CHECK(w.dim() == 2);
  CHECK(w != a2);
  // bracket closure by hand: [sigma, e1] = 0 in l2
  for (const auto& u : w.basis())
    for (const auto& v : w.basis()) CHECK(is_zero(l2.bracket(u, v)));
  CHECK(w == Subspace::span(3, {unit_vector(3, 0), unit_vector(3, 2)}));

  const auto r3a = make_abelian(3);
  const auto plane = unique_codim1_abelian(r3a, Subspace::span(3, {Vector{1, 1, 0}, Vector{0, 1, 1}}));
  CHECK_FALSE(plane.unique);
  CHECK(plane.kernel_dim == 2);

  CHECK_THROWS_AS(unique_codim1_abelian(make_heisenberg(), Subspace::span(3, {unit_vector(3, 0), unit_vector(3, 1)})),
                  InputError);
  CHECK_THROWS_AS(unique_codim1_abelian(l2, Subspace::span(3, {unit_vector(3, 2)})), InputError);
  // span(t, w) in line + R is abelian but [x, t] = -x leaves it
  CHECK_THROWS_AS(unique_codim1_abelian(direct_sum(make_solvable_line(), make_abelian(1)),
                                        Subspace::span(3, {unit_vector(3, 0), unit_vector(3, 2)})),
                  InputError);
}

}

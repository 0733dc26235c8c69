#include "lierig/algebra_file.hpp"
#include "lierig/catalog.hpp"
#include "lierig/derivations.hpp"
#include "lierig/error.hpp"
#include "lierig/liealg.hpp"

#include <doctest.h>

#include <filesystem>

using namespace lierig;

namespace {
const std::filesystem::path kData = LIERIG_TEST_DATA_DIR;
}

TEST_SUITE("catalog") {

TEST_CASE("generators") {
  const auto l1 = make_ladder(1);
  CHECK(l1.dim() == 2);
  CHECK(is_abelian(l1, Subspace::whole(2)));
  CHECK(make_ladder(4).dim() == 5);
  CHECK(nilpotency_class(make_ladder(4)) == 4u);
  CHECK(make_heisenberg().dim() == 3);
  CHECK(center(make_heisenberg()).dim() == 1);
  for (long n = 2; n <= 8; ++n) CHECK(nilpotency_class(make_ladder(n)) == static_cast<std::size_t>(n));
  CHECK_THROWS_AS(make_ladder(0), InputError);
  CHECK_THROWS_AS(make_abelian(-1), InputError);
}

TEST_CASE("every generated algebra passes Jacobi") {
  std::vector<LieAlgebra> all{make_heisenberg(), make_solvable_line(), make_euclidean2()};
  for (long n = 1; n <= 8; ++n) {
    all.push_back(make_abelian(n));
    all.push_back(make_ladder(n));
  }
  for (const auto& L : all) CHECK(validate_jacobi(L.structure()).empty());
}

TEST_CASE("der-semidirect") {
  CHECK(make_der_semidirect(make_abelian(1)).structure() == make_solvable_line().structure());
  for (long n = 1; n <= 4; ++n) CHECK(make_der_semidirect(make_abelian(n)).dim() == static_cast<std::size_t>(n * n + n));
  const auto h = make_der_semidirect(make_heisenberg());
  CHECK(h.dim() == 9);
  CHECK_FALSE(is_nilpotent(h));
  const auto cn = make_der_semidirect(catalog_entry("charnilp", {}).algebra);
  CHECK(is_nilpotent(cn));
  CHECK(validate_jacobi(h.structure()).empty());
}

TEST_CASE("catalog keys") {
  CHECK(catalog_entry("ladder", {3}).algebra.structure() == make_ladder(3).structure());
  CHECK(resolve_catalog_key("ladder:5").algebra.dim() == 6);
  CHECK(resolve_catalog_key("der-semidirect/heisenberg").algebra.dim() == 9);
  CHECK(catalog_entry("heisenberg-plus-line", {}).algebra.dim() == 4);
  const auto cn = catalog_entry("charnilp", {});
  CHECK(cn.provenance == Provenance::DataFile);
  CHECK(cn.algebra.dim() == 8);
  CHECK(catalog_entry("abelian", {2}).provenance == Provenance::Generated);
  CHECK_THROWS_AS(catalog_entry("no-such", {}), InputError);
  CHECK_THROWS_AS(catalog_entry("ladder", {}), InputError);
  CHECK_FALSE(catalog_keys().empty());
}

TEST_CASE("load_entry") {
  const auto h = load_entry(kData / "heisenberg.json");
  CHECK(h.algebra.structure() == make_heisenberg().structure());
  CHECK(h.algebra.label(2) == "z");
  CHECK_THROWS_AS(load_entry(kData / "h3_claims_charnilp.json"), ClaimError);
  CHECK_THROWS_AS(load_entry(kData / "bad_index.json"), ParseError);
  CHECK_THROWS_AS(load_entry(kData / "missing.json"), InputError);
}

TEST_CASE("file format round trip") {
  std::vector<LieAlgebra> all{make_heisenberg(), make_ladder(4), make_euclidean2(), catalog_entry("charnilp", {}).algebra,
                              make_der_semidirect(make_heisenberg())};
  for (const auto& L : all) {
    const std::string text = format_algebra_file(L.structure(), {Claim::Nilpotent});
    const auto back = parse_algebra_file(text);
    CHECK(back.structure == L.structure());
    CHECK(back.structure.labels() == L.structure().labels());
    CHECK(back.claims == std::vector<Claim>{Claim::Nilpotent});
    CHECK(format_algebra_file(back.structure, back.claims) == text);
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_algebra_file("{"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file(R"({"name":"a","brackets":{}})"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file(R"({"dim":2,"brackets":{"1,0":{"0":"1"}}})"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file(R"({"dim":2,"brackets":{"0,1":{"2":"1"}}})"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file(R"({"dim":2,"brackets":{"0,1":{"1":"1/0"}}})"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file(R"({"dim":2,"brackets":{"0,1":{"1":"x"}}})"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file(R"({"dim":2,"basis":["a"],"brackets":{}})"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file(R"({"dim":2,"brackets":{},"claims":["shiny"]})"), ParseError);
  const auto ok = parse_algebra_file(R"({"dim":2,"brackets":{"0,1":{"1":"-3/6"}}})");
  CHECK(ok.structure.get(0, 1, 1) == Rational(-1, 2));
  CHECK(ok.structure.get(1, 0, 1) == Rational(1, 2));
}

TEST_CASE("embedding files") {
  const auto e = read_embedding_file(kData / "incl_charnilp.json");
  CHECK(std::get<std::string>(e.domain) == "charnilp");
  CHECK(std::get<std::string>(e.matrix) == "tail-inclusion");
  const auto f = read_embedding_file(kData / "h3_into_h3_plus_line.json");
  CHECK(std::get<AlgebraFile>(f.codomain).structure.dim() == 4);
  CHECK(std::get<std::vector<std::vector<Rational>>>(f.matrix).size() == 4);
  CHECK_THROWS_AS(parse_embedding_file(R"({"domain":"heisenberg","codomain":"heisenberg","matrix":"sideways"})"),
                  ParseError);
}

}

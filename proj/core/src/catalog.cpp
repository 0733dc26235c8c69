#include "lierig/catalog.hpp"

#include "lierig/derivations.hpp"
#include "lierig/liealg.hpp"

#include <charconv>

#ifndef LIERIG_DATA_DIR
#define LIERIG_DATA_DIR "data"
#endif

namespace lierig {

namespace {

void require_positive(long n, const char* what) {
  if (n <= 0) throw InputError(std::string(what) + " needs n >= 1, got " + std::to_string(n));
}

}  // namespace

LieAlgebra make_abelian(long n) {
  require_positive(n, "abelian");
  return LieAlgebra::validated(StructureConstants("abelian(" + std::to_string(n) + ")", static_cast<std::size_t>(n)));
}

LieAlgebra make_heisenberg() {
  StructureConstants sc("heisenberg", 3);
  sc.set_labels({"x", "y", "z"});
  sc.set(0, 1, 2, 1);
  return LieAlgebra::validated(std::move(sc));
}

LieAlgebra make_ladder(long n) {
  require_positive(n, "ladder");
  const auto m = static_cast<std::size_t>(n);
  StructureConstants sc("ladder(" + std::to_string(n) + ")", m + 1);
  std::vector<std::string> labels{"s"};
  for (std::size_t i = 0; i < m; ++i) labels.push_back("e" + std::to_string(i));
  sc.set_labels(labels);
  for (std::size_t i = 0; i + 1 < m; ++i) sc.set(0, 1 + i, 2 + i, 1);
  return LieAlgebra::validated(std::move(sc));
}

LieAlgebra make_solvable_line() {
  StructureConstants sc("solvable-line", 2);
  sc.set_labels({"t", "x"});
  sc.set(0, 1, 1, 1);
  return LieAlgebra::validated(std::move(sc));
}

LieAlgebra make_euclidean2() {
  StructureConstants sc("euclidean2", 3);
  sc.set_labels({"r", "x", "y"});
  sc.set(0, 1, 2, 1);
  sc.set(0, 2, 1, -1);
  return LieAlgebra::validated(std::move(sc));
}

LieAlgebra make_der_semidirect(const LieAlgebra& L) {
  return semidirect(derivation_algebra(L), L, "Der(" + L.name() + ")x" + L.name());
}

void verify_claims(const LieAlgebra& L, const std::vector<Claim>& claims) {
  for (auto claim : claims) {
    switch (claim) {
      case Claim::Nilpotent:
        if (!is_nilpotent(L)) throw ClaimError("claim 'nilpotent' fails for '" + L.name() + "'");
        break;
      case Claim::CharacteristicallyNilpotent: {
        if (L.dim() <= 1) throw ClaimError("claim 'characteristically_nilpotent' needs dim > 1");
        const auto r = is_characteristically_nilpotent(L);
        if (!r.agree) throw InternalError("characteristic nilpotency checks disagree for '" + L.name() + "'");
        if (!r.via_der_nilpotent) {
          throw ClaimError("claim 'characteristically_nilpotent' fails for '" + L.name() +
                           "': Der has dimension " + std::to_string(r.der_dim) + " and is not nilpotent");
        }
        break;
      }
      case Claim::CompletelySolvable: {
        const auto f = completely_solvable_flag(L);
        if (f.status != FlagStatus::Yes) {
          throw ClaimError("claim 'completely_solvable' fails for '" + L.name() + "' (flag search: " +
                           to_string(f.status) + ")");
        }
        break;
      }
    }
  }
}

CatalogEntry load_entry(const std::filesystem::path& path) {
  AlgebraFile file = read_algebra_file(path);
  std::string key = file.structure.name();
  LieAlgebra algebra = LieAlgebra::validated(std::move(file.structure));
  verify_claims(algebra, file.claims);
  return CatalogEntry{std::move(key), {}, std::move(algebra), Provenance::DataFile, path, std::move(file.claims)};
}

std::filesystem::path default_data_dir() { return LIERIG_DATA_DIR; }

namespace {

long single_param(std::string_view key, const std::vector<long>& params) {
  if (params.size() != 1) throw InputError("catalog key '" + std::string(key) + "' takes exactly one parameter");
  return params.front();
}

void no_params(std::string_view key, const std::vector<long>& params) {
  if (!params.empty()) throw InputError("catalog key '" + std::string(key) + "' takes no parameters");
}

}  // namespace

CatalogEntry catalog_entry(std::string_view key, const std::vector<long>& params, const std::filesystem::path& data_dir) {
  const std::string k(key);
  auto generated = [&](LieAlgebra a) { return CatalogEntry{k, params, std::move(a), Provenance::Generated, {}, {}}; };
  constexpr std::string_view der_prefix = "der-semidirect/";
  if (key.substr(0, der_prefix.size()) == der_prefix) {
    CatalogEntry inner = catalog_entry(key.substr(der_prefix.size()), params, data_dir);
    CatalogEntry out = generated(make_der_semidirect(inner.algebra));
    out.provenance = inner.provenance;
    out.path = inner.path;
    return out;
  }
  if (key == "abelian") return generated(make_abelian(single_param(key, params)));
  if (key == "ladder") return generated(make_ladder(single_param(key, params)));
  if (key == "heisenberg") {
    no_params(key, params);
    return generated(make_heisenberg());
  }
  if (key == "heisenberg-plus-line") {
    no_params(key, params);
    return generated(direct_sum(make_heisenberg(), make_abelian(1)).renamed("heisenberg-plus-line"));
  }
  if (key == "solvable-line") {
    no_params(key, params);
    return generated(make_solvable_line());
  }
  if (key == "euclidean2") {
    no_params(key, params);
    return generated(make_euclidean2());
  }
  if (key == "charnilp") {
    no_params(key, params);
    CatalogEntry e = load_entry(data_dir / "charnilp8.json");
    e.key = k;
    return e;
  }
  throw InputError("unknown catalog key '" + k + "'");
}

CatalogEntry resolve_catalog_key(std::string_view spec, const std::filesystem::path& data_dir) {
  const auto colon = spec.find(':');
  std::vector<long> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = spec.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view tok = rest.substr(0, comma);
      long value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError("malformed catalog parameter in '" + std::string(spec) + "'");
      }
      params.push_back(value);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
  }
  return catalog_entry(spec.substr(0, colon), params, data_dir);
}

LieAlgebra resolve_algebra(const AlgebraRef& ref, const std::filesystem::path& data_dir) {
  if (const auto* key = std::get_if<std::string>(&ref)) return resolve_catalog_key(*key, data_dir).algebra;
  const auto& file = std::get<AlgebraFile>(ref);
  LieAlgebra algebra = LieAlgebra::validated(file.structure);
  verify_claims(algebra, file.claims);
  return algebra;
}

std::vector<std::string> catalog_keys() {
  return {"abelian",    "heisenberg", "heisenberg-plus-line", "ladder", "solvable-line",
          "euclidean2", "charnilp",   "der-semidirect/<key>"};
}

}  // namespace lierig

#pragma once

#include "lierig/algebra_file.hpp"
#include "lierig/lie_algebra.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace lierig {

LieAlgebra make_abelian(long n);
/// Basis (x, y, z) with [x, y] = z.
LieAlgebra make_heisenberg();
/// Basis (s, e0, ..., e_{n-1}) with [s, e_i] = e_{i+1} for i < n-1.
LieAlgebra make_ladder(long n);
/// Basis (t, x) with [t, x] = x.
LieAlgebra make_solvable_line();
/// Basis (r, x, y) with [r, x] = y, [r, y] = -x.
LieAlgebra make_euclidean2();
/// Der(L) x L with the derivations first.
LieAlgebra make_der_semidirect(const LieAlgebra& L);

class ClaimError : public InputError {
 public:
  using InputError::InputError;
};

/// Re-checks each declared property with the toolkit's own deciders.
void verify_claims(const LieAlgebra& L, const std::vector<Claim>& claims);

enum class Provenance { Generated, DataFile };

struct CatalogEntry {
  std::string key;
  std::vector<long> params;
  LieAlgebra algebra;
  Provenance provenance;
  std::filesystem::path path;  // set for data-file entries
  std::vector<Claim> claims;
};

/// Parses, Jacobi-validates and claim-verifies an algebra file.
CatalogEntry load_entry(const std::filesystem::path& path);

/// Directory holding shipped data files (charnilp8.json).
std::filesystem::path default_data_dir();

/// Keys: abelian N, heisenberg, heisenberg-plus-line, ladder N, solvable-line,
/// euclidean2, charnilp, and der-semidirect/<key> for Der(A) x A.
CatalogEntry catalog_entry(std::string_view key, const std::vector<long>& params,
                           const std::filesystem::path& data_dir = default_data_dir());

/// "key" or "key:p1,p2,...", e.g. "ladder:4" or "der-semidirect/charnilp".
CatalogEntry resolve_catalog_key(std::string_view spec, const std::filesystem::path& data_dir = default_data_dir());

/// Resolves an inline or keyed algebra reference, verifying inline claims.
LieAlgebra resolve_algebra(const AlgebraRef& ref, const std::filesystem::path& data_dir = default_data_dir());

std::vector<std::string> catalog_keys();

}  // namespace lierig

#pragma once

#include "lierig/lie_algebra.hpp"
#include "lierig/rational.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lierig {

enum class Claim { Nilpotent, CharacteristicallyNilpotent, CompletelySolvable };

std::string to_string(Claim c);
Claim parse_claim(std::string_view text);

/// JSON algebra document:
///   {"name": ..., "dim": n, "basis": [labels], "brackets": {"i,j": {"k": "p/q"}}, "claims": [...]}
/// with zero-based i < j and rationals as strings.
struct AlgebraFile {
  StructureConstants structure;
  std::vector<Claim> claims;
};

AlgebraFile parse_algebra_file(std::string_view json_text);
AlgebraFile read_algebra_file(const std::filesystem::path& path);
/// Deterministic serialization: fixed key order, brackets sorted by (i, j, k).
std::string format_algebra_file(const StructureConstants& sc, const std::vector<Claim>& claims = {});

/// An algebra given inline or by catalog key (e.g. "ladder:4").
using AlgebraRef = std::variant<AlgebraFile, std::string>;

/// JSON embedding document: {"domain": ..., "codomain": ..., "matrix": [[...]] | "identity" | "head-inclusion" | "tail-inclusion"}.
struct EmbeddingFile {
  AlgebraRef domain;
  AlgebraRef codomain;
  std::variant<std::vector<std::vector<Rational>>, std::string> matrix;
};

EmbeddingFile parse_embedding_file(std::string_view json_text);
EmbeddingFile read_embedding_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace lierig

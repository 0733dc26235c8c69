#include "lierig/algebra_file.hpp"

#include "lierig/error.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace lierig {

using nlohmann::json;
using nlohmann::ordered_json;

std::string to_string(Claim c) {
  switch (c) {
    case Claim::Nilpotent: return "nilpotent";
    case Claim::CharacteristicallyNilpotent: return "characteristically_nilpotent";
    case Claim::CompletelySolvable: return "completely_solvable";
  }
  return "nilpotent";
}

Claim parse_claim(std::string_view text) {
  if (text == "nilpotent") return Claim::Nilpotent;
  if (text == "characteristically_nilpotent") return Claim::CharacteristicallyNilpotent;
  if (text == "completely_solvable") return Claim::CompletelySolvable;
  throw ParseError("unknown claim '" + std::string(text) + "'");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

namespace {

std::size_t parse_index(std::string_view text, const std::string& where) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw ParseError(where + ": malformed index '" + std::string(text) + "'");
  }
  return value;
}

Rational parse_json_rational(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  throw ParseError(where + ": expected a rational string");
}

AlgebraFile algebra_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("algebra document must be a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 0) {
    throw ParseError("algebra document needs a non-negative integer 'dim'");
  }
  const auto dim = static_cast<std::size_t>(doc["dim"].get<long long>());
  std::string name = "unnamed";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("'name' must be a string");
    name = doc["name"].get<std::string>();
  }
  AlgebraFile file{StructureConstants(name, dim), {}};

  if (doc.contains("basis")) {
    const auto& basis = doc["basis"];
    if (!basis.is_array()) throw ParseError("'basis' must be an array of labels");
    std::vector<std::string> labels;
    for (const auto& l : basis) {
      if (!l.is_string()) throw ParseError("'basis' entries must be strings");
      labels.push_back(l.get<std::string>());
    }
    if (labels.size() != dim) {
      throw ParseError("'basis' has " + std::to_string(labels.size()) + " labels but dim is " + std::to_string(dim));
    }
    file.structure.set_labels(std::move(labels));
  }

  if (doc.contains("brackets")) {
    const auto& brackets = doc["brackets"];
    if (!brackets.is_object()) throw ParseError("'brackets' must be an object");
    for (const auto& [key, value] : brackets.items()) {
      const std::string where = "brackets[\"" + key + "\"]";
      const auto comma = key.find(',');
      if (comma == std::string::npos) throw ParseError(where + ": key must be \"i,j\"");
      const std::size_t i = parse_index(std::string_view(key).substr(0, comma), where);
      const std::size_t j = parse_index(std::string_view(key).substr(comma + 1), where);
      if (i >= dim || j >= dim) throw ParseError(where + ": index out of range for dim " + std::to_string(dim));
      if (i >= j) throw ParseError(where + ": requires i < j");
      if (!value.is_object()) throw ParseError(where + ": expected an object {\"k\": \"p/q\"}");
      for (const auto& [kkey, coeff] : value.items()) {
        const std::string kwhere = where + "[\"" + kkey + "\"]";
        const std::size_t k = parse_index(kkey, kwhere);
        if (k >= dim) throw ParseError(kwhere + ": index out of range for dim " + std::to_string(dim));
        file.structure.set(i, j, k, parse_json_rational(coeff, kwhere));
      }
    }
  }

  if (doc.contains("claims")) {
    const auto& claims = doc["claims"];
    if (!claims.is_array()) throw ParseError("'claims' must be an array");
    for (const auto& c : claims) {
      if (!c.is_string()) throw ParseError("'claims' entries must be strings");
      file.claims.push_back(parse_claim(c.get<std::string>()));
    }
  }
  return file;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

AlgebraRef algebra_ref_from_json(const json& v, const char* field) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object()) return algebra_from_json(v);
  throw ParseError(std::string("'") + field + "' must be an algebra object or a catalog key");
}

}  // namespace

AlgebraFile parse_algebra_file(std::string_view json_text) { return algebra_from_json(parse_json(json_text)); }

AlgebraFile read_algebra_file(const std::filesystem::path& path) {
  try {
    return parse_algebra_file(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string format_algebra_file(const StructureConstants& sc, const std::vector<Claim>& claims) {
  ordered_json doc;
  doc["name"] = sc.name();
  doc["dim"] = sc.dim();
  if (!sc.labels().empty()) doc["basis"] = sc.labels();
  ordered_json brackets = ordered_json::object();
  for (const auto& [key, bracket] : sc.table()) {
    ordered_json entry = ordered_json::object();
    for (const auto& [k, c] : bracket) entry[std::to_string(k)] = to_string(c);
    brackets[std::to_string(key.first) + "," + std::to_string(key.second)] = std::move(entry);
  }
  doc["brackets"] = std::move(brackets);
  if (!claims.empty()) {
    ordered_json cs = ordered_json::array();
    for (auto c : claims) cs.push_back(to_string(c));
    doc["claims"] = std::move(cs);
  }
  return doc.dump(2) + "\n";
}

EmbeddingFile parse_embedding_file(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (!doc.is_object()) throw ParseError("embedding document must be a JSON object");
  for (const char* field : {"domain", "codomain", "matrix"}) {
    if (!doc.contains(field)) throw ParseError(std::string("embedding document is missing '") + field + "'");
  }
  EmbeddingFile file{algebra_ref_from_json(doc["domain"], "domain"), algebra_ref_from_json(doc["codomain"], "codomain"),
                     std::string{}};
  const auto& m = doc["matrix"];
  if (m.is_string()) {
    const auto mode = m.get<std::string>();
    if (mode != "identity" && mode != "head-inclusion" && mode != "tail-inclusion") {
      throw ParseError("unknown matrix shorthand '" + mode + "'");
    }
    file.matrix = mode;
  } else if (m.is_array()) {
    std::vector<std::vector<Rational>> rows;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (!m[r].is_array()) throw ParseError("matrix row " + std::to_string(r) + " must be an array");
      std::vector<Rational> row;
      for (std::size_t c = 0; c < m[r].size(); ++c) {
        row.push_back(parse_json_rational(m[r][c], "matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
      }
      if (!rows.empty() && row.size() != rows.front().size()) throw ParseError("matrix rows have different lengths");
      rows.push_back(std::move(row));
    }
    file.matrix = std::move(rows);
  } else {
    throw ParseError("'matrix' must be an array of rows or a shorthand string");
  }
  return file;
}

EmbeddingFile read_embedding_file(const std::filesystem::path& path) {
  try {
    return parse_embedding_file(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace lierig

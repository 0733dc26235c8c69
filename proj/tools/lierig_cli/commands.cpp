#include "lierig_cli/commands.hpp"

#include "lierig/algebra_file.hpp"
#include "lierig/catalog.hpp"
#include "lierig/derivations.hpp"
#include "lierig/error.hpp"
#include "lierig/liealg.hpp"
#include "lierig/rigidity.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace lierig::cli {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json to_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row(r)));
  return a;
}

Json to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& v : s.basis()) basis.push_back(to_json(v));
  return Json{{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", std::move(basis)}};
}

Json to_json(const SeriesReport& s) {
  Json terms = Json::array();
  for (const auto& t : s.terms) terms.push_back(to_json(t));
  return Json{{"kind", s.kind == SeriesKind::LowerCentral ? "lower_central" : "derived"},
              {"dims", s.dims()},
              {"stabilized_dim", s.stabilized_dim},
              {"terms", std::move(terms)}};
}

Json to_json(const FlagVerdict& f) {
  Json j{{"status", to_string(f.status)}};
  Json flag = Json::array();
  for (const auto& s : f.flag) flag.push_back(to_json(s));
  j["flag"] = std::move(flag);
  if (f.witness) {
    j["witness"] = Json{{"stage", f.witness->stage},
                        {"element", f.witness->element},
                        {"residual_degree", f.witness->residual_degree},
                        {"residual", f.witness->residual.to_string()}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const Verdict& v) {
  Json j{{"status", to_string(v.status)}, {"reason", v.reason}};
  j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  j["derivation"] = v.derivation ? to_json(*v.derivation) : Json(nullptr);
  return j;
}

Json algebra_summary(const LieAlgebra& L) { return Json{{"name", L.name()}, {"dim", L.dim()}}; }

std::string join_dims(const std::vector<std::size_t>& dims) {
  std::ostringstream os;
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? " " : "") << dims[i];
  return os.str();
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

LieAlgebra load_algebra(const std::string& arg, const Options& opts) {
  constexpr std::string_view prefix = "catalog:";
  if (std::string_view(arg).substr(0, prefix.size()) == prefix) {
    return resolve_catalog_key(std::string_view(arg).substr(prefix.size()), opts.data_dir).algebra;
  }
  return load_entry(arg).algebra;
}

void emit_machine(const Json& doc, std::ostream& os) { os << doc.dump(2) << '\n'; }

void write_algebra(const LieAlgebra& L, const Options& opts, std::ostream& os) {
  const std::string text = format_algebra_file(L.structure());
  if (!opts.out) {
    os << text;
    return;
  }
  std::ofstream f(*opts.out, std::ios::binary);
  if (!f) throw InputError("cannot write '" + opts.out->string() + "'");
  f << text;
  if (opts.format == Format::Machine) {
    emit_machine(Json{{"written", opts.out->string()}, {"algebra", algebra_summary(L)}}, os);
  } else {
    os << "wrote " << opts.out->string() << " (" << L.name() << ", dim " << L.dim() << ")\n";
  }
}

Subspace parse_ideal_spec(const LieAlgebra& L, const std::string& spec) {
  const std::size_t n = L.dim();
  if (spec == "last-n") {
    if (n == 0) throw InputError("'last-n' needs a nonzero algebra");
    std::vector<Vector> vs;
    for (std::size_t i = 1; i < n; ++i) vs.push_back(L.basis_vector(i));
    return Subspace::span(n, vs);
  }
  std::vector<Vector> vs;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoul(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("malformed ideal spec '" + spec + "' (expected 'last-n' or comma-separated basis indices)");
    }
    if (idx >= n) throw InputError("ideal basis index " + std::to_string(idx) + " out of range");
    vs.push_back(L.basis_vector(idx));
  }
  return Subspace::span(n, vs);
}

Matrix embedding_matrix(const EmbeddingFile& file, const LieAlgebra& l, const LieAlgebra& g) {
  if (const auto* mode = std::get_if<std::string>(&file.matrix)) {
    if (*mode == "identity") {
      if (l.dim() != g.dim()) throw InputError("'identity' needs equal dimensions");
      return Matrix::identity(l.dim());
    }
    if (*mode == "head-inclusion") return head_inclusion(l.dim(), g.dim());
    return tail_inclusion(l.dim(), g.dim());
  }
  const auto& rows = std::get<std::vector<std::vector<Rational>>>(file.matrix);
  if (rows.size() != g.dim()) {
    throw InputError("matrix has " + std::to_string(rows.size()) + " rows, codomain has dim " + std::to_string(g.dim()));
  }
  if (rows.empty()) return Matrix(0, l.dim());
  return Matrix::from_rows(rows);
}

}  // namespace

void cmd_check(const std::string& algebra, const Options& opts, std::ostream& os) {
  const LieAlgebra L = load_algebra(algebra, opts);
  const auto lcs = lower_central_series(L);
  const auto ds = derived_series(L);
  const bool nilpotent = lcs.stabilized_dim == 0;
  const bool solvable = ds.stabilized_dim == 0;
  const auto flag = completely_solvable_flag(L);
  const Subspace z = center(L);

  if (opts.format == Format::Machine) {
    Json doc{{"command", "check"}, {"algebra", algebra_summary(L)}, {"jacobi", "ok"}, {"nilpotent", nilpotent}};
    doc["nilpotency_class"] = nilpotent ? Json(lcs.terms.size() - 1) : Json(nullptr);
    doc["solvable"] = solvable;
    doc["lower_central_series"] = to_json(lcs);
    doc["derived_series"] = to_json(ds);
    doc["center"] = to_json(z);
    doc["completely_solvable"] = to_json(flag);
    emit_machine(doc, os);
    return;
  }
  os << "algebra: " << L.name() << " (dim " << L.dim() << ")\n";
  os << "jacobi: ok, nilpotent: " << bool_text(nilpotent);
  if (nilpotent) os << " (class " << lcs.terms.size() - 1 << ")";
  os << ", completely_solvable: " << to_string(flag.status) << "\n";
  os << "solvable: " << bool_text(solvable) << "\n";
  os << "lower central series dims: " << join_dims(lcs.dims()) << "\n";
  os << "derived series dims: " << join_dims(ds.dims()) << "\n";
  os << "center dim: " << z.dim() << "\n";
  if (flag.witness) {
    os << "flag obstruction: element " << L.label(flag.witness->element) << " at stage " << flag.witness->stage
       << ", residual factor " << flag.witness->residual.to_string() << "\n";
  }
}

void cmd_derivations(const std::string& algebra, const Options& opts, std::ostream& os) {
  const LieAlgebra L = load_algebra(algebra, opts);
  const OperatorAlgebra der = derivation_algebra(L);
  const OperatorAlgebra inner = inner_derivations(L);
  const bool all_nilpotent = engel_all_nilpotent(der);
  if (opts.format == Format::Machine) {
    Json basis = Json::array();
    for (const auto& d : der.ops()) basis.push_back(to_json(d));
    Json doc{{"command", "derivations"},
             {"algebra", algebra_summary(L)},
             {"der_dim", der.dim()},
             {"inner_dim", inner.dim()},
             {"outer_dim", der.dim() - inner.dim()},
             {"all_nilpotent", all_nilpotent},
             {"basis", std::move(basis)}};
    emit_machine(doc, os);
    return;
  }
  os << "algebra: " << L.name() << " (dim " << L.dim() << ")\n";
  os << "der_dim: " << der.dim() << ", inner_dim: " << inner.dim() << ", outer_dim: " << der.dim() - inner.dim()
     << "\n";
  os << "all derivations nilpotent: " << bool_text(all_nilpotent) << "\n";
  for (std::size_t a = 0; a < der.dim(); ++a) os << "D" << a << " = " << der.ops()[a] << "\n";
}

void cmd_char_nilpotent(const std::string& algebra, const Options& opts, std::ostream& os) {
  const LieAlgebra L = load_algebra(algebra, opts);
  const auto r = is_characteristically_nilpotent(L);
  if (!r.agree) throw InternalError("the three characteristic-nilpotency checks disagree");
  if (opts.format == Format::Machine) {
    emit_machine(Json{{"command", "char-nilpotent"},
                      {"algebra", algebra_summary(L)},
                      {"der_dim", r.der_dim},
                      {"via_der_nilpotent", r.via_der_nilpotent},
                      {"via_all_elements_nilpotent", r.via_all_elements_nilpotent},
                      {"via_semidirect_nilpotent", r.via_semidirect_nilpotent},
                      {"agree", r.agree}},
                 os);
    return;
  }
  os << "algebra: " << L.name() << " (dim " << L.dim() << "), der_dim: " << r.der_dim << "\n";
  os << "Der nilpotent: " << bool_text(r.via_der_nilpotent) << "\n";
  os << "all derivations nilpotent: " << bool_text(r.via_all_elements_nilpotent) << "\n";
  os << "Der x L nilpotent: " << bool_text(r.via_semidirect_nilpotent) << "\n";
  os << "characteristically nilpotent: " << bool_text(r.via_der_nilpotent) << " (checks agree)\n";
}

void cmd_semidirect(const std::string& algebra, const Options& opts, std::ostream& os) {
  write_algebra(make_der_semidirect(load_algebra(algebra, opts)), opts, os);
}

void cmd_catalog(const std::string& key, const std::vector<long>& params, const Options& opts, std::ostream& os) {
  write_algebra(catalog_entry(key, params, opts.data_dir).algebra, opts, os);
}

void cmd_rigidity(const std::filesystem::path& embedding, const Options& opts, std::ostream& os) {
  const EmbeddingFile file = read_embedding_file(embedding);
  LieAlgebra l = resolve_algebra(file.domain, opts.data_dir);
  LieAlgebra g = resolve_algebra(file.codomain, opts.data_dir);
  Matrix m = embedding_matrix(file, l, g);
  const Embedding e = Embedding::certify(std::move(l), std::move(g), std::move(m));
  const RigidityReport r = rigidity_report(e);
  if (opts.format == Format::Machine) {
    emit_machine(Json{{"command", "rigidity"},
                      {"domain", algebra_summary(e.domain())},
                      {"codomain", algebra_summary(e.codomain())},
                      {"is_ideal", r.is_ideal},
                      {"normalizer_dim", r.normalizer_dim},
                      {"centralizer_dim", r.centralizer_dim},
                      {"der_dim", r.der_dim},
                      {"gtd_image_dim", r.gtd_image_dim},
                      {"gtd_surjective", r.gtd_surjective},
                      {"z1_dim", r.z1_dim},
                      {"b1_dim", r.b1_dim},
                      {"vertical_subspace_dim", r.vertical_subspace_dim},
                      {"vertical_in_coboundaries", r.vertical_in_coboundaries},
                      {"vertical", to_json(r.vertical)},
                      {"horizontal", to_json(r.horizontal)},
                      {"local", to_json(r.local)}},
                 os);
    return;
  }
  os << "embedding: " << e.domain().name() << " (dim " << e.domain().dim() << ") -> " << e.codomain().name()
     << " (dim " << e.codomain().dim() << ")\n";
  os << "is_ideal: " << bool_text(r.is_ideal) << ", normalizer_dim: " << r.normalizer_dim
     << ", centralizer_dim: " << r.centralizer_dim << "\n";
  os << "gtd_image_dim: " << r.gtd_image_dim << ", der_dim: " << r.der_dim << "\n";
  os << "z1_dim: " << r.z1_dim << ", b1_dim: " << r.b1_dim << ", vertical_subspace_dim: " << r.vertical_subspace_dim
     << "\n";
  auto line = [&](const char* name, const Verdict& v) {
    os << name << ": " << to_string(v.status) << " (" << v.reason << ")\n";
    if (v.derivation) os << "  derivation: " << *v.derivation << "\n";
    if (v.witness) {
      os << "  " << (v.status == VerdictStatus::NotRigid ? "witness" : "candidate")
         << " cocycle: " << unflatten(*v.witness, e.codomain().dim(), e.domain().dim()) << "\n";
    }
  };
  line("vertical", r.vertical);
  line("horizontal", r.horizontal);
  line("local", r.local);
}

void cmd_abelian_unique(const std::string& algebra, const std::string& ideal_spec, const Options& opts,
                        std::ostream& os) {
  const LieAlgebra L = load_algebra(algebra, opts);
  const Subspace a = parse_ideal_spec(L, ideal_spec);
  const auto r = unique_codim1_abelian(L, a);
  if (opts.format == Format::Machine) {
    Json doc{{"command", "abelian-unique"},
             {"algebra", algebra_summary(L)},
             {"ideal", to_json(a)},
             {"unique", r.unique},
             {"kernel_dim", r.kernel_dim},
             {"transversal_index", r.transversal_index}};
    doc["second_subalgebra"] = r.second_subalgebra ? to_json(*r.second_subalgebra) : Json(nullptr);
    doc["note"] = r.note;
    emit_machine(doc, os);
    return;
  }
  os << "algebra: " << L.name() << " (dim " << L.dim() << "), ideal dim " << a.dim() << "\n";
  os << "unique: " << bool_text(r.unique) << ", kernel_dim: " << r.kernel_dim << "\n";
  if (r.second_subalgebra) {
    os << "second abelian subalgebra basis:";
    for (const auto& v : r.second_subalgebra->basis()) os << ' ' << Matrix::from_rows({v});
    os << "\n";
  }
  if (!r.note.empty()) os << "note: " << r.note << "\n";
}

void cmd_obstruction(const std::string& l, const std::string& g, const Options& opts, std::ostream& os) {
  const LieAlgebra la = load_algebra(l, opts);
  const LieAlgebra ga = load_algebra(g, opts);
  const auto v = theorem_obstruction(la, ga);
  if (opts.format == Format::Machine) {
    emit_machine(Json{{"command", "obstruction"},
                      {"l", algebra_summary(la)},
                      {"g", algebra_summary(ga)},
                      {"status", to_string(v.status)},
                      {"g_nilpotent", v.g_nilpotent},
                      {"der_nilpotent", v.der_nilpotent},
                      {"g_completely_solvable", to_string(v.g_flag)},
                      {"der_completely_solvable", to_string(v.der_flag)},
                      {"reason", v.reason}},
                 os);
    return;
  }
  os << "l: " << la.name() << ", g: " << ga.name() << "\n";
  os << "obstruction: " << to_string(v.status) << " (" << v.reason << ")\n";
  os << "g nilpotent: " << bool_text(v.g_nilpotent) << ", Der(l) nilpotent: " << bool_text(v.der_nilpotent) << "\n";
  os << "g completely solvable: " << to_string(v.g_flag) << ", Der(l) completely solvable: " << to_string(v.der_flag)
     << "\n";
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"lierig: exact derivation, nilpotency and rigidity computations for Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string out_path;
  std::string data_dir = default_data_dir().string();
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--out", out_path, "Output file for commands that produce an algebra");
  app.add_option("--data-dir", data_dir, "Directory with shipped catalog data files");

  std::string algebra, second, ideal = "last-n", key;
  std::vector<long> params;

  auto* check = app.add_subcommand("check", "Validate an algebra and report its structure");
  check->add_option("algebra", algebra, "Algebra file or catalog:<key>")->required();
  auto* derivs = app.add_subcommand("derivations", "Compute Der(L) and inner/outer dimensions");
  derivs->add_option("algebra", algebra, "Algebra file or catalog:<key>")->required();
  auto* charnil = app.add_subcommand("char-nilpotent", "Decide characteristic nilpotency three ways");
  charnil->add_option("algebra", algebra, "Algebra file or catalog:<key>")->required();
  auto* semi = app.add_subcommand("semidirect", "Write Der(L) x L as an algebra file");
  semi->add_option("algebra", algebra, "Algebra file or catalog:<key>")->required();
  auto* rig = app.add_subcommand("rigidity", "Rigidity report for an embedding file");
  rig->add_option("embedding", algebra, "Embedding file")->required();
  auto* cat = app.add_subcommand("catalog", "Write a catalog algebra as an algebra file");
  cat->add_option("key", key, "Catalog key")->required();
  cat->add_option("params", params, "Integer parameters");
  auto* uniq = app.add_subcommand("abelian-unique", "Uniqueness of a codimension-one abelian ideal");
  uniq->add_option("algebra", algebra, "Algebra file or catalog:<key>")->required();
  uniq->add_option("--ideal", ideal, "'last-n' or comma-separated basis indices");
  auto* obst = app.add_subcommand("obstruction", "Check the vertical-rigidity obstruction for l into g");
  obst->add_option("l", algebra, "Algebra file or catalog:<key>")->required();
  obst->add_option("g", second, "Algebra file or catalog:<key>")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  Options opts;
  opts.format = format == "machine" ? Format::Machine : Format::Text;
  if (!out_path.empty()) opts.out = out_path;
  opts.data_dir = data_dir;

  try {
    if (*check) cmd_check(algebra, opts, out);
    else if (*derivs) cmd_derivations(algebra, opts, out);
    else if (*charnil) cmd_char_nilpotent(algebra, opts, out);
    else if (*semi) cmd_semidirect(algebra, opts, out);
    else if (*rig) cmd_rigidity(algebra, opts, out);
    else if (*cat) cmd_catalog(key, params, opts, out);
    else if (*uniq) cmd_abelian_unique(algebra, ideal, opts, out);
    else if (*obst) cmd_obstruction(algebra, second, opts, out);
  } catch (const JacobiError& e) {
    err << "jacobi: failed: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace lierig::cli

#include "lierig_cli/commands.hpp"

#include "lierig/algebra_file.hpp"
#include "lierig/catalog.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <sstream>

namespace {

const std::filesystem::path kData = LIERIG_TEST_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "lierig");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = lierig::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (kData / name).string(); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("check reports structure") {
  const auto r = run({"check", data("heisenberg.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("jacobi: ok, nilpotent: true (class 2), completely_solvable: yes") != std::string::npos);
  const auto e2 = run({"check", "catalog:euclidean2"});
  CHECK(e2.code == 0);
  CHECK(e2.out.find("completely_solvable: no") != std::string::npos);
}

TEST_CASE("rigidity of the inclusion into Der x l") {
  const auto r = run({"rigidity", data("incl_charnilp.json"), "--format", "machine"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["vertical"]["status"] == "RigidInfinitesimally");
  CHECK(j["gtd_image_dim"] == j["der_dim"]);
  CHECK(j["der_dim"] == 12);
  CHECK(j["is_ideal"] == true);
  const auto text = run({"rigidity", data("incl_charnilp.json")});
  CHECK(text.out.find("vertical: RigidInfinitesimally") != std::string::npos);
}

TEST_CASE("abelian uniqueness on the ladder") {
  const auto r = run({"abelian-unique", data("ladder4.json"), "--ideal", "last-n"});
  CHECK(r.code == 0);
  CHECK(r.out.find("unique: true, kernel_dim: 1") != std::string::npos);
  const auto m = run({"--format", "machine", "abelian-unique", "catalog:ladder:2", "--ideal", "1,2"});
  REQUIRE(m.code == 0);
  const auto j = nlohmann::json::parse(m.out);
  CHECK(j["unique"] == false);
  CHECK(j["second_subalgebra"]["dim"] == 2);
}

TEST_CASE("exit codes") {
  CHECK(run({"check", data("missing.json")}).code == 2);
  CHECK(run({"check", data("bad_index.json")}).code == 2);
  CHECK(run({"check", data("h3_claims_charnilp.json")}).code == 2);
  CHECK(run({"check", "catalog:nope"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"check", data("heisenberg.json"), "--format", "pdf"}).code == 2);
  CHECK(run({"abelian-unique", "catalog:heisenberg", "--ideal", "0,1"}).code == 2);
  CHECK(run({"abelian-unique", "catalog:ladder:3", "--ideal", "1,x"}).code == 2);
  // a NotRigid verdict is still a completed computation
  const auto nr = run({"rigidity", data("h3_into_h3_plus_line.json")});
  CHECK(nr.code == 0);
  CHECK(nr.out.find("vertical: NotRigid") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("machine output is deterministic and complete") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"check", "catalog:charnilp"}, {"derivations", "catalog:heisenberg"},
        {"char-nilpotent", "catalog:ladder:3"}, {"rigidity", data("h3_into_h3_plus_line.json")},
        {"obstruction", "catalog:heisenberg", "catalog:ladder:4"}}) {
    auto with = args;
    with.push_back("--format");
    with.push_back("machine");
    const auto a = run(with), b = run(with);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::accept(a.out));
  }
  const auto j = nlohmann::json::parse(run({"rigidity", data("h3_into_h3_plus_line.json"), "--format", "machine"}).out);
  for (const char* key : {"is_ideal", "normalizer_dim", "centralizer_dim", "der_dim", "gtd_image_dim", "z1_dim", "b1_dim",
                          "vertical_subspace_dim", "vertical", "horizontal", "local"}) {
    CHECK(j.contains(key));
  }
  // rationals travel as strings
  CHECK(j["vertical"]["derivation"][0][0].is_string());
  const auto d = nlohmann::json::parse(run({"derivations", "catalog:heisenberg", "--format", "machine"}).out);
  CHECK(d["der_dim"] == 6);
  CHECK(d["inner_dim"] == 2);
  CHECK(d["outer_dim"] == 4);
  const auto o = nlohmann::json::parse(run({"obstruction", "catalog:heisenberg", "catalog:ladder:4", "--format", "machine"}).out);
  CHECK(o["status"] == "Obstructed");
}

TEST_CASE("catalog output round-trips through check") {
  const auto tmp = std::filesystem::temp_directory_path() / "lierig_cli_roundtrip";
  std::filesystem::create_directories(tmp);
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"ladder", "5"}, {"heisenberg"}, {"euclidean2"}, {"charnilp"}, {"abelian", "3"}}) {
    const auto file = (tmp / (args.front() + ".json")).string();
    std::vector<std::string> cmd{"catalog"};
    cmd.insert(cmd.end(), args.begin(), args.end());
    cmd.push_back("--out");
    cmd.push_back(file);
    REQUIRE(run(cmd).code == 0);
    std::vector<long> params;
    for (std::size_t i = 1; i < args.size(); ++i) params.push_back(std::stol(args[i]));
    CHECK(lierig::load_entry(file).algebra.structure() == lierig::catalog_entry(args.front(), params).algebra.structure());
    CHECK(run({"check", file}).code == 0);
  }
  const auto stdout_copy = run({"catalog", "heisenberg"});
  CHECK(stdout_copy.out == lierig::read_text_file(data("heisenberg.json")));

  const auto semi = (tmp / "semi.json").string();
  REQUIRE(run({"semidirect", data("heisenberg.json"), "--out", semi}).code == 0);
  CHECK(lierig::load_entry(semi).algebra.dim() == 9);
  std::filesystem::remove_all(tmp);
}

}

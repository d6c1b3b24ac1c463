#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "bpnorm/json_io.hpp"
#include "bpnorm/structure.hpp"

using namespace bpnorm;
namespace fs = std::filesystem;

namespace {

std::string cli_path() {
  const char* p = std::getenv("BPNORM_CLI");
  REQUIRE_MESSAGE(p != nullptr, "BPNORM_CLI must point at the CLI binary");
  return p;
}

fs::path scratch_dir() {
  fs::path d = fs::temp_directory_path() / "bpnorm_cli_test";
  fs::create_directories(d);
  return d;
}

int run(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

Json read_file(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  return Json::parse(in);
}

}  // namespace

TEST_CASE("alpha subcommand on the swap") {
  fs::path dir = scratch_dir();
  fs::path in = dir / "w.json";
  fs::path out = dir / "alpha.json";
  write_file(in, operator_to_json(make_swap(2)).dump());

  int code = run("alpha --input " + in.string() + " --output " + out.string());
  CHECK(code == 0);
  Json j = read_file(out);
  CHECK(j.at("schema") == "bpnorm/1");
  CHECK(j.at("kind") == "alpha");
  CHECK(std::abs(j.at("value").get<double>() - 1.0) <= 2e-4);
  CHECK(j.contains("witness"));
}

TEST_CASE("membership verdict drives the exit code") {
  fs::path dir = scratch_dir();
  fs::path w = dir / "w.json";
  fs::path id = dir / "id.json";
  fs::path out = dir / "mem.json";
  write_file(w, operator_to_json(make_swap(2)).dump());
  write_file(id,
             operator_to_json(BipartiteOperator(2, Matrix(Matrix::Identity(4, 4))))
                 .dump());

  CHECK(run("membership --input " + w.string() + " --output " + out.string()) == 0);
  Json j = read_file(out);
  CHECK(j.at("in_D") == true);

  // alpha(I (x) I) = 2: not in D, verdict exit code 3
  CHECK(run("membership --input " + id.string() + " --output " + out.string()) == 3);
}

TEST_CASE("bp-check flags the negated swap") {
  fs::path dir = scratch_dir();
  fs::path neg = dir / "negw.json";
  fs::path out = dir / "bp.json";
  write_file(neg,
             operator_to_json(BipartiteOperator(2, Matrix(-make_swap(2).mat))).dump());
  CHECK(run("bp-check --input " + neg.string() + " --output " + out.string()) == 3);
  Json j = read_file(out);
  CHECK(j.at("block_positive") == false);
  CHECK(j.at("certificate").at("value").get<double>() < -1e-6);
}

TEST_CASE("catalog and map round trips through the CLI") {
  fs::path dir = scratch_dir();
  fs::path cat = dir / "cat.json";
  CHECK(run("catalog --name swap --n 2 --output " + cat.string()) == 0);
  BipartiteOperator w = operator_from_json(read_file(cat));
  CHECK((w.mat - make_swap(2).mat).cwiseAbs().maxCoeff() <= 1e-12);

  fs::path dens = dir / "dens.json";
  fs::path mapj = dir / "map.json";
  CHECK(run("density-to-map --input " + cat.string() + " --output " + mapj.string()) ==
        0);
  CHECK(run("map-to-density --input " + mapj.string() + " --output " + dens.string()) ==
        0);
  BipartiteOperator round = operator_from_json(read_file(dens));
  CHECK((round.mat - make_swap(2).mat).cwiseAbs().maxCoeff() <= 1e-10);
  CHECK(read_file(dens).at("pairing_residual").get<double>() <= 1e-10);
}

TEST_CASE("pi subcommand reports a bracketing interval") {
  fs::path dir = scratch_dir();
  fs::path in = dir / "pure.json";
  fs::path out = dir / "pi.json";
  Vector f = max_entangled_vector(2);
  write_file(in, operator_to_json(BipartiteOperator(2, Matrix(f * f.adjoint()))).dump());
  CHECK(run("pi --input " + in.string() + " --output " + out.string()) == 0);
  Json j = read_file(out);
  CHECK(j.at("lower").get<double>() >= 2.0 - 1e-6);
  CHECK(j.at("upper").get<double>() <= 2.0 + 1e-6);
}

TEST_CASE("sample-d output is byte-deterministic") {
  fs::path dir = scratch_dir();
  fs::path a = dir / "a.json";
  fs::path b = dir / "b.json";
  CHECK(run("sample-d --n 2 --seed 7 --index 3 --output " + a.string()) == 0);
  CHECK(run("sample-d --n 2 --seed 7 --index 3 --output " + b.string()) == 0);
  std::ifstream fa(a), fb(b);
  std::string sa((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
  std::string sb((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
  CHECK(sa == sb);
  CHECK(!sa.empty());
}

TEST_CASE("usage and parse errors exit with code 2") {
  fs::path dir = scratch_dir();
  fs::path bad = dir / "bad.json";
  write_file(bad, "{ not json");
  CHECK(run("alpha --input " + bad.string()) == 2);
  CHECK(run("alpha --input " + (dir / "missing.json").string()) == 2);
  CHECK(run("no-such-subcommand") == 2);
  CHECK(run("catalog --name no-such-operator --n 2") == 2);
  CHECK(run("--help") == 0);

  // well-formed JSON with inconsistent shape
  write_file(bad, R"({"n": 2, "re": [[1.0]], "im": [[0.0]]})");
  CHECK(run("alpha --input " + bad.string()) == 2);
}

TEST_CASE("decompose subcommand") {
  fs::path dir = scratch_dir();
  fs::path in = dir / "mix.json";
  fs::path out = dir / "dec.json";
  Matrix mix = 0.5 * make_swap(2).mat + 0.5 * make_max_entangled(2).mat;
  write_file(in, operator_to_json(BipartiteOperator(2, mix)).dump());
  CHECK(run("decompose --input " + in.string() + " --output " + out.string()) == 0);
  Json j = read_file(out);
  CHECK(j.at("status") == "found");
  CHECK(j.at("residual").get<double>() <= 1e-6);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "emsurf/group_spec.hpp"

using namespace emsurf;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name, const std::string& content) {
    path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("grammar") {
  const GroupSpec g1 = parse_group_spec("gamma1:7");
  CHECK(g1.kind == GroupSpec::Kind::Gamma1);
  CHECK(g1.level == 7);
  CHECK(g1.text == "gamma1:7");

  const GroupSpec g = parse_group_spec("gamma:12");
  CHECK(g.kind == GroupSpec::Kind::Gamma);
  CHECK(g.level == 12);

  const GroupSpec img = parse_group_spec("image:8:subgroup.txt");
  CHECK(img.kind == GroupSpec::Kind::Image);
  CHECK(img.level == 8);
  CHECK(img.path == "subgroup.txt");

  const GroupSpec perm = parse_group_spec("perm:exported.json");
  CHECK(perm.kind == GroupSpec::Kind::Perm);
  CHECK(perm.path == "exported.json");
}

TEST_CASE("grammar errors carry a position") {
  CHECK_THROWS_AS(parse_group_spec("gamma:0"), parse_error);
  CHECK_THROWS_AS(parse_group_spec("gamma:"), parse_error);
  CHECK_THROWS_AS(parse_group_spec("gamma:x"), parse_error);
  CHECK_THROWS_AS(parse_group_spec("gamma2:5"), parse_error);
  CHECK_THROWS_AS(parse_group_spec("nonsense"), parse_error);
  CHECK_THROWS_AS(parse_group_spec("image:5"), parse_error);
  CHECK_THROWS_AS(parse_group_spec("image:5:"), parse_error);
  CHECK_THROWS_AS(parse_group_spec("perm:"), parse_error);
  try {
    parse_group_spec("gamma:x");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("generator files") {
  TempFile file("emsurf_gens.txt",
                "# level 8 generators\n"
                "1 1 0 1   # T\n"
                "\n"
                "7 0 0 7\n");  // -I mod 8
  const auto gens = read_generator_file(file.path.string(), 8);
  REQUIRE(gens.size() == 2);
  CHECK(gens[0] == make_mod(1, 1, 0, 1, 8));
  CHECK(gens[1] == make_mod(-1, 0, 0, -1, 8));

  TempFile bad("emsurf_bad_gens.txt", "1 2 3\n");
  CHECK_THROWS_AS(read_generator_file(bad.path.string(), 8), parse_error);

  TempFile nondet("emsurf_nondet_gens.txt", "2 0 0 2\n");
  CHECK_THROWS_AS(read_generator_file(nondet.path.string(), 8), parse_error);

  CHECK_THROWS_AS(read_generator_file("/nonexistent/path.txt", 8), parse_error);
}

TEST_CASE("resolving specs") {
  CHECK(resolve_group(parse_group_spec("gamma1:4")).rep.n == 12);

  // image:4:<file with T> is exactly Gamma1(4)
  TempFile file("emsurf_g14.txt", "1 1 0 1\n");
  const Subgroup img =
      resolve_group(parse_group_spec("image:4:" + file.path.string()));
  CHECK(img.rep.n == 12);
  CHECK_FALSE(img.minus_one);

  // perm: round-trip through a file
  const Subgroup g = resolve_group(parse_group_spec("gamma1:4"));
  TempFile perm("emsurf_perm.json", export_permutation(g));
  const Subgroup loaded =
      resolve_group(parse_group_spec("perm:" + perm.path.string()));
  CHECK(loaded.rep.n == g.rep.n);
  CHECK(loaded.rep.sigma_s == g.rep.sigma_s);

  CHECK_THROWS_AS(resolve_group(parse_group_spec("perm:/no/such/file.json")),
                  parse_error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(EMSURF_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf;
  while (size_t got = fread(buf.data(), 1, buf.size(), pipe))
    result.output.append(buf.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / "emsurf_cli_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string file(const std::string& name, const std::string& content) const {
    const fs::path p = dir / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("report: verdict true gives exit 0 and a stable document") {
  Scratch scratch;
  const std::string flags = " --no-cache --weights 0..6 --format json";
  const RunResult a = run("report gamma1:4" + flags);
  CHECK(a.exit_code == 0);
  const auto doc = nlohmann::json::parse(a.output);
  CHECK(doc["schema"] == "emsurf/1");
  CHECK(doc["verdict"] == true);
  CHECK(doc["weights"][1]["side_a"] == 2);
  // determinism: byte-identical on a second run
  const RunResult b = run("report gamma1:4" + flags);
  CHECK(a.output == b.output);
}

TEST_CASE("report: invalid input gives exit 2") {
  CHECK(run("report gamma:0 --no-cache").exit_code == 2);
  CHECK(run("report nonsense --no-cache").exit_code == 2);
  CHECK(run("report perm:/no/such/file.json --no-cache").exit_code == 2);
}

TEST_CASE("report: groups with -I are refused in strict mode") {
  const RunResult lax = run("report gamma1:2 --no-cache");
  CHECK(lax.exit_code == 0);
  const auto doc = nlohmann::json::parse(lax.output);
  CHECK(doc.contains("refusal"));
  CHECK(doc["group"]["minus_one"] == true);

  CHECK(run("report gamma1:2 --no-cache --strict").exit_code == 2);
  CHECK(run("report gamma1:1 --no-cache --strict").exit_code == 2);
  CHECK(run("report gamma:1 --no-cache --strict").exit_code == 2);
  CHECK(run("report gamma:2 --no-cache --strict").exit_code == 2);
}

TEST_CASE("export-perm round-trips through perm: input") {
  Scratch scratch;
  const std::string exported = scratch.path("g14.json");
  CHECK(run("export-perm gamma1:4 --no-cache -o " + exported).exit_code == 0);

  const RunResult direct = run("report gamma1:4 --no-cache --format json");
  const RunResult via_perm =
      run("report perm:" + exported + " --no-cache --format json");
  CHECK(via_perm.exit_code == 0);
  const auto a = nlohmann::json::parse(direct.output);
  const auto b = nlohmann::json::parse(via_perm.output);
  // identical weight tables and invariants; only the spec label differs
  CHECK(a["weights"] == b["weights"]);
  CHECK(a["even_weights"] == b["even_weights"]);
  CHECK(a["canonical_ring"] == b["canonical_ring"]);
  CHECK(a["curve"] == b["curve"]);
  CHECK(a["surface"] == b["surface"]);
}

TEST_CASE("batch: corpus passes, bad lines are reported, empty file is ok") {
  Scratch scratch;
  std::string corpus;
  for (int N = 3; N <= 12; ++N) corpus += "gamma1:" + std::to_string(N) + "\n";
  for (int N = 3; N <= 8; ++N) corpus += "gamma:" + std::to_string(N) + "\n";
  const std::string corpus_file = scratch.file("corpus.txt", corpus);
  const RunResult all = run("batch " + corpus_file + " --no-cache --format csv");
  CHECK(all.exit_code == 0);
  CHECK(all.output.find("16 passed, 0 failed") != std::string::npos);

  const std::string mixed_file =
      scratch.file("mixed.txt", "gamma1:4\ngamma:0\ngamma1:5\n");
  const RunResult mixed = run("batch " + mixed_file + " --no-cache --format json");
  CHECK(mixed.exit_code == 2);
  const auto doc = nlohmann::json::parse(mixed.output);
  CHECK(doc["groups"].size() == 3);
  CHECK(doc["groups"][0]["status"] == "pass");
  CHECK(doc["groups"][1]["status"] == "error");
  CHECK(doc["groups"][2]["status"] == "pass");
  CHECK(doc["summary"]["errors"] == 1);

  const std::string empty_file = scratch.file("empty.txt", "");
  CHECK(run("batch " + empty_file + " --no-cache").exit_code == 0);

  // refusals are neutral by default, fatal under --strict
  const std::string refused_file = scratch.file("refused.txt", "gamma1:2\n");
  CHECK(run("batch " + refused_file + " --no-cache").exit_code == 0);
  CHECK(run("batch " + refused_file + " --no-cache --strict").exit_code == 2);
}

TEST_CASE("image: specs work end to end") {
  Scratch scratch;
  // <T mod 4> is exactly gamma1:4, so the reports must carry the same tables
  const std::string gens = scratch.file("h.txt", "# T\n1 1 0 1\n");
  const RunResult via_image =
      run("report image:4:" + gens + " --no-cache --format json");
  CHECK(via_image.exit_code == 0);
  const RunResult direct = run("report gamma1:4 --no-cache --format json");
  const auto a = nlohmann::json::parse(via_image.output);
  const auto b = nlohmann::json::parse(direct.output);
  CHECK(a["weights"] == b["weights"]);
  CHECK(a["curve"] == b["curve"]);
  CHECK(a["group"]["index_sl2"] == 12);
  CHECK(run("crosscheck image:4:" + gens + " --source oracle --no-cache")
            .exit_code == 0);
}

TEST_CASE("crosscheck against the oracle") {
  CHECK(run("crosscheck gamma1:7 --source oracle --no-cache").exit_code == 0);
  CHECK(run("crosscheck gamma:5 --source oracle --no-cache").exit_code == 0);
  // the oracle needs a finite model, which permutation input does not have
  Scratch scratch;
  const std::string exported = scratch.path("g14.json");
  REQUIRE(run("export-perm gamma1:4 --no-cache -o " + exported).exit_code == 0);
  CHECK(run("crosscheck perm:" + exported + " --source oracle --no-cache")
            .exit_code == 2);
}

TEST_CASE("crosscheck against cached lmfdb fixtures") {
  // --no-cache keeps the fixture directory read-only for permutations
  const std::string fixture_flags =
      " --source lmfdb --offline --no-cache --cache-dir " +
      std::string(EMSURF_FIXTURE_DIR);
  const RunResult r7 = run("crosscheck gamma1:7" + fixture_flags);
  CHECK(r7.exit_code == 0);
  CHECK(r7.output.find("dim S_3 (= p_g) ours 1 vs lmfdb 1 (match)") !=
        std::string::npos);
  CHECK(run("crosscheck gamma1:11" + fixture_flags).exit_code == 0);
  // offline miss is invalid input, not a verification failure
  CHECK(run("crosscheck gamma1:23" + fixture_flags).exit_code == 2);
  // lmfdb source is defined for gamma1 levels only
  CHECK(run("crosscheck gamma:5" + fixture_flags).exit_code == 2);
}

TEST_CASE("permutation cache is written and reused") {
  Scratch scratch;
  const std::string flags = " --cache-dir " + scratch.path("cache") +
                            " --format json --weights 0..4";
  const RunResult first = run("report gamma1:6" + flags);
  CHECK(first.exit_code == 0);
  CHECK(fs::exists(scratch.path("cache") + "/perms/gamma1_6.json"));
  const RunResult second = run("report gamma1:6" + flags);
  CHECK(second.exit_code == 0);
  CHECK(first.output == second.output);
}

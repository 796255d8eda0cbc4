#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "emsurf/cache.hpp"
#include "emsurf/dimensions.hpp"
#include "emsurf/group_spec.hpp"
#include "emsurf/lmfdb.hpp"
#include "emsurf/oracle.hpp"
#include "emsurf/report.hpp"
#include "emsurf/version.hpp"

namespace {

using namespace emsurf;

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitInvalidInput = 2;

struct CommonOpts {
  std::optional<std::string> cache_dir;
  bool no_cache = false;
};

// m-range "A..B" for the graded tables
std::pair<int64_t, int64_t> parse_weights(const std::string& text) {
  const size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int64_t m = std::stoll(text);
      return {m, m};
    }
    const int64_t a = std::stoll(text.substr(0, dots));
    const int64_t b = std::stoll(text.substr(dots + 2));
    if (a < 0 || b < a) throw std::invalid_argument("range");
    return {a, b};
  } catch (const std::exception&) {
    throw parse_error("invalid weight range '" + text + "' (expected A..B)");
  }
}

// Cacheable specs are rebuilt from their canonical text alone; permutation
// input is already explicit and image files may change underneath a cache.
bool cacheable(const GroupSpec& spec) {
  return spec.kind == GroupSpec::Kind::Gamma ||
         spec.kind == GroupSpec::Kind::Gamma1;
}

Subgroup acquire_group(const GroupSpec& spec, const CommonOpts& common) {
  if (common.no_cache || !cacheable(spec)) return resolve_group(spec);
  const auto dir = resolve_cache_dir(common.cache_dir);
  const std::string key = cache_key(spec.text);
  if (auto payload = cache_read(dir, "perms", key)) {
    try {
      Subgroup g = load_permutation(*payload);
      g.label = spec.text;
      // reattach the congruence origin lost in the flat document
      if (spec.kind == GroupSpec::Kind::Gamma)
        g.origin = builtin_spec(Family::Gamma, spec.level);
      else
        g.origin = builtin_spec(Family::Gamma1, spec.level);
      return g;
    } catch (const std::exception&) {
      // stale or corrupt entry: fall through and rebuild
    }
  }
  Subgroup g = resolve_group(spec);
  cache_write(dir, "perms", key, export_permutation(g));
  return g;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw parse_error("cannot write to '" + out_path + "'");
  out << text;
}

int cmd_report(const std::string& spec_text, const std::string& weights,
               const std::string& format, bool strict, bool timestamp,
               const std::string& out_path, const CommonOpts& common) {
  const GroupSpec spec = parse_group_spec(spec_text);
  const Subgroup g = acquire_group(spec, common);
  ReportOptions opt;
  std::tie(opt.m_min, opt.m_max) = parse_weights(weights);
  opt.with_timestamp = timestamp;
  const nlohmann::json doc = report_document(g, opt);
  emit(render(doc, format), out_path);
  if (g.minus_one) return strict ? kExitInvalidInput : kExitOk;
  return doc["verdict"].get<bool>() ? kExitOk : kExitDisagreement;
}

struct BatchLine {
  std::string spec;
  std::string status;  // pass | fail | refused | error
  std::string message;
  nlohmann::json doc;
};

int cmd_batch(const std::string& list_path, const std::string& weights,
              const std::string& format, bool strict, const CommonOpts& common) {
  std::ifstream in(list_path);
  if (!in) throw parse_error("cannot open batch file '" + list_path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (const size_t hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream is(line);
    std::string token;
    if (is >> token) lines.push_back(token);
  }

  ReportOptions opt;
  std::tie(opt.m_min, opt.m_max) = parse_weights(weights);

  const auto evaluate = [&](const std::string& text) {
    BatchLine result;
    result.spec = text;
    try {
      const GroupSpec spec = parse_group_spec(text);
      const Subgroup g = acquire_group(spec, common);
      result.doc = report_document(g, opt);
      if (g.minus_one)
        result.status = "refused";
      else
        result.status = result.doc["verdict"].get<bool>() ? "pass" : "fail";
    } catch (const std::exception& e) {
      result.status = "error";
      result.message = e.what();
    }
    return result;
  };

  // groups are independent; evaluate concurrently, merge in input order
  std::vector<std::future<BatchLine>> futures;
  futures.reserve(lines.size());
  for (const std::string& text : lines)
    futures.push_back(std::async(std::launch::async, evaluate, text));
  std::vector<BatchLine> results;
  results.reserve(lines.size());
  for (auto& f : futures) results.push_back(f.get());

  int64_t passed = 0, failed = 0, refused = 0, errors = 0;
  for (const BatchLine& r : results) {
    if (r.status == "pass") ++passed;
    else if (r.status == "fail") ++failed;
    else if (r.status == "refused") ++refused;
    else ++errors;
  }

  if (format == "json") {
    nlohmann::json doc;
    doc["schema"] = kSchemaTag;
    doc["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    doc["groups"] = nlohmann::json::array();
    for (const BatchLine& r : results) {
      nlohmann::json entry = {{"spec", r.spec}, {"status", r.status}};
      if (!r.message.empty()) entry["error"] = r.message;
      if (!r.doc.is_null()) entry["report"] = r.doc;
      doc["groups"].push_back(entry);
    }
    doc["summary"] = {{"passed", passed},
                      {"failed", failed},
                      {"refused", refused},
                      {"errors", errors}};
    std::cout << render_json(doc);
  } else if (format == "csv") {
    std::cout << "spec,status,verdict,mu,genus,eps3,eps_reg,eps_irr,chi,p_g\n";
    for (const BatchLine& r : results) {
      std::cout << r.spec << "," << r.status;
      if (r.status == "pass" || r.status == "fail") {
        const auto& ci = r.doc["curve"];
        const auto& si = r.doc["surface"];
        std::cout << "," << (r.status == "pass" ? "true" : "false") << ","
                  << ci["mu"] << "," << ci["genus"] << "," << ci["eps3"] << ","
                  << ci["eps_reg"] << "," << ci["eps_irr"] << "," << si["chi"]
                  << "," << si["p_g"];
      } else {
        std::cout << ",,,,,,,,";
      }
      std::cout << "\n";
    }
    std::cout << "# summary: " << passed << " passed, " << failed
              << " failed, " << refused << " refused, " << errors
              << " errors\n";
  } else {
    std::cout << "| spec | status | mu | g | eps3 | cusps (reg/irr) | chi | p_g |\n";
    std::cout << "|------|--------|----|---|------|-----------------|-----|-----|\n";
    for (const BatchLine& r : results) {
      std::cout << "| " << r.spec << " | " << r.status << " | ";
      if (r.status == "pass" || r.status == "fail") {
        const auto& ci = r.doc["curve"];
        const auto& si = r.doc["surface"];
        std::cout << ci["mu"] << " | " << ci["genus"] << " | " << ci["eps3"]
                  << " | " << ci["eps_reg"] << "/" << ci["eps_irr"] << " | "
                  << si["chi"] << " | " << si["p_g"] << " |\n";
      } else {
        std::cout << "| | | | | |\n";
      }
    }
    std::cout << "\n" << passed << " passed, " << failed << " failed, "
              << refused << " refused, " << errors << " errors\n";
  }

  if (errors > 0) return kExitInvalidInput;
  if (failed > 0) return kExitDisagreement;
  if (strict && refused > 0) return kExitInvalidInput;
  return kExitOk;
}

int cmd_export_perm(const std::string& spec_text, const std::string& out_path,
                    const CommonOpts& common) {
  const GroupSpec spec = parse_group_spec(spec_text);
  const Subgroup g = acquire_group(spec, common);
  emit(export_permutation(g), out_path);
  return kExitOk;
}

int cmd_crosscheck(const std::string& spec_text, const std::string& source,
                   bool offline, const CommonOpts& common) {
  const GroupSpec spec = parse_group_spec(spec_text);
  if (source == "oracle") {
    if (spec.kind == GroupSpec::Kind::Perm)
      throw parse_error("the oracle cross-check requires a congruence spec "
                        "(gamma:, gamma1: or image:)");
    const Subgroup g = acquire_group(spec, common);
    const auto diffs = oracle::crosscheck(g);
    if (diffs.empty()) {
      std::cout << spec.text << ": oracle agreement (mu, eps3, genus, cusp "
                   "multiset)\n";
      return kExitOk;
    }
    for (const std::string& d : diffs) std::cout << spec.text << ": " << d << "\n";
    return kExitDisagreement;
  }
  if (source == "lmfdb") {
    if (spec.kind != GroupSpec::Kind::Gamma1)
      throw parse_error("the lmfdb cross-check covers gamma1:N specs only");
    const Subgroup g = acquire_group(spec, common);
    if (g.minus_one)
      throw minus_one_error(g.label);
    const Weight3Dims published = lmfdb_weight3_gamma1(
        spec.level, resolve_cache_dir(common.cache_dir), offline);
    const CurveInvariants ci = curve_invariants(g);
    const SurfaceInvariants si =
        surface_invariants(ci, fiber_configuration(ci));
    const int64_t m3 = dim_modular_3m(ci, 1);
    bool ok = true;
    const auto row = [&](const char* what, int64_t ours, int64_t theirs) {
      const bool match = ours == theirs;
      ok = ok && match;
      std::cout << spec.text << ": " << what << " ours " << ours
                << " vs lmfdb " << theirs << (match ? " (match)" : " (MISMATCH)")
                << "\n";
    };
    row("dim M_3", m3, published.dim_modforms);
    row("dim S_3 (= p_g)", si.p_g, published.dim_cuspforms);
    row("dim Eis_3 (= eps_reg)", ci.eps_reg, published.dim_eis);
    return ok ? kExitOk : kExitDisagreement;
  }
  throw parse_error("unknown cross-check source '" + source +
                    "' (expected oracle|lmfdb)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arithmetic invariants of finite-index subgroups of SL2(Z) "
               "and their elliptic modular surfaces"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  CommonOpts common;
  std::string cache_dir_flag;
  app.add_option("--cache-dir", cache_dir_flag,
                 "cache directory (default: EMSURF_CACHE or ~/.cache/emsurf)");
  app.add_flag("--no-cache", common.no_cache, "disable the permutation cache");

  std::string spec_text, weights = "0..12", format = "json", out_path;
  bool strict = false, timestamp = false, offline = false;
  std::string source = "oracle";

  auto* report = app.add_subcommand("report", "invariants and dimension tables "
                                              "for one group");
  report->add_option("spec", spec_text, "group spec (gamma:N | gamma1:N | "
                                        "image:N:file | perm:file)")->required();
  report->add_option("--weights", weights, "grading range A..B (default 0..12)");
  report->add_option("--format", format, "json | csv | md");
  report->add_flag("--strict", strict, "exit 2 for groups containing -I");
  report->add_flag("--timestamp", timestamp, "include a generation timestamp");
  report->add_option("-o,--output", out_path, "write to a file instead of stdout");

  auto* batch = app.add_subcommand("batch", "evaluate a list of group specs");
  std::string list_path;
  batch->add_option("file", list_path, "file with one group spec per line")
      ->required();
  batch->add_option("--weights", weights, "grading range A..B (default 0..12)");
  batch->add_option("--format", format, "json | csv | md");
  batch->add_flag("--strict", strict, "exit 2 when any group contains -I");

  auto* export_perm = app.add_subcommand("export-perm", "write the permutation "
                                                        "document for a group");
  export_perm->add_option("spec", spec_text, "group spec")->required();
  export_perm->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* crosscheck = app.add_subcommand("crosscheck", "compare against the "
                                                      "brute-force oracle or "
                                                      "published tables");
  crosscheck->add_option("spec", spec_text, "group spec")->required();
  crosscheck->add_option("--source", source, "oracle | lmfdb")->required();
  crosscheck->add_flag("--offline", offline, "use cached lmfdb records only");

  // let --cache-dir / --no-cache appear after the subcommand as well
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  if (!cache_dir_flag.empty()) common.cache_dir = cache_dir_flag;

  try {
    if (report->parsed())
      return cmd_report(spec_text, weights, format, strict, timestamp,
                        out_path, common);
    if (batch->parsed())
      return cmd_batch(list_path, weights, format, strict, common);
    if (export_perm->parsed())
      return cmd_export_perm(spec_text, out_path, common);
    if (crosscheck->parsed())
      return cmd_crosscheck(spec_text, source, offline, common);
  } catch (const network_error& e) {
    std::cerr << "network error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

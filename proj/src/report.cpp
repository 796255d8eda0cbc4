#include "emsurf/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

#include "emsurf/version.hpp"

namespace emsurf {

namespace {

using nlohmann::json;

std::string utc_now() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json curve_json(const CurveInvariants& ci) {
  json cusps = json::array();
  for (const Cusp& c : ci.cusps)
    cusps.push_back({{"label", c.label},
                     {"psl_width", c.psl_width},
                     {"sl_width", c.sl_width},
                     {"regular", c.regular}});
  return {{"mu", ci.mu},        {"genus", ci.genus}, {"eps2", ci.eps2},
          {"eps3", ci.eps3},    {"eps_reg", ci.eps_reg},
          {"eps_irr", ci.eps_irr}, {"cusps", cusps}};
}

json fibers_json(const FiberConfiguration& fc) {
  json fibers = json::array();
  for (const Fiber& f : fc.fibers)
    fibers.push_back({{"base", f.base}, {"type", f.type.name()}});
  return fibers;
}

json surface_json(const SurfaceInvariants& si) {
  return {{"euler", si.euler},   {"chi", si.chi},
          {"q", si.q},           {"p_g", si.p_g},
          {"deg_L", si.deg_l},   {"kodaira_class", std::string(kodaira_class(si))}};
}

}  // namespace

json report_document(const Subgroup& g, const ReportOptions& opt) {
  json doc;
  doc["schema"] = kSchemaTag;
  doc["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  if (opt.with_timestamp) doc["generated_at"] = utc_now();
  doc["group"] = {{"spec", g.label},
                  {"label", g.label},
                  {"index_sl2", g.index_sl2()},
                  {"index_psl2", g.index_psl2()},
                  {"minus_one", g.minus_one}};
  if (g.minus_one) {
    doc["refusal"] =
        "group contains -I: there are no nonzero odd-weight forms and the "
        "elliptic-surface comparison is undefined; theorem tables omitted";
    doc["verdict"] = nullptr;
    return doc;
  }

  const DimensionReport report = verify_group(g, opt.m_max);
  doc["curve"] = curve_json(report.curve);
  doc["fibers"] = fibers_json(report.fibers);
  doc["surface"] = surface_json(report.surface);

  json weights = json::array();
  for (const WeightEntry& e : report.entries) {
    if (e.m < opt.m_min) continue;
    weights.push_back({{"m", e.m},
                       {"weight", 3 * e.m},
                       {"side_a", e.side_a},
                       {"side_b", e.side_b},
                       {"agree", e.agree}});
  }
  doc["weights"] = weights;

  json even = json::array();
  for (auto [m, dim] : report.even) {
    if (m < opt.m_min) continue;
    even.push_back({{"m", m}, {"weight", 2 * m}, {"dim", dim}});
  }
  doc["even_weights"] = even;

  json canonical = json::array();
  for (auto [m, dim] : report.canonical) {
    if (m < opt.m_min) continue;
    canonical.push_back({{"m", m}, {"dim", dim}});
  }
  doc["canonical_ring"] = canonical;

  doc["checks"] = {{"widths_sum_to_mu", report.checks.widths_sum_to_mu},
                   {"euler_divisible_by_12", report.checks.euler_divisible_by_12},
                   {"eisenstein_identity", report.checks.eisenstein_identity},
                   {"sixfold", report.checks.sixfold},
                   {"canonical_m1_is_pg", report.checks.canonical_m1_is_pg}};
  doc["verdict"] = report.verdict;
  return doc;
}

std::string render_json(const json& doc) { return doc.dump(2) + "\n"; }

std::string render_csv(const json& doc) {
  std::ostringstream os;
  os << "group,table,m,weight,side_a,side_b,agree\n";
  const std::string label = doc["group"]["spec"].get<std::string>();
  if (doc.contains("refusal")) {
    os << label << ",refusal,,,,,\n";
    return os.str();
  }
  for (const auto& e : doc["weights"])
    os << label << ",weight3m," << e["m"] << "," << e["weight"] << ","
       << e["side_a"] << "," << e["side_b"] << ","
       << (e["agree"].get<bool>() ? "true" : "false") << "\n";
  for (const auto& e : doc["even_weights"])
    os << label << ",even," << e["m"] << "," << e["weight"] << ","
       << e["dim"] << ",,\n";
  for (const auto& e : doc["canonical_ring"])
    os << label << ",canonical," << e["m"] << ",," << e["dim"] << ",,\n";
  return os.str();
}

std::string render_markdown(const json& doc) {
  std::ostringstream os;
  const auto& g = doc["group"];
  os << "# " << g["spec"].get<std::string>() << "\n\n";
  os << "index [SL2(Z):G] = " << g["index_sl2"] << ", PSL2-index mu = "
     << g["index_psl2"] << ", contains -I: "
     << (g["minus_one"].get<bool>() ? "yes" : "no") << "\n\n";
  if (doc.contains("refusal")) {
    os << "**" << doc["refusal"].get<std::string>() << "**\n";
    return os.str();
  }
  const auto& ci = doc["curve"];
  os << "## Curve\n\n";
  os << "genus " << ci["genus"] << ", eps3 = " << ci["eps3"]
     << ", regular cusps = " << ci["eps_reg"]
     << ", irregular cusps = " << ci["eps_irr"] << "\n\n";
  os << "| cusp | psl width | sl width | regular |\n";
  os << "|------|-----------|----------|---------|\n";
  for (const auto& c : ci["cusps"])
    os << "| " << c["label"].get<std::string>() << " | " << c["psl_width"]
       << " | " << c["sl_width"] << " | "
       << (c["regular"].get<bool>() ? "yes" : "no") << " |\n";
  os << "\n## Surface\n\n";
  const auto& si = doc["surface"];
  os << "fibers: ";
  for (size_t i = 0; i < doc["fibers"].size(); ++i) {
    if (i) os << ", ";
    os << doc["fibers"][i]["type"].get<std::string>();
  }
  os << "\n\ne = " << si["euler"] << ", chi = " << si["chi"] << ", q = "
     << si["q"] << ", p_g = " << si["p_g"] << " ("
     << si["kodaira_class"].get<std::string>() << ")\n";
  os << "\n## Weight 3m\n\n";
  os << "| m | weight | forms | sections | agree |\n";
  os << "|---|--------|-------|----------|-------|\n";
  for (const auto& e : doc["weights"])
    os << "| " << e["m"] << " | " << e["weight"] << " | " << e["side_a"]
       << " | " << e["side_b"] << " | "
       << (e["agree"].get<bool>() ? "yes" : "NO") << " |\n";
  os << "\n## Weight 2m\n\n";
  os << "| m | weight | dim |\n|---|--------|-----|\n";
  for (const auto& e : doc["even_weights"])
    os << "| " << e["m"] << " | " << e["weight"] << " | " << e["dim"] << " |\n";
  os << "\n## Canonical ring\n\n";
  os << "| m | dim |\n|---|-----|\n";
  for (const auto& e : doc["canonical_ring"])
    os << "| " << e["m"] << " | " << e["dim"] << " |\n";
  os << "\nverdict: " << (doc["verdict"].get<bool>() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string render(const json& doc, const std::string& format) {
  if (format == "json") return render_json(doc);
  if (format == "csv") return render_csv(doc);
  if (format == "md") return render_markdown(doc);
  throw parse_error("unknown format '" + format + "' (expected json|csv|md)");
}

}  // namespace emsurf

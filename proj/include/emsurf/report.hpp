#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "emsurf/dimensions.hpp"
#include "emsurf/subgroup.hpp"

namespace emsurf {

struct ReportOptions {
  int64_t m_min = 0;   // emitted grading range; checks always run from 0
  int64_t m_max = 12;
  bool with_timestamp = false;  // excluded by default so output is byte-stable
};

// Full report document (schema "emsurf/1"). For groups containing -I the
// theorem tables are replaced by a refusal notice; base group data is kept.
nlohmann::json report_document(const Subgroup& g, const ReportOptions& opt);

std::string render_json(const nlohmann::json& doc);
std::string render_csv(const nlohmann::json& doc);
std::string render_markdown(const nlohmann::json& doc);

std::string render(const nlohmann::json& doc, const std::string& format);

}  // namespace emsurf

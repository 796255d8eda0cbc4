#include "emsurf/lmfdb.hpp"

#include <json.hpp>

#include "emsurf/cache.hpp"
#include "emsurf/errors.hpp"

#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#endif

namespace emsurf {

namespace {

using nlohmann::json;

constexpr const char* kSubdir = "lmfdb";

Weight3Dims parse_normalized(int64_t level, const std::string& payload) {
  json doc;
  try {
    doc = json::parse(payload);
  } catch (const json::exception& e) {
    throw parse_error(std::string("lmfdb cache entry: ") + e.what());
  }
  Weight3Dims dims;
  dims.level = doc.value("level", level);
  try {
    dims.dim_modforms = doc.at("dim_modforms").get<int64_t>();
    dims.dim_cuspforms = doc.at("dim_cuspforms").get<int64_t>();
    dims.dim_eis = doc.value("dim_eis",
                             dims.dim_modforms - dims.dim_cuspforms);
  } catch (const json::exception& e) {
    throw parse_error(std::string("lmfdb cache entry: ") + e.what());
  }
  return dims;
}

std::string normalize(const Weight3Dims& dims) {
  json doc;
  doc["level"] = dims.level;
  doc["weight"] = 3;
  doc["dim_modforms"] = dims.dim_modforms;
  doc["dim_cuspforms"] = dims.dim_cuspforms;
  doc["dim_eis"] = dims.dim_eis;
  return doc.dump(2) + "\n";
}

// Extracts the dimension triple from a raw LMFDB mf_gamma1 record. Field
// names have shifted across LMFDB releases, so a few aliases are accepted.
int64_t pick_field(const json& record,
                   std::initializer_list<const char*> names) {
  for (const char* name : names)
    if (record.contains(name) && record[name].is_number_integer())
      return record[name].get<int64_t>();
  throw parse_error("lmfdb response lacks an expected dimension field");
}

Weight3Dims fetch_remote(int64_t level) {
#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
  httplib::SSLClient client("www.lmfdb.org");
  client.set_connection_timeout(10);
  client.set_read_timeout(20);
  const std::string target = "/api/mf_gamma1/?level=i" + std::to_string(level) +
                             "&weight=i3&_format=json";
  auto res = client.Get(target.c_str());
  if (!res || res->status != 200)
    throw network_error("lmfdb request failed for level " +
                        std::to_string(level) +
                        (res ? " (HTTP " + std::to_string(res->status) + ")"
                             : " (no response)"));
  json doc;
  try {
    doc = json::parse(res->body);
  } catch (const json::exception& e) {
    throw network_error(std::string("lmfdb response unparsable: ") + e.what());
  }
  if (!doc.contains("data") || !doc["data"].is_array() || doc["data"].empty())
    throw network_error("lmfdb returned no record for level " +
                        std::to_string(level) + " weight 3");
  const json& record = doc["data"][0];
  Weight3Dims dims;
  dims.level = level;
  dims.dim_modforms = pick_field(record, {"mf_dim", "dim_modforms"});
  dims.dim_cuspforms = pick_field(record, {"cusp_dim", "dim", "dim_cuspforms"});
  dims.dim_eis = record.contains("eis_dim") && record["eis_dim"].is_number_integer()
                     ? record["eis_dim"].get<int64_t>()
                     : dims.dim_modforms - dims.dim_cuspforms;
  return dims;
#else
  (void)level;
  throw network_error("this build has no TLS support; use cached fixtures "
                      "(--offline with a populated cache)");
#endif
}

}  // namespace

std::string lmfdb_cache_key(int64_t level) {
  return cache_key("mf_gamma1_weight3_level_" + std::to_string(level));
}

Weight3Dims lmfdb_weight3_gamma1(int64_t level,
                                 const std::filesystem::path& cache_dir,
                                 bool offline) {
  const std::string key = lmfdb_cache_key(level);
  if (auto cached = cache_read(cache_dir, kSubdir, key))
    return parse_normalized(level, *cached);
  if (offline)
    throw cache_miss_error("no cached lmfdb record for Gamma1(" +
                           std::to_string(level) +
                           ") weight 3 and offline mode is on");
  const Weight3Dims dims = fetch_remote(level);
  cache_write(cache_dir, kSubdir, key, normalize(dims));
  return dims;
}

}  // namespace emsurf

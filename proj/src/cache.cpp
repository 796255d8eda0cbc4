#include "emsurf/cache.hpp"

#include <unistd.h>

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace emsurf {

namespace fs = std::filesystem;

fs::path resolve_cache_dir(const std::optional<std::string>& override_dir) {
  if (override_dir && !override_dir->empty()) return fs::path(*override_dir);
  if (const char* env = std::getenv("EMSURF_CACHE"); env && *env)
    return fs::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return fs::path(xdg) / "emsurf";
  if (const char* home = std::getenv("HOME"); home && *home)
    return fs::path(home) / ".cache" / "emsurf";
  return fs::path(".emsurf-cache");
}

std::string cache_key(const std::string& text) {
  std::string key;
  key.reserve(text.size());
  for (char c : text)
    key += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.')
               ? c
               : '_';
  return key;
}

std::optional<std::string> cache_read(const fs::path& dir,
                                      const std::string& subdir,
                                      const std::string& key) {
  const fs::path file = dir / subdir / (key + ".json");
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void cache_write(const fs::path& dir, const std::string& subdir,
                 const std::string& key, const std::string& payload) {
  std::error_code ec;
  fs::create_directories(dir / subdir, ec);
  if (ec) return;  // cache is best-effort
  // write-then-rename keeps concurrent writers from interleaving
  static std::atomic<uint64_t> counter{0};
  const fs::path final_path = dir / subdir / (key + ".json");
  const fs::path tmp_path =
      dir / subdir / (key + "." + std::to_string(::getpid()) + "." +
                      std::to_string(counter.fetch_add(1)) + ".tmp");
  {
    std::ofstream out(tmp_path);
    if (!out) return;
    out << payload;
  }
  fs::rename(tmp_path, final_path, ec);
  if (ec) fs::remove(tmp_path, ec);
}

}  // namespace emsurf

#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace emsurf {

// Cache directory resolution order: explicit override, EMSURF_CACHE,
// XDG_CACHE_HOME/emsurf, HOME/.cache/emsurf, ./.emsurf-cache.
std::filesystem::path resolve_cache_dir(
    const std::optional<std::string>& override_dir = std::nullopt);

// Filename-safe key from a canonical spec or query string.
std::string cache_key(const std::string& text);

std::optional<std::string> cache_read(const std::filesystem::path& dir,
                                      const std::string& subdir,
                                      const std::string& key);
void cache_write(const std::filesystem::path& dir, const std::string& subdir,
                 const std::string& key, const std::string& payload);

}  // namespace emsurf

#pragma once

namespace emsurf {
inline constexpr const char* kToolName = "emsurf";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchemaTag = "emsurf/1";
}  // namespace emsurf

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace emsurf {

// Published dimensions of the weight-3 spaces for Gamma1(N), as served by
// the LMFDB modular-forms database. Responses are normalized and cached on
// disk; offline mode reads the cache only.
struct Weight3Dims {
  int64_t level = 0;
  int64_t dim_modforms = 0;   // dim M_3(Gamma1(N))
  int64_t dim_cuspforms = 0;  // dim S_3(Gamma1(N))
  int64_t dim_eis = 0;        // Eisenstein part
};

Weight3Dims lmfdb_weight3_gamma1(int64_t level,
                                 const std::filesystem::path& cache_dir,
                                 bool offline);

std::string lmfdb_cache_key(int64_t level);

}  // namespace emsurf

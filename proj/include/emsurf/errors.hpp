#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace emsurf {

// Thrown by operations that presuppose -I not in the group.
struct minus_one_error : std::domain_error {
  explicit minus_one_error(const std::string& label)
      : std::domain_error("group " + label +
                          " contains -I; odd-weight invariants and the "
                          "log canonical ring comparison are undefined for it") {}
};

// Riemann-Roch on a curve does not determine h^0 from the degree alone
// inside [0, 2g-2]; callers must stay out of that range.
struct ambiguous_range_error : std::logic_error {
  ambiguous_range_error(long long genus, long long deg)
      : std::logic_error("h^0 not determined by degree " + std::to_string(deg) +
                         " on a curve of genus " + std::to_string(genus)) {}
};

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A single failed invariant of a permutation representation.
struct Violation {
  std::string code;    // stable identifier, e.g. "relation:S^4"
  std::string detail;  // human-readable description
};

struct validation_error : std::runtime_error {
  std::vector<Violation> violations;
  explicit validation_error(std::vector<Violation> v)
      : std::runtime_error(join(v)), violations(std::move(v)) {}

 private:
  static std::string join(const std::vector<Violation>& v) {
    std::string msg = "permutation representation invalid:";
    for (const auto& x : v) msg += "\n  [" + x.code + "] " + x.detail;
    return msg;
  }
};

struct cache_miss_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct network_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace emsurf

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "emsurf/curve.hpp"
#include "emsurf/subgroup.hpp"

namespace emsurf {
namespace oracle {

// Brute-force counterpart of the permutation pipeline: exhaustive
// enumeration inside SL2(Z/N) and orbit partitions on primitive vectors,
// no breadth-first search and no generator words. Shares only the 2x2
// arithmetic with the main path.

struct FiniteGroupTable {
  int64_t level = 1;
  std::vector<MatModN> elements;  // all of SL2(Z/N), lex order
  std::vector<MatModN> subgroup;  // H, closed under product and inverse
};

// Enumerates SL2(Z/N) directly; guard_bound caps N (memory grows like N^4).
FiniteGroupTable make_table(int64_t N, const std::vector<MatModN>& generators,
                            int64_t guard_bound = 30);

struct CosetSummary {
  int64_t coset_count = 0;
  int64_t eps3 = 0;       // meaningful only when minus_one is false
  bool minus_one = false; // -I in H, tested directly
};

CosetSummary brute_coset_space(const FiniteGroupTable& table);

// Cusp multiset {(psl_width, regular)}, sorted. Orbits of H*{+-1} on
// primitive vectors of (Z/N)^2; widths by scanning gamma T^h gamma^-1
// for h = 1..N against H and -H. Requires -I not in H.
std::vector<std::pair<int64_t, bool>> brute_cusps(const FiniteGroupTable& table);

struct OracleInvariants {
  int64_t mu = 0;
  int64_t eps3 = 0;
  int64_t genus = 0;
  std::vector<std::pair<int64_t, bool>> widths;
};

OracleInvariants brute_invariants(const FiniteGroupTable& table);

// Field-by-field comparison of the permutation pipeline's curve invariants
// against the brute-force ones; empty list means agreement. The subgroup
// must carry a congruence origin.
std::vector<std::string> crosscheck(const Subgroup& g, int64_t guard_bound = 30);

}  // namespace oracle
}  // namespace emsurf

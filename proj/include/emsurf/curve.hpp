#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "emsurf/subgroup.hpp"

namespace emsurf {

// A cusp of the modular curve X_Gamma. psl_width is the minimal h with
// +-(gamma T^h gamma^-1) in the group; sl_width is the minimal N with
// gamma T^N gamma^-1 itself in the group (= h regular, 2h irregular).
struct Cusp {
  int32_t id = 0;
  MatZ witness;        // cusp = witness(infinity)
  std::string label;   // reduced a/c from the witness first column, "inf" for c=0
  int64_t psl_width = 1;
  int64_t sl_width = 1;
  bool regular = true;
};

struct CurveInvariants {
  int64_t mu = 0;     // PSL2(Z)-index
  int64_t genus = 0;
  int64_t eps2 = 0;   // always 0 without -I
  int64_t eps3 = 0;   // order-3 elliptic points
  int64_t eps_reg = 0;
  int64_t eps_irr = 0;
  std::vector<Cusp> cusps;

  int64_t eps_inf() const { return eps_reg + eps_irr; }
  // Multiset {(psl_width, regular)}, sorted; numbering-independent view.
  std::vector<std::pair<int64_t, bool>> width_multiset() const;
};

// T-orbit scan of the coset space. A regular cusp consumes its orbit and
// the disjoint equal-size orbit of the -I translate; an irregular cusp
// consumes a single even orbit containing the translate halfway around.
// Requires -I not in the group.
std::vector<Cusp> cusps(const Subgroup& g);

// (eps2, eps3). eps3 counts fixed cosets of rho((ST)^2), two per point;
// eps2 is always 0 and the absence of S-fixed cosets is asserted.
std::pair<int64_t, int64_t> elliptic_count(const Subgroup& g);

// g = 1 + mu/12 - eps3/3 - eps_inf/2, for groups with eps2 = 0.
// Throws if the result is not a non-negative integer.
int64_t genus_from(int64_t mu, int64_t eps3, int64_t eps_inf);

CurveInvariants curve_invariants(const Subgroup& g);

}  // namespace emsurf

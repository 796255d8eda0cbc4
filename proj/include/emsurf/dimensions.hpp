#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "emsurf/curve.hpp"
#include "emsurf/surface.hpp"

namespace emsurf {

// h^0 of a line bundle of the given degree on a curve of genus g:
// 0 below degree 0, deg+1-g above degree 2g-2, refused in between
// (the degree alone does not determine h^0 there).
int64_t rr_h0(int64_t genus, int64_t deg);

// dim M_{3m}: (3m-1)(g-1) + m*eps3 + (3m/2)*eps_reg + [3m/2]*eps_irr.
// m = 0 is the constants (1). Throws on a non-integral or negative value.
int64_t dim_modular_3m(const CurveInvariants& ci, int64_t m);

// h^0(K_S^m(m D_reg + [m/2] D_irr)) through the pushforward to the base:
// rr_h0(g, m(2g-2) + m*chi + m*eps_reg + [m/2]*eps_irr).
int64_t dim_log_canonical_3m(const CurveInvariants& ci,
                             const SurfaceInvariants& si, int64_t m);

// dim M_{2m} = rr_h0(g, m(2g-2) + m*eps_inf + [2m/3]*eps3), m >= 1.
int64_t dim_modular_2m(const CurveInvariants& ci, int64_t m);

// h^0(K_S^m) = rr_h0(g, m(2g-2) + m*chi); equals p_g at m = 1.
int64_t dim_canonical_ring(const CurveInvariants& ci,
                           const SurfaceInvariants& si, int64_t m);

struct WeightEntry {
  int64_t m = 0;
  int64_t side_a = 0;  // modular-form dimension formula
  int64_t side_b = 0;  // geometric Riemann-Roch count
  bool agree = false;
};

struct ConsistencyChecks {
  bool widths_sum_to_mu = false;
  bool euler_divisible_by_12 = false;
  bool eisenstein_identity = false;  // dim M_3 - p_g = eps_reg
  bool sixfold = false;              // 3m- and 2m-pipelines agree on weights 6k
  bool canonical_m1_is_pg = false;

  bool all() const {
    return widths_sum_to_mu && euler_divisible_by_12 && eisenstein_identity &&
           sixfold && canonical_m1_is_pg;
  }
};

struct DimensionReport {
  std::string label;
  CurveInvariants curve;
  FiberConfiguration fibers;
  SurfaceInvariants surface;
  std::vector<WeightEntry> entries;                    // m = 0..m_max
  std::vector<std::pair<int64_t, int64_t>> even;       // (m, dim M_2m), m = 1..m_max
  std::vector<std::pair<int64_t, int64_t>> canonical;  // (m, h^0(K_S^m)), m = 0..m_max
  ConsistencyChecks checks;
  bool verdict = false;
};

// Runs both pipelines for m = 0..m_max plus the cross-identities above.
// Hard error for groups containing -I.
DimensionReport verify_group(const Subgroup& g, int64_t m_max);

}  // namespace emsurf

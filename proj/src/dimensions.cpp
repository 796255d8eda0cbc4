#include "emsurf/dimensions.hpp"

#include <stdexcept>

namespace emsurf {

int64_t rr_h0(int64_t genus, int64_t deg) {
  if (genus < 0) throw std::domain_error("genus must be >= 0");
  if (deg < 0) return 0;
  if (deg > 2 * genus - 2) return deg + 1 - genus;
  throw ambiguous_range_error(genus, deg);
}

int64_t dim_modular_3m(const CurveInvariants& ci, int64_t m) {
  if (m < 0) throw std::domain_error("grading index must be >= 0");
  if (m == 0) return 1;
  const int64_t reg_term = 3 * m * ci.eps_reg;
  if (reg_term % 2 != 0)
    throw std::domain_error("(3m/2)*eps_reg is not integral for m = " +
                            std::to_string(m) +
                            ", eps_reg = " + std::to_string(ci.eps_reg));
  const int64_t value = (3 * m - 1) * (ci.genus - 1) + m * ci.eps3 +
                        reg_term / 2 + (3 * m / 2) * ci.eps_irr;
  if (value < 0)
    throw std::domain_error("negative dimension from inconsistent invariants");
  return value;
}

int64_t dim_log_canonical_3m(const CurveInvariants& ci,
                             const SurfaceInvariants& si, int64_t m) {
  if (m < 0) throw std::domain_error("grading index must be >= 0");
  if (m == 0) return 1;
  const int64_t deg = m * (2 * ci.genus - 2) + m * si.chi + m * ci.eps_reg +
                      (m / 2) * ci.eps_irr;
  // deg - (2g-2) = (m-1)(2g-2) + m*chi + m*eps_reg + [m/2]*eps_irr > 0,
  // so the Riemann-Roch range is never ambiguous here
  return rr_h0(ci.genus, deg);
}

int64_t dim_modular_2m(const CurveInvariants& ci, int64_t m) {
  if (m < 1) throw std::domain_error("even-weight pipeline requires m >= 1");
  const int64_t deg =
      m * (2 * ci.genus - 2) + m * ci.eps_inf() + (2 * m / 3) * ci.eps3;
  return rr_h0(ci.genus, deg);
}

int64_t dim_canonical_ring(const CurveInvariants& ci,
                           const SurfaceInvariants& si, int64_t m) {
  if (m < 0) throw std::domain_error("grading index must be >= 0");
  if (m == 0) return 1;
  return rr_h0(ci.genus, m * (2 * ci.genus - 2) + m * si.chi);
}

DimensionReport verify_group(const Subgroup& g, int64_t m_max) {
  if (g.minus_one) throw minus_one_error(g.label);
  if (m_max < 0) throw std::domain_error("m_max must be >= 0");

  DimensionReport report;
  report.label = g.label;
  report.curve = curve_invariants(g);
  report.fibers = fiber_configuration(report.curve);
  report.surface = surface_invariants(report.curve, report.fibers);

  bool entries_agree = true;
  for (int64_t m = 0; m <= m_max; ++m) {
    WeightEntry entry;
    entry.m = m;
    entry.side_a = dim_modular_3m(report.curve, m);
    entry.side_b = dim_log_canonical_3m(report.curve, report.surface, m);
    entry.agree = entry.side_a == entry.side_b;
    entries_agree = entries_agree && entry.agree;
    report.entries.push_back(entry);
    report.canonical.emplace_back(
        m, dim_canonical_ring(report.curve, report.surface, m));
  }
  for (int64_t m = 1; m <= m_max; ++m)
    report.even.emplace_back(m, dim_modular_2m(report.curve, m));

  int64_t width_sum = 0;
  for (const Cusp& c : report.curve.cusps) width_sum += c.psl_width;
  report.checks.widths_sum_to_mu = width_sum == report.curve.mu;
  report.checks.euler_divisible_by_12 = report.surface.euler % 12 == 0;
  report.checks.eisenstein_identity =
      dim_modular_3m(report.curve, 1) - report.surface.p_g ==
      report.curve.eps_reg;

  // weights w = 6k <= 3*m_max computed both as M_{3*(w/3)} and M_{2*(w/2)}
  report.checks.sixfold = true;
  for (int64_t w = 6; w <= 3 * m_max; w += 6)
    report.checks.sixfold =
        report.checks.sixfold &&
        dim_modular_3m(report.curve, w / 3) == dim_modular_2m(report.curve, w / 2);

  report.checks.canonical_m1_is_pg =
      m_max < 1 || dim_canonical_ring(report.curve, report.surface, 1) ==
                       report.surface.p_g;

  report.verdict = entries_agree && report.checks.all();
  return report;
}

}  // namespace emsurf

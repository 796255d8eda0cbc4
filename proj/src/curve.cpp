#include "emsurf/curve.hpp"

#include <algorithm>
#include <stdexcept>

namespace emsurf {

std::vector<std::pair<int64_t, bool>> CurveInvariants::width_multiset() const {
  std::vector<std::pair<int64_t, bool>> out;
  out.reserve(cusps.size());
  for (const Cusp& c : cusps) out.emplace_back(c.psl_width, c.regular);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string cusp_label(const MatZ& witness) {
  int64_t a = witness.a, c = witness.c;  // first column is primitive
  if (c == 0) return "inf";
  if (c < 0) {
    a = -a;
    c = -c;
  }
  if (c == 1) return std::to_string(a);
  return std::to_string(a) + "/" + std::to_string(c);
}

std::vector<int32_t> t_orbit(const Perm& sigma_t, int32_t start) {
  std::vector<int32_t> orbit{start};
  for (int32_t j = sigma_t[start]; j != start; j = sigma_t[j]) orbit.push_back(j);
  return orbit;
}

}  // namespace

std::vector<Cusp> cusps(const Subgroup& g) {
  if (g.minus_one) throw minus_one_error(g.label);
  const PermutationRep& rep = g.rep;
  const Perm s2 = perm_compose(rep.sigma_s, rep.sigma_s);  // rho(-I)

  std::vector<Cusp> out;
  std::vector<bool> consumed(rep.n, false);
  int64_t consumed_total = 0;
  for (int32_t i = 0; i < rep.n; ++i) {
    if (consumed[i]) continue;
    const std::vector<int32_t> orbit = t_orbit(rep.sigma_t, i);
    const int64_t size = static_cast<int64_t>(orbit.size());
    const int32_t j = s2[i];
    const auto pos = std::find(orbit.begin(), orbit.end(), j);

    Cusp cusp;
    cusp.id = static_cast<int32_t>(out.size());
    cusp.witness = rep.witnesses[i];
    cusp.label = cusp_label(cusp.witness);
    if (pos != orbit.end()) {
      // irregular: -I translate lies in the same T-orbit, halfway around
      if (size % 2 != 0 || pos - orbit.begin() != size / 2)
        throw std::logic_error("broken representation: -I translate misplaced "
                               "in an irregular T-orbit");
      cusp.regular = false;
      cusp.sl_width = size;
      cusp.psl_width = size / 2;
      for (int32_t k : orbit) consumed[k] = true;
      consumed_total += size;
    } else {
      const std::vector<int32_t> mirror = t_orbit(rep.sigma_t, j);
      if (mirror.size() != orbit.size())
        throw std::logic_error("broken representation: paired T-orbits of "
                               "unequal size at a regular cusp");
      cusp.regular = true;
      cusp.sl_width = size;
      cusp.psl_width = size;
      for (int32_t k : orbit) consumed[k] = true;
      for (int32_t k : mirror) {
        if (consumed[k])
          throw std::logic_error("broken representation: mirror T-orbit "
                                 "already consumed");
        consumed[k] = true;
      }
      consumed_total += 2 * size;
    }
    out.push_back(std::move(cusp));
  }
  if (consumed_total != rep.n)
    throw std::logic_error("T-orbits do not partition the coset space");
  return out;
}

std::pair<int64_t, int64_t> elliptic_count(const Subgroup& g) {
  if (g.minus_one) throw minus_one_error(g.label);
  const PermutationRep& rep = g.rep;
  for (int32_t i = 0; i < rep.n; ++i)
    if (rep.sigma_s[i] == i)
      throw std::logic_error("broken representation: rho(S) fixes a coset but "
                             "-I is not in the group");
  const Perm u = perm_compose(rep.sigma_s, rep.sigma_t);  // rho(ST)
  const Perm u2 = perm_compose(u, u);
  int64_t fixed = 0;
  for (int32_t i = 0; i < rep.n; ++i)
    if (u2[i] == i) ++fixed;
  if (fixed % 2 != 0)
    throw std::logic_error("broken representation: odd fixed-point count for "
                           "rho((ST)^2)");
  return {0, fixed / 2};
}

int64_t genus_from(int64_t mu, int64_t eps3, int64_t eps_inf) {
  const int64_t twelve_g = 12 + mu - 4 * eps3 - 6 * eps_inf;
  if (twelve_g % 12 != 0 || twelve_g < 0)
    throw std::domain_error("inconsistent invariants: genus formula gives " +
                            std::to_string(twelve_g) + "/12");
  return twelve_g / 12;
}

CurveInvariants curve_invariants(const Subgroup& g) {
  if (g.minus_one) throw minus_one_error(g.label);
  CurveInvariants ci;
  ci.mu = g.index_psl2();
  ci.cusps = cusps(g);
  for (const Cusp& c : ci.cusps) (c.regular ? ci.eps_reg : ci.eps_irr) += 1;
  auto [e2, e3] = elliptic_count(g);
  ci.eps2 = e2;
  ci.eps3 = e3;

  int64_t width_sum = 0;
  for (const Cusp& c : ci.cusps) width_sum += c.psl_width;
  if (width_sum != ci.mu)
    throw std::logic_error("cusp widths sum to " + std::to_string(width_sum) +
                           ", expected mu = " + std::to_string(ci.mu));
  ci.genus = genus_from(ci.mu, ci.eps3, ci.eps_inf());
  return ci;
}

}  // namespace emsurf

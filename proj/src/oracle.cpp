#include "emsurf/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace emsurf {
namespace oracle {

namespace {

using Key = std::array<int64_t, 4>;

std::vector<MatModN> close_elements(const std::vector<MatModN>& gens, int64_t N) {
  const MatModN id = reduce_mod(mat_identity(), N);
  std::set<Key> seen{id.entries()};
  std::vector<MatModN> elements{id};
  for (size_t head = 0; head < elements.size(); ++head) {
    for (const MatModN& g : gens) {
      MatModN y = mod_multiply(elements[head], g);
      if (seen.insert(y.entries()).second) elements.push_back(y);
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

int64_t gcd3(int64_t a, int64_t b, int64_t c) {
  return std::gcd(std::gcd(a, b), c);
}

// Integer lift of a primitive column (a,c) mod N completed to SL2(Z).
MatZ lift_column(int64_t a, int64_t c, int64_t N) {
  int64_t a0 = a % N, c0 = c % N;
  if (N == 1) { a0 = 1; c0 = 0; }
  if (a0 == 0 && c0 == 0) throw std::domain_error("vector is not primitive");
  if (a0 == 0) a0 = N;  // gcd(N, c0) = 1 since gcd(a,c,N) = 1
  while (std::gcd(a0, c0) != 1) c0 += N;
  // find x, y with a0*y - x*c0 = 1 by extended gcd
  int64_t r0 = a0, r1 = c0, u0 = 1, u1 = 0, v0 = 0, v1 = 1;
  while (r1 != 0) {
    const int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(u0, u1) = std::pair{u1, u0 - q * u1};
    std::tie(v0, v1) = std::pair{v1, v0 - q * v1};
  }
  // a0*u0 + c0*v0 = 1
  MatZ gamma{a0, -v0, c0, u0};
  if (gamma.det() != 1) throw std::logic_error("column lift failed");
  return gamma;
}

}  // namespace

FiniteGroupTable make_table(int64_t N, const std::vector<MatModN>& generators,
                            int64_t guard_bound) {
  if (N < 1) throw std::domain_error("level must be >= 1");
  if (N > guard_bound)
    throw std::domain_error("level " + std::to_string(N) +
                            " exceeds the oracle memory guard (" +
                            std::to_string(guard_bound) + ")");
  for (const MatModN& g : generators)
    if (g.modulus != N || g.det_mod() != 1 % N)
      throw std::domain_error("invalid subgroup generator " + to_string(g));

  FiniteGroupTable table;
  table.level = N;
  for (int64_t a = 0; a < N; ++a)
    for (int64_t b = 0; b < N; ++b)
      for (int64_t c = 0; c < N; ++c)
        for (int64_t d = 0; d < N; ++d) {
          const MatModN m{a, b, c, d, N};
          if (m.det_mod() == 1 % N) table.elements.push_back(m);
        }
  table.subgroup = close_elements(generators, N);
  return table;
}

CosetSummary brute_coset_space(const FiniteGroupTable& table) {
  const int64_t N = table.level;
  const auto& H = table.subgroup;

  // partition G into right cosets H*x by marking whole orbits
  std::set<Key> hset;
  for (const MatModN& h : H) hset.insert(h.entries());
  std::map<Key, int32_t> coset_of;
  std::vector<MatModN> reps;
  for (const MatModN& x : table.elements) {
    if (coset_of.contains(x.entries())) continue;
    const int32_t id = static_cast<int32_t>(reps.size());
    reps.push_back(x);
    for (const MatModN& h : H) coset_of[mod_multiply(h, x).entries()] = id;
  }

  CosetSummary out;
  out.coset_count = static_cast<int64_t>(reps.size());
  const MatModN minus_id = reduce_mod(mat_identity().negate(), N);
  out.minus_one = hset.contains(minus_id.entries());

  // -1 dichotomy: right multiplication by -I fixes every coset or none,
  // matching the direct membership test
  {
    int64_t fixed = 0;
    for (const MatModN& r : reps)
      if (coset_of.at(mod_multiply(r, minus_id).entries()) ==
          coset_of.at(r.entries()))
        ++fixed;
    if (fixed != (out.minus_one ? out.coset_count : 0))
      throw std::logic_error("-1 dichotomy violated in the oracle coset space");
  }

  if (!out.minus_one) {
    const MatModN u2 = reduce_mod((gen_s() * gen_t()) * (gen_s() * gen_t()), N);
    int64_t fixed = 0;
    for (const MatModN& r : reps)
      if (coset_of.at(mod_multiply(r, u2).entries()) ==
          coset_of.at(r.entries()))
        ++fixed;
    if (fixed % 2 != 0)
      throw std::logic_error("odd (ST)^2 fixed-coset count in the oracle");
    out.eps3 = fixed / 2;
  }
  return out;
}

std::vector<std::pair<int64_t, bool>> brute_cusps(const FiniteGroupTable& table) {
  const int64_t N = table.level;
  const auto& H = table.subgroup;
  const MatModN minus_id = reduce_mod(mat_identity().negate(), N);
  std::set<Key> hset;
  for (const MatModN& h : H) hset.insert(h.entries());
  if (hset.contains(minus_id.entries()))
    throw minus_one_error("oracle level " + std::to_string(N));

  // orbits of H*{+-1} on primitive column vectors of (Z/N)^2
  const auto vkey = [N](int64_t a, int64_t c) { return a * N + c; };
  std::vector<bool> seen(N * N, false);
  std::vector<std::pair<int64_t, int64_t>> orbit_reps;
  for (int64_t a = 0; a < N; ++a)
    for (int64_t c = 0; c < N; ++c) {
      if (gcd3(a, c, N) != 1 || seen[vkey(a, c)]) continue;
      orbit_reps.emplace_back(a, c);
      std::vector<std::pair<int64_t, int64_t>> stack{{a, c}};
      while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        if (seen[vkey(x, y)]) continue;
        seen[vkey(x, y)] = true;
        stack.emplace_back((N - x) % N, (N - y) % N);
        for (const MatModN& h : H)
          stack.emplace_back((h.a * x + h.b * y) % N, (h.c * x + h.d * y) % N);
      }
    }

  std::vector<std::pair<int64_t, bool>> widths;
  for (auto [a, c] : orbit_reps) {
    const MatZ gamma = lift_column(a, c, N);
    const MatZ gamma_inv = gamma.inverse();
    bool found = false;
    for (int64_t h = 1; h <= N && !found; ++h) {
      const MatZ conj = (gamma * gen_t_pow(h)) * gamma_inv;
      if (hset.contains(reduce_mod(conj, N).entries())) {
        widths.emplace_back(h, true);
        found = true;
      } else if (hset.contains(reduce_mod(conj.negate(), N).entries())) {
        widths.emplace_back(h, false);
        found = true;
      }
    }
    if (!found)
      throw std::logic_error("no cusp width within the level bound; broken input");
  }
  std::sort(widths.begin(), widths.end());
  return widths;
}

OracleInvariants brute_invariants(const FiniteGroupTable& table) {
  const CosetSummary cs = brute_coset_space(table);
  if (cs.minus_one)
    throw minus_one_error("oracle level " + std::to_string(table.level));
  OracleInvariants inv;
  inv.mu = cs.coset_count / 2;
  inv.eps3 = cs.eps3;
  inv.widths = brute_cusps(table);
  int64_t width_sum = 0;
  for (auto [h, reg] : inv.widths) width_sum += h;
  if (width_sum != inv.mu)
    throw std::logic_error("oracle cusp widths sum to " +
                           std::to_string(width_sum) + ", expected mu = " +
                           std::to_string(inv.mu));
  inv.genus = genus_from(inv.mu, inv.eps3,
                         static_cast<int64_t>(inv.widths.size()));
  return inv;
}

std::vector<std::string> crosscheck(const Subgroup& g, int64_t guard_bound) {
  if (!g.origin)
    throw std::domain_error("oracle crosscheck requires a congruence-defined "
                            "group");
  std::vector<std::string> diffs;
  const FiniteGroupTable table =
      make_table(g.origin->level, g.origin->generators, guard_bound);
  const OracleInvariants brute = brute_invariants(table);
  CurveInvariants main;
  try {
    main = curve_invariants(g);
  } catch (const std::exception& e) {
    // a corrupted representation usually trips an internal assertion
    // before producing numbers; that is itself a discrepancy
    diffs.push_back(std::string("main pipeline failed: ") + e.what());
    return diffs;
  }

  const auto mism = [&diffs](const std::string& what, int64_t a, int64_t b) {
    if (a != b)
      diffs.push_back(what + ": main " + std::to_string(a) + " vs oracle " +
                      std::to_string(b));
  };
  mism("mu", main.mu, brute.mu);
  mism("eps3", main.eps3, brute.eps3);
  mism("genus", main.genus, brute.genus);
  if (main.width_multiset() != brute.widths)
    diffs.push_back("cusp width multiset differs");
  return diffs;
}

}  // namespace oracle
}  // namespace emsurf

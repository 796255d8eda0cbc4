#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "emsurf/curve.hpp"

using namespace emsurf;

namespace {

Subgroup gamma1(int64_t N) {
  return build_congruence(builtin_spec(Family::Gamma1, N));
}
Subgroup gamma_full(int64_t N) {
  return build_congruence(builtin_spec(Family::Gamma, N));
}

using WidthSet = std::vector<std::pair<int64_t, bool>>;

WidthSet widths_of(const Subgroup& g) {
  WidthSet out;
  for (const Cusp& c : cusps(g)) out.emplace_back(c.psl_width, c.regular);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("cusps of Gamma1(4): the classical irregular example") {
  const Subgroup g = gamma1(4);
  const auto cs = cusps(g);
  REQUIRE(cs.size() == 3);
  // multiset {(1,reg), (4,reg), (1,irr)}; the cusp 1/2 is irregular
  CHECK(widths_of(g) == WidthSet{{1, false}, {1, true}, {4, true}});
  for (const Cusp& c : cs) {
    CHECK(c.sl_width == (c.regular ? c.psl_width : 2 * c.psl_width));
    CHECK(c.witness.det() == 1);
  }
  // labels: witness columns of the three classes inf, 0, 1/2
  std::vector<std::string> labels;
  for (const Cusp& c : cs) labels.push_back(c.label);
  CHECK(std::find(labels.begin(), labels.end(), "inf") != labels.end());
  const Cusp* irregular = nullptr;
  for (const Cusp& c : cs)
    if (!c.regular) irregular = &c;
  REQUIRE(irregular != nullptr);
  CHECK(irregular->sl_width == 2);
  CHECK(std::abs(irregular->witness.c) % 4 == 2);  // the cusp class of 1/2
}

TEST_CASE("cusps of Gamma(3) and Gamma1(3)") {
  CHECK(widths_of(gamma_full(3)) ==
        WidthSet{{3, true}, {3, true}, {3, true}, {3, true}});
  CHECK(widths_of(gamma1(3)) == WidthSet{{1, true}, {3, true}});
}

TEST_CASE("cusps of Gamma1(5)") {
  CHECK(widths_of(gamma1(5)) ==
        WidthSet{{1, true}, {1, true}, {5, true}, {5, true}});
}

TEST_CASE("first cusp is infinity with the identity witness") {
  const auto cs = cusps(gamma1(4));
  CHECK(cs[0].label == "inf");
  CHECK(cs[0].witness == mat_identity());
  CHECK(cs[0].psl_width == 1);
}

TEST_CASE("irregular cusps beyond Gamma1(4): the preimage of <-T>") {
  // -T generates an order-4 subgroup of SL2(Z/4) avoiding -I; the cusp at
  // infinity of the preimage is stabilized by -T, hence irregular
  CongruenceSpec spec;
  spec.level = 4;
  spec.generators = {make_mod(-1, -1, 0, -1, 4)};
  spec.label = "minus-t:4";
  const Subgroup g = build_congruence(spec);
  CHECK(g.rep.n == 12);
  CHECK_FALSE(g.minus_one);
  CHECK(widths_of(g) == WidthSet{{1, false}, {1, true}, {4, true}});
  const auto cs = cusps(g);
  CHECK_FALSE(cs[0].regular);  // the infinity cusp itself this time
  CHECK(cs[0].label == "inf");
  CHECK(cs[0].sl_width == 2);
}

TEST_CASE("elliptic points") {
  CHECK(elliptic_count(gamma1(3)) == std::pair<int64_t, int64_t>{0, 1});
  CHECK(elliptic_count(gamma1(4)) == std::pair<int64_t, int64_t>{0, 0});
  CHECK(elliptic_count(gamma_full(3)) == std::pair<int64_t, int64_t>{0, 0});
}

TEST_CASE("genus formula") {
  CHECK(genus_from(6, 0, 3) == 0);     // Gamma1(4)
  CHECK(genus_from(60, 0, 10) == 1);   // Gamma1(11)
  CHECK(genus_from(168, 0, 24) == 3);  // Gamma(7), the Klein quartic
  CHECK_THROWS_AS(genus_from(7, 0, 3), std::domain_error);   // non-integral
  CHECK_THROWS_AS(genus_from(6, 0, 30), std::domain_error);  // negative
}

TEST_CASE("aggregated curve invariants") {
  const CurveInvariants g14 = curve_invariants(gamma1(4));
  CHECK(g14.mu == 6);
  CHECK(g14.genus == 0);
  CHECK(g14.eps2 == 0);
  CHECK(g14.eps3 == 0);
  CHECK(g14.eps_reg == 2);
  CHECK(g14.eps_irr == 1);

  const CurveInvariants g17 = curve_invariants(gamma1(7));
  CHECK(g17.mu == 24);
  CHECK(g17.genus == 0);
  CHECK(g17.eps3 == 0);
  CHECK(g17.eps_reg == 6);
  CHECK(g17.eps_irr == 0);

  const CurveInvariants g111 = curve_invariants(gamma1(11));
  CHECK(g111.mu == 60);
  CHECK(g111.genus == 1);
  CHECK(g111.eps_reg == 10);
}

TEST_CASE("theorem operations refuse groups containing -I") {
  CHECK_THROWS_AS(cusps(gamma1(2)), minus_one_error);
  CHECK_THROWS_AS(elliptic_count(gamma1(1)), minus_one_error);
  CHECK_THROWS_AS(curve_invariants(gamma_full(2)), minus_one_error);
}

TEST_CASE("width bookkeeping over the corpus") {
  auto check_group = [](const Subgroup& g) {
    const CurveInvariants ci = curve_invariants(g);
    int64_t psl_sum = 0, coset_sum = 0;
    for (const Cusp& c : ci.cusps) {
      psl_sum += c.psl_width;
      coset_sum += c.regular ? 2 * c.sl_width : c.sl_width;
    }
    CHECK(psl_sum == ci.mu);
    // consumed T-orbits partition all n cosets
    CHECK(coset_sum == g.rep.n);
    CHECK(ci.eps2 == 0);
  };
  for (int64_t N = 3; N <= 12; ++N) check_group(gamma1(N));
  for (int64_t N = 3; N <= 8; ++N) check_group(gamma_full(N));
}

TEST_CASE("cusp data is stable under coset relabeling") {
  const Subgroup g = gamma1(4);
  const int32_t n = g.rep.n;
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    Perm relabel = perm_identity(n);
    std::shuffle(relabel.begin() + 1, relabel.end(), rng);  // keep coset 0
    const Perm inv = perm_inverse(relabel);
    Subgroup shuffled;
    shuffled.label = "shuffled";
    shuffled.rep.n = n;
    shuffled.rep.sigma_s =
        perm_compose(perm_compose(inv, g.rep.sigma_s), relabel);
    shuffled.rep.sigma_t =
        perm_compose(perm_compose(inv, g.rep.sigma_t), relabel);
    shuffled.rep.witnesses =
        witnesses_by_bfs(shuffled.rep.sigma_s, shuffled.rep.sigma_t);
    shuffled.minus_one = false;
    CHECK(widths_of(shuffled) == widths_of(g));
    const CurveInvariants a = curve_invariants(shuffled);
    const CurveInvariants b = curve_invariants(g);
    CHECK(a.mu == b.mu);
    CHECK(a.genus == b.genus);
    CHECK(a.eps3 == b.eps3);
  }
}

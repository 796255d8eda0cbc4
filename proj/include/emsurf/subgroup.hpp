#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "emsurf/errors.hpp"
#include "emsurf/sl2.hpp"

namespace emsurf {

// One-line permutation of {0,...,n-1}.
using Perm = std::vector<int32_t>;

Perm perm_identity(int32_t n);
Perm perm_inverse(const Perm& p);
// Apply p first, then q.
Perm perm_compose(const Perm& p, const Perm& q);
bool is_permutation(const Perm& p);

// Level N and generators of a subgroup H <= SL2(Z/N); the group is the
// full preimage of H under reduction mod N.
struct CongruenceSpec {
  int64_t level = 1;
  std::vector<MatModN> generators;
  std::string label;
};

// Action of SL2(Z) on the right cosets of a finite-index subgroup.
// Convention: coset i acted on the right, rho(gh)(i) = rho(h)(rho(g)(i)).
// Coset 0 carries the identity witness.
struct PermutationRep {
  int32_t n = 1;
  Perm sigma_s;
  Perm sigma_t;
  std::vector<MatZ> witnesses;

  // rho of a word, letter by letter.
  Perm permutation_of(const GeneratorWord& w) const;
};

struct Subgroup {
  PermutationRep rep;
  std::optional<CongruenceSpec> origin;  // empty for permutation input
  std::string label;
  bool minus_one = false;

  int64_t index_sl2() const { return rep.n; }
  // PSL2(Z)-index: n/2 without -I, n with it.
  int64_t index_psl2() const { return minus_one ? rep.n : rep.n / 2; }
};

enum class Family { Gamma, Gamma1 };

// gamma:N  -> H trivial (principal congruence level N)
// gamma1:N -> H = <T mod N>
CongruenceSpec builtin_spec(Family f, int64_t N);
CongruenceSpec builtin_spec(const std::string& family, int64_t N);

// Closes H inside SL2(Z/N), enumerates cosets by BFS over {S,S-1,T,T-1}
// from the identity, and realizes BFS-shortest witness words as integer
// matrices. Coset keys are the lex-least element of H*x, so the numbering
// is reproducible.
Subgroup build_congruence(const CongruenceSpec& spec);

bool contains_minus_one(const Subgroup& g);

// All invariant checks on (n, sigma_s, sigma_t); empty result means valid.
std::vector<Violation> validate(const PermutationRep& rep);

// JSON interchange document {"n":..,"sigma_s":[..],"sigma_t":[..],"label":..},
// zero-based one-line notation. Export is byte-stable for a given subgroup.
Subgroup load_permutation(const std::string& json_text);
std::string export_permutation(const Subgroup& g);

// Witness words for each coset, BFS-shortest over {S,S-1,T,T-1} with that
// fixed tie-break order. Used on load and for congruence builds.
std::vector<MatZ> witnesses_by_bfs(const Perm& sigma_s, const Perm& sigma_t);

}  // namespace emsurf

#include "emsurf/subgroup.hpp"

#include <deque>
#include <map>
#include <set>

#include <json.hpp>

namespace emsurf {

Perm perm_identity(int32_t n) {
  Perm p(n);
  for (int32_t i = 0; i < n; ++i) p[i] = i;
  return p;
}

Perm perm_inverse(const Perm& p) {
  Perm q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int32_t>(i);
  return q;
}

Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int32_t v : p) {
    if (v < 0 || v >= static_cast<int32_t>(p.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Perm PermutationRep::permutation_of(const GeneratorWord& w) const {
  Perm r = perm_identity(n);
  for (Gen g : w) {
    switch (g) {
      case Gen::S: r = perm_compose(r, sigma_s); break;
      case Gen::T: r = perm_compose(r, sigma_t); break;
      case Gen::SInv: r = perm_compose(r, perm_inverse(sigma_s)); break;
      case Gen::TInv: r = perm_compose(r, perm_inverse(sigma_t)); break;
    }
  }
  return r;
}

CongruenceSpec builtin_spec(Family f, int64_t N) {
  if (N < 1) throw std::domain_error("level must be >= 1");
  CongruenceSpec spec;
  spec.level = N;
  switch (f) {
    case Family::Gamma:
      spec.label = "gamma:" + std::to_string(N);
      break;
    case Family::Gamma1:
      spec.label = "gamma1:" + std::to_string(N);
      spec.generators.push_back(reduce_mod(gen_t(), N));
      break;
  }
  return spec;
}

CongruenceSpec builtin_spec(const std::string& family, int64_t N) {
  if (family == "gamma") return builtin_spec(Family::Gamma, N);
  if (family == "gamma1") return builtin_spec(Family::Gamma1, N);
  throw parse_error("unknown group family '" + family + "'");
}

namespace {

using Key = std::array<int64_t, 4>;

// Subgroup closure inside the finite group SL2(Z/N). Identity plus products
// suffice: every element of a finite group has finite order.
std::vector<MatModN> close_subgroup(const std::vector<MatModN>& gens, int64_t N) {
  const MatModN id = reduce_mod(mat_identity(), N);
  std::set<Key> seen{id.entries()};
  std::vector<MatModN> elements{id};
  std::deque<MatModN> frontier{id};
  while (!frontier.empty()) {
    MatModN x = frontier.front();
    frontier.pop_front();
    for (const MatModN& g : gens) {
      MatModN y = mod_multiply(x, g);
      if (seen.insert(y.entries()).second) {
        elements.push_back(y);
        frontier.push_back(y);
      }
    }
  }
  return elements;
}

// Lex-least element of H*x under the (a,b,c,d) entry order.
Key coset_key(const std::vector<MatModN>& H, const MatModN& x) {
  Key best{};
  bool first = true;
  for (const MatModN& h : H) {
    Key k = mod_multiply(h, x).entries();
    if (first || k < best) {
      best = k;
      first = false;
    }
  }
  return best;
}

}  // namespace

Subgroup build_congruence(const CongruenceSpec& spec) {
  const int64_t N = spec.level;
  if (N < 1) throw std::domain_error("level must be >= 1");
  for (const MatModN& g : spec.generators) {
    if (g.modulus != N)
      throw std::domain_error("generator modulus does not match the level");
    if (g.det_mod() != 1 % N)
      throw std::domain_error("generator has det != 1 mod N: " + to_string(g));
  }

  const std::vector<MatModN> H = close_subgroup(spec.generators, N);
  const int64_t group_order = sl2_group_order(N);
  if (group_order % static_cast<int64_t>(H.size()) != 0)
    throw std::logic_error("|H| does not divide |SL2(Z/N)|");
  const int64_t expected_cosets = group_order / static_cast<int64_t>(H.size());

  struct Node {
    MatModN rep;       // some element of the coset
    GeneratorWord word;
  };
  const std::array<Gen, 4> gens{Gen::S, Gen::SInv, Gen::T, Gen::TInv};
  std::map<Key, int32_t> index_of;
  std::vector<Node> nodes;

  MatModN start = reduce_mod(mat_identity(), N);
  index_of[coset_key(H, start)] = 0;
  nodes.push_back({start, {}});
  for (size_t head = 0; head < nodes.size(); ++head) {
    // nodes grows during the loop; index access, no iterators
    const MatModN x = nodes[head].rep;
    const GeneratorWord word = nodes[head].word;
    for (Gen g : gens) {
      MatModN y = mod_multiply(x, reduce_mod(gen_matrix(g), N));
      Key k = coset_key(H, y);
      if (!index_of.contains(k)) {
        index_of[k] = static_cast<int32_t>(nodes.size());
        GeneratorWord w = word;
        w.push_back(g);
        nodes.push_back({y, std::move(w)});
      }
    }
  }

  const int32_t n = static_cast<int32_t>(nodes.size());
  if (n != expected_cosets)
    throw std::logic_error("coset enumeration reached " + std::to_string(n) +
                           " cosets, expected " + std::to_string(expected_cosets));

  PermutationRep rep;
  rep.n = n;
  rep.sigma_s.resize(n);
  rep.sigma_t.resize(n);
  const MatModN s_mod = reduce_mod(gen_s(), N);
  const MatModN t_mod = reduce_mod(gen_t(), N);
  for (int32_t i = 0; i < n; ++i) {
    rep.sigma_s[i] = index_of.at(coset_key(H, mod_multiply(nodes[i].rep, s_mod)));
    rep.sigma_t[i] = index_of.at(coset_key(H, mod_multiply(nodes[i].rep, t_mod)));
  }
  rep.witnesses.reserve(n);
  for (const Node& node : nodes) rep.witnesses.push_back(word_to_matrix(node.word));

  Subgroup g;
  g.minus_one = perm_compose(rep.sigma_s, rep.sigma_s) == perm_identity(n);
  g.rep = std::move(rep);
  g.origin = spec;
  g.label = spec.label;
  return g;
}

bool contains_minus_one(const Subgroup& g) {
  // -I is central, so it fixes every coset or none; it fixes them all
  // exactly when it lies in the group
  const Perm s2 = perm_compose(g.rep.sigma_s, g.rep.sigma_s);
  return s2 == perm_identity(g.rep.n);
}

std::vector<Violation> validate(const PermutationRep& rep) {
  std::vector<Violation> out;
  const int32_t n = rep.n;
  if (n < 1) {
    out.push_back({"shape:n", "coset count must be >= 1"});
    return out;
  }
  if (static_cast<int32_t>(rep.sigma_s.size()) != n ||
      static_cast<int32_t>(rep.sigma_t.size()) != n) {
    out.push_back({"shape:length", "permutation arrays must have length n"});
    return out;
  }
  if (!is_permutation(rep.sigma_s))
    out.push_back({"shape:sigma_s", "sigma_s is not a permutation of 0..n-1"});
  if (!is_permutation(rep.sigma_t))
    out.push_back({"shape:sigma_t", "sigma_t is not a permutation of 0..n-1"});
  if (!out.empty()) return out;

  const Perm id = perm_identity(n);
  const Perm s2 = perm_compose(rep.sigma_s, rep.sigma_s);
  const Perm s4 = perm_compose(s2, s2);
  if (s4 != id) out.push_back({"relation:S^4", "rho(S)^4 is not the identity"});

  const Perm u = perm_compose(rep.sigma_s, rep.sigma_t);  // rho(ST)
  const Perm u2 = perm_compose(u, u);
  const Perm u3 = perm_compose(u2, u);
  if (perm_compose(u3, u3) != id)
    out.push_back({"relation:(ST)^6", "rho(ST)^6 is not the identity"});
  if (u3 != s2)
    out.push_back({"relation:S^2=(ST)^3",
                   "rho(S)^2 != rho(ST)^3; the pair does not define an "
                   "action of SL2(Z)"});
  if (perm_compose(s2, rep.sigma_t) != perm_compose(rep.sigma_t, s2))
    out.push_back({"relation:S^2 central", "rho(S^2) does not commute with rho(T)"});

  // transitivity of <sigma_s, sigma_t>
  {
    std::vector<bool> seen(n, false);
    std::deque<int32_t> q{0};
    seen[0] = true;
    int32_t count = 1;
    while (!q.empty()) {
      int32_t i = q.front();
      q.pop_front();
      for (int32_t j : {rep.sigma_s[i], rep.sigma_t[i]}) {
        if (!seen[j]) {
          seen[j] = true;
          ++count;
          q.push_back(j);
        }
      }
    }
    if (count != n)
      out.push_back({"transitivity",
                     "generated group reaches only " + std::to_string(count) +
                         " of " + std::to_string(n) + " cosets"});
  }

  // -1 dichotomy: rho(S^2) is the identity or fixed-point-free
  {
    int32_t fixed = 0;
    for (int32_t i = 0; i < n; ++i)
      if (s2[i] == i) ++fixed;
    if (fixed != 0 && fixed != n)
      out.push_back({"minus-one dichotomy",
                     "rho(S^2) fixes " + std::to_string(fixed) + " of " +
                         std::to_string(n) + " cosets; must fix all or none"});
  }
  return out;
}

std::vector<MatZ> witnesses_by_bfs(const Perm& sigma_s, const Perm& sigma_t) {
  const int32_t n = static_cast<int32_t>(sigma_s.size());
  const Perm s_inv = perm_inverse(sigma_s);
  const Perm t_inv = perm_inverse(sigma_t);
  std::vector<MatZ> wit(n);
  std::vector<bool> seen(n, false);
  std::deque<int32_t> q{0};
  wit[0] = mat_identity();
  seen[0] = true;
  const std::array<std::pair<const Perm*, MatZ>, 4> moves{
      std::pair{&sigma_s, gen_s()}, std::pair{&s_inv, gen_s().inverse()},
      std::pair{&sigma_t, gen_t()}, std::pair{&t_inv, gen_t().inverse()}};
  while (!q.empty()) {
    int32_t i = q.front();
    q.pop_front();
    for (const auto& [perm, mat] : moves) {
      int32_t j = (*perm)[i];
      if (!seen[j]) {
        seen[j] = true;
        wit[j] = wit[i] * mat;
        q.push_back(j);
      }
    }
  }
  return wit;
}

namespace {

Subgroup from_validated_perms(Perm sigma_s, Perm sigma_t, std::string label) {
  PermutationRep rep;
  rep.n = static_cast<int32_t>(sigma_s.size());
  rep.sigma_s = std::move(sigma_s);
  rep.sigma_t = std::move(sigma_t);
  if (auto violations = validate(rep); !violations.empty())
    throw validation_error(std::move(violations));
  rep.witnesses = witnesses_by_bfs(rep.sigma_s, rep.sigma_t);
  Subgroup g;
  g.label = std::move(label);
  g.minus_one =
      perm_compose(rep.sigma_s, rep.sigma_s) == perm_identity(rep.n);
  g.rep = std::move(rep);
  return g;
}

}  // namespace

Subgroup load_permutation(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("permutation document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("sigma_s") ||
      !doc.contains("sigma_t"))
    throw parse_error("permutation document must contain n, sigma_s, sigma_t");
  int64_t n;
  Perm ss, st;
  std::string label = doc.value("label", std::string("permutation-input"));
  try {
    n = doc.at("n").get<int64_t>();
    ss = doc.at("sigma_s").get<Perm>();
    st = doc.at("sigma_t").get<Perm>();
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("permutation document: ") + e.what());
  }
  if (n < 1) throw parse_error("permutation document: n must be >= 1");
  if (static_cast<int64_t>(ss.size()) != n || static_cast<int64_t>(st.size()) != n)
    throw parse_error("permutation document: array length does not match n");
  return from_validated_perms(std::move(ss), std::move(st), std::move(label));
}

std::string export_permutation(const Subgroup& g) {
  nlohmann::json doc;
  doc["label"] = g.label;
  doc["n"] = g.rep.n;
  doc["sigma_s"] = g.rep.sigma_s;
  doc["sigma_t"] = g.rep.sigma_t;
  // nlohmann objects are key-sorted, so this is byte-stable
  return doc.dump(2) + "\n";
}

}  // namespace emsurf

#pragma once

// Structural predicates and subgroup functors: Sylow subgroups, the cores
// O_p(G) and O_p'(G), p-nilpotency, and the cyclic/abelian/nilpotent/
// supersoluble/soluble chain.  Everything is brute force over element lists,
// which is exactly right at desk scale.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "exact.hpp"
#include "families.hpp"
#include "group.hpp"

namespace ordmean {

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  const FactoredInteger f = factorize(n);
  for (const auto& [p, e] : f.exponents()) ps.push_back(static_cast<std::uint64_t>(p));
  return ps;
}

inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

inline bool is_p_power(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

// Sylow p-subgroup: start from the cyclic subgroup of a p-element of maximal
// order and repeatedly adjoin a p-element that normalizes the current
// subgroup but lies outside it.  Such an element exists as long as the order
// is below the p-part, so the climb terminates at a full Sylow subgroup.
inline Subgroup sylow(const PermGroup& g, std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("sylow: p must be prime");
  std::uint64_t target = p_part(g.order(), p);
  if (target == 1) return trivial_subgroup(g);

  const Permutation* seed = nullptr;
  std::uint64_t seed_order = 0;
  for (const Permutation& x : g.elements()) {
    std::uint64_t o = x.order();
    if (is_p_power(o, p) && o > seed_order) {
      seed = &x;
      seed_order = o;
    }
  }
  Subgroup s = subgroup_generated(g, std::span<const Permutation>(seed, 1));
  while (s.order() < target) {
    bool extended = false;
    for (const Permutation& x : g.elements()) {
      if (!is_p_power(x.order(), p) || s.contains(x)) continue;
      Permutation xi = x.inverse();
      bool normalizes = true;
      for (const Permutation& y : s.elements)
        if (!s.contains(xi * y * x)) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      std::vector<Permutation> gens = s.generators;
      gens.push_back(x);
      s = subgroup_generated(g, gens);
      extended = true;
      break;
    }
    if (!extended) throw std::logic_error("sylow: climb stalled below the p-part");
  }
  return s;
}

// O_p(G): intersection of all conjugates of one Sylow p-subgroup.
inline Subgroup core_p(const PermGroup& g, std::uint64_t p) {
  Subgroup s = sylow(g, p);
  if (s.is_trivial()) return s;
  Subgroup core = s;
  for (const Permutation& x : g.elements()) {
    Permutation xi = x.inverse();
    std::vector<Permutation> conj;
    conj.reserve(s.elements.size());
    for (const Permutation& y : s.elements) conj.push_back(xi * y * x);
    std::sort(conj.begin(), conj.end());
    std::vector<Permutation> meet;
    std::set_intersection(core.elements.begin(), core.elements.end(), conj.begin(), conj.end(),
                          std::back_inserter(meet));
    core.elements = std::move(meet);
    if (core.is_trivial()) break;
  }
  core.generators = core.elements;
  return core;
}

// O_p'(G): generated by every conjugacy class of p'-element whose normal
// closure is a p'-group.  Each such closure is a normal p'-subgroup and any
// normal p'-subgroup consists of such elements, so the join is the largest
// normal p'-subgroup.
inline Subgroup o_p_prime(const PermGroup& g, std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("o_p_prime: p must be prime");
  std::vector<Permutation> seeds;
  for (const auto& c : g.conjugacy_classes()) {
    if (c.representative.order() % p == 0) continue;
    if (c.representative.is_identity()) continue;
    Subgroup nc = normal_closure(g, std::span<const Permutation>(&c.representative, 1));
    // The whole closure goes into the join, keeping the result normal.
    if (nc.order() % p != 0)
      seeds.insert(seeds.end(), nc.elements.begin(), nc.elements.end());
  }
  Subgroup result = subgroup_generated(g, seeds);
  if (result.order() % p == 0)
    throw std::logic_error("o_p_prime: generated subgroup is not a p'-group");
  return result;
}

inline bool is_p_nilpotent(const PermGroup& g, std::uint64_t p) {
  std::uint64_t n = g.order();
  return o_p_prime(g, p).order() == n / p_part(n, p);
}

inline bool is_cyclic(const PermGroup& g) {
  return g.order_statistics().max_order() == g.order();
}

inline bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  return true;
}

inline bool is_nilpotent(const PermGroup& g) {
  for (std::uint64_t p : prime_divisors(g.order()))
    if (!is_normal(g, sylow(g, p))) return false;
  return true;
}

inline bool is_soluble(const PermGroup& g) {
  PermGroup h(g.degree(), g.generators(), g.element_cap());
  while (true) {
    Subgroup d = derived_subgroup(h);
    if (d.order() == 1) return true;
    if (d.order() == h.order()) return false;  // perfect and nontrivial
    h = d.as_group();
  }
}

// Supersolubility via the prime-order bottom of a chief series: a nontrivial
// G is supersoluble iff it has a normal subgroup N of prime order with G/N
// supersoluble.  If G is supersoluble every such N works, and if some N
// works G is supersoluble, so testing the first normal prime-order subgroup
// in deterministic order decides the predicate.  Recursion depth is at most
// log2 |G|.
inline bool is_supersoluble(const PermGroup& g) {
  if (g.order() == 1) return true;
  if (is_prime_u64(g.order())) return true;
  for (const auto& c : g.conjugacy_classes()) {
    std::uint64_t o = c.representative.order();
    if (!is_prime_u64(o)) continue;
    Subgroup n = subgroup_generated(g, std::span<const Permutation>(&c.representative, 1));
    if (!is_normal(g, n)) continue;
    return is_supersoluble(quotient(g, n));
  }
  return false;
}

struct Decomposition {
  bool holds = false;     // G = O_p(G) x O_p'(G)
  bool op_cyclic = false; // and O_p(G) is cyclic
  std::uint64_t op_order = 0;
  std::uint64_t opp_order = 0;
};

// Tests G = O_p(G) x O_p'(G): both cores normal (they are by construction,
// checked anyway), trivial intersection and orders multiplying to |G|.
inline Decomposition decomposes_as_op_times_opprime(const PermGroup& g, std::uint64_t p) {
  Subgroup op = core_p(g, p);
  Subgroup opp = o_p_prime(g, p);
  Decomposition d;
  d.op_order = op.order();
  d.opp_order = opp.order();
  d.op_cyclic = op.is_cyclic_subgroup();
  d.holds = op.order() * opp.order() == g.order() && intersect(op, opp).order() == 1 &&
            is_normal(g, op) && is_normal(g, opp);
  return d;
}

struct SylowRecord {
  std::uint64_t p = 0;
  std::uint64_t sylow_order = 0;
  bool sylow_normal = false;
  bool sylow_cyclic = false;
  std::uint64_t core_p_order = 0;
  std::uint64_t o_p_prime_order = 0;
  bool p_nilpotent = false;
};

struct StructureProfile {
  bool cyclic = false, abelian = false, nilpotent = false, supersoluble = false, soluble = false;
  std::vector<SylowRecord> primes;
};

inline StructureProfile structure_profile(const PermGroup& g) {
  StructureProfile s;
  s.cyclic = is_cyclic(g);
  s.abelian = is_abelian(g);
  s.nilpotent = is_nilpotent(g);
  s.supersoluble = is_supersoluble(g);
  s.soluble = is_soluble(g);
  for (std::uint64_t p : prime_divisors(g.order())) {
    SylowRecord r;
    r.p = p;
    Subgroup sy = sylow(g, p);
    r.sylow_order = sy.order();
    r.sylow_normal = is_normal(g, sy);
    r.sylow_cyclic = sy.is_cyclic_subgroup();
    r.core_p_order = core_p(g, p).order();
    Subgroup opp = o_p_prime(g, p);
    r.o_p_prime_order = opp.order();
    r.p_nilpotent = opp.order() == g.order() / p_part(g.order(), p);
    s.primes.push_back(r);
  }
  return s;
}

// All normal subgroups when |G| is at most `exhaustive_cap`: every normal
// subgroup is a join of normal closures of single elements, so seeding with
// the class closures and saturating under joins is exhaustive.  Above the
// cap only the cheap normal subgroups are returned (class closures, derived
// subgroup, center, cores), which is what the large-group sweeps use.
inline std::vector<Subgroup> normal_subgroups(const PermGroup& g,
                                              std::uint64_t exhaustive_cap = 500) {
  std::vector<Subgroup> found;
  std::set<std::vector<Permutation>> seen;
  auto add = [&](Subgroup s) {
    if (seen.insert(s.elements).second) found.push_back(std::move(s));
  };
  add(trivial_subgroup(g));
  for (const auto& c : g.conjugacy_classes())
    add(normal_closure(g, std::span<const Permutation>(&c.representative, 1)));

  if (g.order() <= exhaustive_cap) {
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        std::vector<Permutation> gens = found[i].generators;
        gens.insert(gens.end(), found[j].generators.begin(), found[j].generators.end());
        add(subgroup_generated(g, gens));
      }
    }
  } else {
    add(derived_subgroup(g));
    add(center(g));
    for (std::uint64_t p : prime_divisors(g.order())) {
      add(core_p(g, p));
      add(o_p_prime(g, p));
    }
  }
  std::sort(found.begin(), found.end(),
            [](const Subgroup& a, const Subgroup& b) { return a.elements < b.elements; });
  return found;
}

}  // namespace ordmean

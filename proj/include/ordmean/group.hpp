#pragma once

// Finite permutation groups given by generators.  Element lists, conjugacy
// classes and element-order statistics are computed once on demand; after
// that a PermGroup is read-only and safe to share across threads.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "perm.hpp"

namespace ordmean {

inline constexpr std::uint64_t kDefaultElementCap = 1'000'000;

class ElementCapError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ConjugacyClass {
  Permutation representative;  // lexicographically least element of the class
  std::uint64_t size = 0;
};

// Multiset {o(g) : g in G} as sorted (order, multiplicity) pairs.
struct OrderStatistics {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& [o, m] : entries) t += m;
    return t;
  }
  std::uint64_t max_order() const { return entries.empty() ? 0 : entries.back().first; }
  std::uint64_t multiplicity(std::uint64_t order) const {
    for (const auto& [o, m] : entries)
      if (o == order) return m;
    return 0;
  }
  bool operator==(const OrderStatistics&) const = default;
};

class PermGroup {
public:
  PermGroup(std::uint32_t degree, std::vector<Permutation> generators,
            std::uint64_t element_cap = kDefaultElementCap)
      : degree_(degree), gens_(std::move(generators)), cap_(element_cap),
        caches_(std::make_unique<Caches>()) {
    for (const auto& g : gens_)
      if (g.degree() != degree_) throw std::invalid_argument("PermGroup: generator degree mismatch");
  }

  PermGroup(PermGroup&&) = default;
  PermGroup& operator=(PermGroup&&) = default;
  PermGroup(const PermGroup&) = delete;
  PermGroup& operator=(const PermGroup&) = delete;

  std::uint32_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  std::uint64_t element_cap() const { return cap_; }
  Permutation identity() const { return Permutation(degree_); }

  // Breadth-first closure of the generators; the cached list is sorted
  // lexicographically on image arrays so every downstream order is stable.
  const std::vector<Permutation>& elements() const {
    std::call_once(caches_->elements_once, [this] {
      std::set<Permutation> seen;
      std::vector<const Permutation*> frontier;
      auto [it0, _] = seen.insert(Permutation(degree_));
      frontier.push_back(&*it0);
      while (!frontier.empty()) {
        std::vector<const Permutation*> next;
        for (const Permutation* g : frontier) {
          for (const Permutation& s : gens_) {
            auto [it, inserted] = seen.insert(*g * s);
            if (inserted) {
              if (seen.size() > cap_)
                throw ElementCapError("PermGroup: element cap of " + std::to_string(cap_) + " exceeded");
              next.push_back(&*it);
            }
          }
        }
        frontier = std::move(next);
      }
      caches_->elements.assign(seen.begin(), seen.end());
    });
    return caches_->elements;
  }

  std::uint64_t order() const { return elements().size(); }

  bool contains(const Permutation& p) const {
    const auto& el = elements();
    return std::binary_search(el.begin(), el.end(), p);
  }

  // Partition of G into orbits under conjugation, representatives ascending.
  const std::vector<ConjugacyClass>& conjugacy_classes() const {
    std::call_once(caches_->classes_once, [this] {
      const auto& el = elements();
      std::vector<Permutation> gen_inv;
      gen_inv.reserve(gens_.size());
      for (const auto& g : gens_) gen_inv.push_back(g.inverse());

      std::vector<bool> visited(el.size(), false);
      for (std::size_t i = 0; i < el.size(); ++i) {
        if (visited[i]) continue;
        visited[i] = true;
        std::vector<std::size_t> orbit{i};
        for (std::size_t k = 0; k < orbit.size(); ++k) {
          const Permutation& x = el[orbit[k]];
          for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
            Permutation y = gen_inv[gi] * x * gens_[gi];
            auto it = std::lower_bound(el.begin(), el.end(), y);
            std::size_t j = static_cast<std::size_t>(it - el.begin());
            if (!visited[j]) {
              visited[j] = true;
              orbit.push_back(j);
            }
          }
        }
        caches_->classes.push_back({el[i], orbit.size()});
      }
    });
    return caches_->classes;
  }

  // Aggregated from conjugacy classes; all members of a class share one order.
  const OrderStatistics& order_statistics() const {
    std::call_once(caches_->stats_once, [this] {
      std::map<std::uint64_t, std::uint64_t> acc;
      for (const auto& c : conjugacy_classes()) acc[c.representative.order()] += c.size;
      caches_->stats.entries.assign(acc.begin(), acc.end());
    });
    return caches_->stats;
  }

private:
  struct Caches {
    std::once_flag elements_once, classes_once, stats_once;
    std::vector<Permutation> elements;
    std::vector<ConjugacyClass> classes;
    OrderStatistics stats;
  };

  std::uint32_t degree_;
  std::vector<Permutation> gens_;
  std::uint64_t cap_;
  mutable std::unique_ptr<Caches> caches_;
};

// Subgroup of a fixed parent group; holds its own sorted element list.
struct Subgroup {
  const PermGroup* parent = nullptr;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // sorted lexicographically

  std::uint64_t order() const { return elements.size(); }
  bool is_trivial() const { return elements.size() == 1; }
  bool is_whole() const { return parent && elements.size() == parent->order(); }
  bool contains(const Permutation& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
  }
  // A subgroup is cyclic iff some element's order reaches the subgroup order.
  bool is_cyclic_subgroup() const {
    for (const auto& x : elements)
      if (x.order() == elements.size()) return true;
    return false;
  }
  PermGroup as_group() const {
    if (!parent) throw std::invalid_argument("Subgroup: no parent");
    return PermGroup(parent->degree(),
                     generators.empty() ? std::vector<Permutation>{Permutation(parent->degree())}
                                        : generators,
                     parent->element_cap());
  }
  bool operator==(const Subgroup& o) const { return parent == o.parent && elements == o.elements; }
};

namespace detail {

inline std::vector<Permutation> closure(std::uint32_t degree, std::span<const Permutation> seeds,
                                        std::uint64_t cap) {
  std::set<Permutation> seen;
  std::vector<const Permutation*> frontier;
  auto [it0, _] = seen.insert(Permutation(degree));
  frontier.push_back(&*it0);
  std::vector<Permutation> gens(seeds.begin(), seeds.end());
  while (!frontier.empty()) {
    std::vector<const Permutation*> next;
    for (const Permutation* g : frontier) {
      for (const Permutation& s : gens) {
        auto [it, inserted] = seen.insert(*g * s);
        if (inserted) {
          if (seen.size() > cap) throw ElementCapError("closure: element cap exceeded");
          next.push_back(&*it);
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace detail

inline Subgroup subgroup_generated(const PermGroup& g, std::span<const Permutation> seeds) {
  Subgroup h;
  h.parent = &g;
  h.generators.assign(seeds.begin(), seeds.end());
  std::sort(h.generators.begin(), h.generators.end());
  h.generators.erase(std::unique(h.generators.begin(), h.generators.end()), h.generators.end());
  h.elements = detail::closure(g.degree(), h.generators, g.element_cap());
  return h;
}

inline Subgroup trivial_subgroup(const PermGroup& g) {
  return subgroup_generated(g, std::span<const Permutation>{});
}

inline Subgroup full_subgroup(const PermGroup& g) {
  return subgroup_generated(g, std::span<const Permutation>(g.generators()));
}

// Smallest normal subgroup of G containing the seeds: saturate the generating
// set under conjugation by the generators of G, then close.
inline Subgroup normal_closure(const PermGroup& g, std::span<const Permutation> seeds) {
  std::set<Permutation> gen_set(seeds.begin(), seeds.end());
  gen_set.erase(Permutation(g.degree()));
  while (true) {
    std::vector<Permutation> gens(gen_set.begin(), gen_set.end());
    Subgroup h = subgroup_generated(g, gens);
    bool grew = false;
    for (const Permutation& s : g.generators()) {
      Permutation si = s.inverse();
      for (const Permutation& x : h.elements) {
        Permutation y = si * x * s;
        if (!h.contains(y)) {
          gen_set.insert(std::move(y));
          grew = true;
        }
      }
    }
    if (!grew) return h;
  }
}

inline bool is_normal(const PermGroup& g, const Subgroup& h) {
  if (h.parent != &g) throw std::invalid_argument("is_normal: subgroup of a different group");
  for (const Permutation& s : g.generators()) {
    Permutation si = s.inverse();
    for (const Permutation& x : h.elements)
      if (!h.contains(si * x * s)) return false;
  }
  return true;
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (a.parent != b.parent) throw std::invalid_argument("intersect: different parents");
  Subgroup r;
  r.parent = a.parent;
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                        std::back_inserter(r.elements));
  r.generators = r.elements;  // already a subgroup; no need for a smaller set
  return r;
}

inline Subgroup centralizer(const PermGroup& g, const Permutation& x) {
  std::vector<Permutation> commuting;
  for (const Permutation& y : g.elements())
    if (x * y == y * x) commuting.push_back(y);
  Subgroup r;
  r.parent = &g;
  r.elements = std::move(commuting);  // elements() is sorted, filtering keeps it sorted
  r.generators = r.elements;
  return r;
}

inline Subgroup center(const PermGroup& g) {
  std::vector<Permutation> central;
  for (const Permutation& y : g.elements()) {
    bool ok = true;
    for (const Permutation& s : g.generators())
      if (!(y * s == s * y)) {
        ok = false;
        break;
      }
    if (ok) central.push_back(y);
  }
  Subgroup r;
  r.parent = &g;
  r.elements = std::move(central);
  r.generators = r.elements;
  return r;
}

// Normal closure of the commutators of the generators.
inline Subgroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> comms;
  for (const Permutation& a : g.generators())
    for (const Permutation& b : g.generators())
      comms.push_back(a.inverse() * b.inverse() * a * b);
  return normal_closure(g, comms);
}

// G acting on the right cosets Ng by right multiplication.  N normal makes
// the kernel exactly N, so the image has order |G| / |N|.  Cosets are labeled
// by their lexicographically least member, in ascending order, which keeps
// quotients reproducible.
inline PermGroup quotient(const PermGroup& g, const Subgroup& n) {
  if (n.parent != &g) throw std::invalid_argument("quotient: subgroup of a different group");
  if (!is_normal(g, n)) throw std::invalid_argument("quotient: subgroup is not normal");
  if (n.order() == g.order()) throw std::invalid_argument("quotient: N = G is rejected");

  const auto& el = g.elements();
  std::map<Permutation, std::uint32_t> coset_of;  // element -> coset index (by min rep)
  std::vector<Permutation> reps;
  for (const Permutation& x : el) {
    if (coset_of.contains(x)) continue;
    // x is the least unassigned element, hence the least member of its coset Nx.
    std::uint32_t id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (const Permutation& nn : n.elements) coset_of.emplace(nn * x, id);
  }

  std::vector<Permutation> qgens;
  for (const Permutation& s : g.generators()) {
    std::vector<std::uint32_t> images(reps.size());
    for (std::uint32_t i = 0; i < reps.size(); ++i) images[i] = coset_of.at(reps[i] * s);
    qgens.push_back(Permutation::from_images(std::move(images)));
  }
  if (qgens.empty()) qgens.push_back(Permutation(static_cast<std::uint32_t>(reps.size())));
  return PermGroup(static_cast<std::uint32_t>(reps.size()), std::move(qgens), g.element_cap());
}

// Acts on the disjoint union of the two point sets.
inline PermGroup direct_product(const PermGroup& g, const PermGroup& h) {
  std::uint32_t dg = g.degree(), dh = h.degree();
  std::vector<Permutation> gens;
  for (const Permutation& s : g.generators()) {
    std::vector<std::uint32_t> img(dg + dh);
    for (std::uint32_t i = 0; i < dg; ++i) img[i] = s[i];
    for (std::uint32_t i = 0; i < dh; ++i) img[dg + i] = dg + i;
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  for (const Permutation& s : h.generators()) {
    std::vector<std::uint32_t> img(dg + dh);
    for (std::uint32_t i = 0; i < dg; ++i) img[i] = i;
    for (std::uint32_t i = 0; i < dh; ++i) img[dg + i] = dg + s[i];
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  if (gens.empty()) gens.push_back(Permutation(dg + dh));
  return PermGroup(dg + dh, std::move(gens), std::max(g.element_cap(), h.element_cap()));
}

// True iff order = 2p with p an odd prime.
inline bool has_order_2p(std::uint64_t order) {
  if (order % 2 != 0) return false;
  std::uint64_t p = order / 2;
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

// Restricted isomorphism tester for groups of order 2p, p an odd prime: such
// a group is either cyclic or dihedral, so two of them are isomorphic iff
// they are both cyclic or both non-cyclic.  Anything else is rejected.
inline bool is_isomorphic_small(const PermGroup& g, const PermGroup& h) {
  std::uint64_t n = g.order();
  if (n != h.order() || !has_order_2p(n))
    throw std::invalid_argument("is_isomorphic_small: supports |G| = |H| = 2p, p an odd prime");
  auto cyclic = [](const PermGroup& x) { return x.order_statistics().max_order() == x.order(); };
  return cyclic(g) == cyclic(h);
}

}  // namespace ordmean

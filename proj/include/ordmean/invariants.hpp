#pragma once

// The element-order mean functions: psi(G) and rho(G) are the sum and the
// product of the orders of all elements of G,
//   psi_dd(G) = psi(G) / |G|^2      (arithmetic mean of orders, scaled),
//   ell(G)    = rho(G)^{1/|G|}/|G|  (geometric mean of orders, scaled).
// rho is only ever kept in factored form; expanding it is both unnecessary
// and quickly impossible (rho(A5) already has more than 40 digits).

#include <cstdint>
#include <stdexcept>

#include "exact.hpp"
#include "group.hpp"

namespace ordmean {

inline BigInt psi(const PermGroup& g) {
  BigInt sum = 0;
  for (const auto& [order, mult] : g.order_statistics().entries)
    sum += BigInt(static_cast<unsigned long>(order)) * static_cast<unsigned long>(mult);
  return sum;
}

inline FactoredInteger rho(const PermGroup& g) {
  FactoredInteger prod;
  for (const auto& [order, mult] : g.order_statistics().entries)
    prod *= factorize(order).pow(BigInt(static_cast<unsigned long>(mult)));
  return prod;
}

inline BigRational psi_dd(const PermGroup& g) {
  BigInt n(static_cast<unsigned long>(g.order()));
  return make_rational(psi(g), n * n);
}

inline FactoredReal ell(const PermGroup& g) {
  BigInt n(static_cast<unsigned long>(g.order()));
  return FactoredReal::root_of(rho(g), n) / FactoredReal::from_integer(factorize(g.order()));
}

// (arithmetic mean, geometric mean) of the element orders:
// psi(G)/|G| and rho(G)^{1/|G|}.  AM >= GM holds exactly, with equality only
// when every element order is the same (the trivial group).
struct MeanPair {
  BigRational arithmetic;
  FactoredReal geometric;
};

inline MeanPair mean_checks(const PermGroup& g) {
  BigInt n(static_cast<unsigned long>(g.order()));
  return {make_rational(psi(g), n), FactoredReal::root_of(rho(g), n)};
}

struct InvariantBundle {
  FactoredInteger order;
  BigInt psi;
  FactoredInteger rho;
  BigRational psi_dd;
  FactoredReal ell;
};

inline InvariantBundle invariant_bundle(const PermGroup& g) {
  InvariantBundle b;
  b.order = factorize(g.order());
  b.psi = psi(g);
  b.rho = rho(g);
  BigInt n(static_cast<unsigned long>(g.order()));
  b.psi_dd = make_rational(b.psi, n * n);
  b.ell = FactoredReal::root_of(b.rho, n) / FactoredReal::from_integer(b.order);
  return b;
}

// The one delicate mixed comparison, routed through a single helper:
// compares ell(G) (factored real) against psi_dd(G) (rational) exactly.
inline std::strong_ordering compare_ell_vs_rational(const FactoredReal& ell_value,
                                                    const BigRational& rational_value,
                                                    std::size_t bit_budget = kDefaultBitBudget) {
  return compare_with_rational(ell_value, rational_value, bit_budget);
}

}  // namespace ordmean

#pragma once

// Closed forms for the mean functions on the families where they are known
// exactly.  Nothing here enumerates a group; separate bridge tests check each
// formula against enumeration, which is the point of having both routes.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "exact.hpp"
#include "group.hpp"
#include "invariants.hpp"

namespace ordmean {

namespace detail {

inline void require_odd_prime(std::uint64_t p, const char* who) {
  if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
    throw std::invalid_argument(std::string(who) + ": p must be an odd prime");
}

}  // namespace detail

// l(D_2p) = 2^(-1/2) * p^(-(p+1)/(2p)) for odd primes p.
inline FactoredReal l_dihedral_2p(std::uint64_t p) {
  detail::require_odd_prime(p, "l_dihedral_2p");
  FactoredReal v;
  v.set_exponent(2, make_rational(-1, 2));
  v.set_exponent(static_cast<std::int64_t>(p),
                 make_rational(-BigInt(static_cast<unsigned long>(p + 1)),
                               BigInt(2) * static_cast<unsigned long>(p)));
  return v;
}

// psi''(D_2p) = (p^2 + p + 1) / (4 p^2) for odd primes p.
inline BigRational psi_dd_dihedral_2p(std::uint64_t p) {
  detail::require_odd_prime(p, "psi_dd_dihedral_2p");
  BigInt pz(static_cast<unsigned long>(p));
  return make_rational(pz * pz + pz + 1, BigInt(4) * pz * pz);
}

// Exact values for a cyclic p-group of order p^n, together with the
// bracketing bounds p^(-1/(p-1)) <= l <= p^(-1/p).
struct CyclicPPowForms {
  BigRational psi_dd;      // (p^{2n+1} + 1) / (p^{2n+1} + p^{2n})
  FactoredReal ell;        // p^(-(p^n - 1)/(p^n (p-1)))
  FactoredReal lower;      // p^(-1/(p-1))
  FactoredReal upper;      // p^(-1/p)
};

inline CyclicPPowForms cyclic_ppow_forms(std::uint64_t p, std::uint64_t n) {
  if (p < 2 || !is_prime_u64(p)) throw std::invalid_argument("cyclic_ppow_forms: p must be prime");
  if (n < 1) throw std::invalid_argument("cyclic_ppow_forms: n must be >= 1");
  BigInt pz(static_cast<unsigned long>(p));
  BigInt p_n, p_2n1;
  mpz_pow_ui(p_n.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(p_2n1.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(2 * n + 1));

  CyclicPPowForms f;
  f.psi_dd = make_rational(p_2n1 + 1, p_2n1 + p_2n1 / pz);
  f.ell.set_exponent(static_cast<std::int64_t>(p), make_rational(-(p_n - 1), p_n * (pz - 1)));
  f.lower.set_exponent(static_cast<std::int64_t>(p), make_rational(-1, pz - 1));
  f.upper.set_exponent(static_cast<std::int64_t>(p), make_rational(-1, pz));
  return f;
}

// theta_p(x) = p^((-1 + p - p x) / (p x)), the factor relating l of a split
// extension C_p : H (with C_G(P) = P) to l(H).
inline FactoredReal theta(std::uint64_t p, const BigRational& x) {
  detail::require_odd_prime(p, "theta");
  if (sgn(x) <= 0) throw std::invalid_argument("theta: x must be > 0");
  BigRational pq(BigInt(static_cast<unsigned long>(p)));
  BigRational e = (BigRational(-1) + pq - pq * x) / (pq * x);
  FactoredReal v;
  v.set_exponent(static_cast<std::int64_t>(p), e);
  return v;
}

// l and rho of G = C_p : H with P in Syl_p(G), P normal, C_G(P) = P:
//   l(G)   = theta_p(|H|) * l(H),
//   rho(G) = p^(p-1) * rho(H)^p.
struct SemidirectForms {
  FactoredReal ell;
  FactoredInteger rho;
};

inline SemidirectForms l_semidirect(std::uint64_t p, const PermGroup& h) {
  detail::require_odd_prime(p, "l_semidirect");
  std::uint64_t hn = h.order();
  if (hn <= 1) throw std::invalid_argument("l_semidirect: |H| must be > 1");
  if (hn % p == 0) throw std::invalid_argument("l_semidirect: |H| must be coprime to p");
  SemidirectForms f;
  f.ell = theta(p, BigRational(static_cast<unsigned long>(hn))) * ell(h);
  FactoredInteger pp;
  pp.set_exponent(static_cast<std::int64_t>(p), BigInt(static_cast<unsigned long>(p - 1)));
  f.rho = pp * rho(h).pow(BigInt(static_cast<unsigned long>(p)));
  return f;
}

// l and psi'' of C_n via multiplicativity over the coprime prime-power parts.
inline FactoredReal l_cyclic(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("l_cyclic: n must be >= 1");
  FactoredReal v;
  const FactoredInteger f = factorize(n);
  for (const auto& [p, e] : f.exponents())
    v *= cyclic_ppow_forms(static_cast<std::uint64_t>(p), e.get_ui()).ell;
  return v;
}

inline BigRational psi_dd_cyclic(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("psi_dd_cyclic: n must be >= 1");
  BigRational v(1);
  const FactoredInteger f = factorize(n);
  for (const auto& [p, e] : f.exponents())
    v *= cyclic_ppow_forms(static_cast<std::uint64_t>(p), e.get_ui()).psi_dd;
  return v;
}

// Bounds for the p'-core that drive the small-prime structure results:
//   psi''(O_p'(G)) > (p^2+p+1) / (4 (p^2-p+1))   and
//   l(O_p'(G))     > 2^(-1/2) * p^((1-p)/(2p))
// whenever f(G) > f(D_2p).
struct TheoremCConstants {
  BigRational psi_dd_quotient_bound;
  FactoredReal ell_quotient_bound;
};

inline TheoremCConstants theorem_c_constants(std::uint64_t p) {
  detail::require_odd_prime(p, "theorem_c_constants");
  BigInt pz(static_cast<unsigned long>(p));
  TheoremCConstants c;
  c.psi_dd_quotient_bound = make_rational(pz * pz + pz + 1, BigInt(4) * (pz * pz - pz + 1));
  c.ell_quotient_bound.set_exponent(2, make_rational(-1, 2));
  c.ell_quotient_bound.set_exponent(static_cast<std::int64_t>(p),
                                    make_rational(1 - pz, BigInt(2) * pz));
  return c;
}

// l(D_2p) and psi''(D_2p) for all odd primes up to the bound, ascending.
struct ThresholdRow {
  std::uint64_t p;
  FactoredReal l_d2p;
  BigRational psi_dd_d2p;
};

inline const std::vector<ThresholdRow>& threshold_table_to_200() {
  static const std::vector<ThresholdRow> table = [] {
    std::vector<ThresholdRow> rows;
    for (std::uint64_t p = 3; p <= 200; p += 2)
      if (is_prime_u64(p)) rows.push_back({p, l_dihedral_2p(p), psi_dd_dihedral_2p(p)});
    return rows;
  }();
  return table;
}

inline ThresholdRow threshold_row(std::uint64_t p) {
  if (p <= 200) {
    for (const auto& row : threshold_table_to_200())
      if (row.p == p) return row;
    detail::require_odd_prime(p, "threshold_row");
  }
  return {p, l_dihedral_2p(p), psi_dd_dihedral_2p(p)};
}

}  // namespace ordmean

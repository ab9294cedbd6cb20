#pragma once

// Constructors for the group families the toolkit works with: cyclic,
// dihedral, symmetric, alternating, the quaternion group, and the metacyclic
// groups C_p : C_q realized as affine maps on Z_p.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "exact.hpp"
#include "group.hpp"
#include "perm.hpp"

namespace ordmean {

inline PermGroup trivial_group(std::uint64_t cap = kDefaultElementCap) {
  return PermGroup(1, {Permutation(1)}, cap);
}

inline PermGroup cyclic(std::uint64_t n, std::uint64_t cap = kDefaultElementCap) {
  if (n == 0) throw std::invalid_argument("cyclic: n must be >= 1");
  if (n == 1) return trivial_group(cap);
  std::vector<std::uint32_t> cycle(n);
  for (std::uint32_t i = 0; i < n; ++i) cycle[i] = i;
  return PermGroup(static_cast<std::uint32_t>(n),
                   {Permutation::from_cycle(static_cast<std::uint32_t>(n), cycle)}, cap);
}

// dihedral(order) is the dihedral group OF ORDER `order` (the paper's D_2n
// convention): order = 2 gives C2, order = 4 the Klein group, order = 2n with
// n >= 3 the symmetries of the n-gon.
inline PermGroup dihedral(std::uint64_t order, std::uint64_t cap = kDefaultElementCap) {
  if (order < 2 || order % 2 != 0) throw std::invalid_argument("dihedral: order must be even and >= 2");
  std::uint64_t n = order / 2;
  if (n == 1) return cyclic(2, cap);
  if (n == 2)
    return PermGroup(4,
                     {Permutation::from_cycle(4, {0, 1}), Permutation::from_cycle(4, {2, 3})},
                     cap);
  std::uint32_t deg = static_cast<std::uint32_t>(n);
  std::vector<std::uint32_t> rot(n);
  for (std::uint32_t i = 0; i < n; ++i) rot[i] = i;
  std::vector<std::uint32_t> refl(n);
  for (std::uint32_t i = 0; i < n; ++i) refl[i] = static_cast<std::uint32_t>((n - i) % n);
  return PermGroup(deg, {Permutation::from_cycle(deg, rot), Permutation::from_images(refl)}, cap);
}

inline PermGroup symmetric(std::uint64_t n, std::uint64_t cap = kDefaultElementCap) {
  if (n == 0) throw std::invalid_argument("symmetric: n must be >= 1");
  if (n == 1) return trivial_group(cap);
  std::uint32_t deg = static_cast<std::uint32_t>(n);
  if (n == 2) return PermGroup(2, {Permutation::from_cycle(2, {0, 1})}, cap);
  std::vector<std::uint32_t> full(n);
  for (std::uint32_t i = 0; i < n; ++i) full[i] = i;
  return PermGroup(deg,
                   {Permutation::from_cycle(deg, {0, 1}), Permutation::from_cycle(deg, full)}, cap);
}

inline PermGroup alternating(std::uint64_t n, std::uint64_t cap = kDefaultElementCap) {
  if (n == 0) throw std::invalid_argument("alternating: n must be >= 1");
  if (n <= 2) return trivial_group(cap);
  std::uint32_t deg = static_cast<std::uint32_t>(n);
  if (n == 3) return PermGroup(3, {Permutation::from_cycle(3, {0, 1, 2})}, cap);
  // (0 1 2) together with an even long cycle: the full cycle when n is odd,
  // the (n-1)-cycle on {1, ..., n-1} when n is even.
  std::vector<std::uint32_t> longcycle;
  for (std::uint32_t i = (n % 2 == 0) ? 1 : 0; i < n; ++i) longcycle.push_back(i);
  return PermGroup(deg,
                   {Permutation::from_cycle(deg, {0, 1, 2}), Permutation::from_cycle(deg, longcycle)},
                   cap);
}

// Right-regular representation of Q8 on the points
// 0:+1 1:-1 2:+i 3:-i 4:+j 5:-j 6:+k 7:-k.
inline PermGroup quaternion8(std::uint64_t cap = kDefaultElementCap) {
  Permutation mul_i = Permutation::from_images({2, 3, 1, 0, 7, 6, 4, 5});
  Permutation mul_j = Permutation::from_images({4, 5, 6, 7, 1, 0, 3, 2});
  return PermGroup(8, {mul_i, mul_j}, cap);
}

namespace detail {

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) r = (r * base) % mod;
    base = (base * base) % mod;
    exp >>= 1;
  }
  return r;
}

inline std::uint64_t multiplicative_order(std::uint64_t r, std::uint64_t p) {
  std::uint64_t x = r % p, ord = 1;
  while (x != 1) {
    x = (x * r) % p;
    if (++ord > p) throw std::logic_error("multiplicative_order: not invertible");
  }
  return ord;
}

}  // namespace detail

// Metacyclic group C_p : C_q of order p*q, realized as the affine maps
// x -> a*x + b on Z_p with a ranging over the order-q subgroup generated by r.
// Requires p an odd prime, q | p-1, q > 1 and r of multiplicative order
// exactly q mod p; r = 0 picks the smallest valid residue, so outputs are
// reproducible across runs.
inline PermGroup metacyclic(std::uint64_t p, std::uint64_t q, std::uint64_t r = 0,
                            std::uint64_t cap = kDefaultElementCap) {
  if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
    throw std::invalid_argument("metacyclic: p must be an odd prime");
  if (q < 2 || (p - 1) % q != 0)
    throw std::invalid_argument("metacyclic: q must divide p-1 and be > 1");
  if (r == 0) {
    for (std::uint64_t c = 2; c < p; ++c)
      if (detail::multiplicative_order(c, p) == q) {
        r = c;
        break;
      }
    if (r == 0) throw std::logic_error("metacyclic: no residue of the requested order");
  } else {
    if (r % p <= 1 || detail::multiplicative_order(r % p, p) != q)
      throw std::invalid_argument("metacyclic: r must have multiplicative order exactly q mod p");
    r %= p;
  }
  std::uint32_t deg = static_cast<std::uint32_t>(p);
  std::vector<std::uint32_t> shift(p), mult(p);
  for (std::uint64_t x = 0; x < p; ++x) {
    shift[x] = static_cast<std::uint32_t>((x + 1) % p);
    mult[x] = static_cast<std::uint32_t>((x * r) % p);
  }
  return PermGroup(deg, {Permutation::from_images(shift), Permutation::from_images(mult)}, cap);
}

}  // namespace ordmean

#pragma once

// Exact arithmetic for multiplicative invariants of finite groups:
//  - FactoredInteger: positive integer as a map prime -> exponent,
//  - FactoredReal:    positive real  as a map prime -> rational exponent,
//  - exact total-order comparison that never touches floating point.
//
// Values such as the product of element orders of even a modest group do not
// fit any fixed-width integer, but their prime exponents stay tiny; everything
// downstream (geometric means, threshold comparisons) only needs exponents.

#include <gmpxx.h>

#include <cstdint>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ordmean {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Comparisons clear rational exponents into big-integer powers; this caps the
// size of the comparands (estimated in bits) before they are materialised.
inline constexpr std::size_t kDefaultBitBudget = std::size_t{1} << 20;

class BitBudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline BigRational make_rational(BigInt num, BigInt den) {
  if (sgn(den) == 0) throw std::invalid_argument("make_rational: zero denominator");
  BigRational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

namespace detail {

inline std::string exponent_text(const BigInt& num, const BigInt& den) {
  if (den == 1) {
    if (num >= 0) return num.get_str();
    return "(" + num.get_str() + ")";
  }
  return "(" + num.get_str() + "/" + den.get_str() + ")";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// FactoredInteger: \prod p^{e_p} with integer exponents e_p > 0; {} is 1.
// ---------------------------------------------------------------------------

class FactoredInteger {
public:
  FactoredInteger() = default;

  static FactoredInteger one() { return FactoredInteger{}; }

  const std::map<std::int64_t, BigInt>& exponents() const { return exp_; }
  bool is_one() const { return exp_.empty(); }

  BigInt exponent_of(std::int64_t p) const {
    auto it = exp_.find(p);
    return it == exp_.end() ? BigInt(0) : it->second;
  }

  // Zero exponents are erased so the representation stays canonical.
  void set_exponent(std::int64_t p, BigInt e) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
      throw std::invalid_argument("FactoredInteger: key must be prime");
    if (sgn(e) < 0)
      throw std::invalid_argument("FactoredInteger: exponent must be >= 0");
    if (sgn(e) == 0)
      exp_.erase(p);
    else
      exp_[p] = std::move(e);
  }

  FactoredInteger& operator*=(const FactoredInteger& rhs) {
    for (const auto& [p, e] : rhs.exp_) {
      auto [it, inserted] = exp_.emplace(p, e);
      if (!inserted) it->second += e;
    }
    return *this;
  }

  friend FactoredInteger operator*(FactoredInteger a, const FactoredInteger& b) {
    a *= b;
    return a;
  }

  FactoredInteger pow(const BigInt& k) const {
    if (sgn(k) < 0) throw std::invalid_argument("FactoredInteger::pow: negative exponent");
    FactoredInteger r;
    if (sgn(k) == 0) return r;
    for (const auto& [p, e] : exp_) r.exp_[p] = e * k;
    return r;
  }

  std::string to_text() const {
    if (exp_.empty()) return "1";
    std::string s;
    for (const auto& [p, e] : exp_) {
      if (!s.empty()) s += " * ";
      s += std::to_string(p) + "^" + detail::exponent_text(e, BigInt(1));
    }
    return s;
  }

  bool operator==(const FactoredInteger&) const = default;

private:
  std::map<std::int64_t, BigInt> exp_;
};

// Trial division; group orders at desk scale keep this cheap.
inline FactoredInteger factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
  FactoredInteger f;
  std::uint64_t m = n;
  for (std::uint64_t d = 2; d * d <= m; d == 2 ? d = 3 : d += 2) {
    if (m % d != 0) continue;
    BigInt e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    f.set_exponent(static_cast<std::int64_t>(d), e);
  }
  if (m > 1) f.set_exponent(static_cast<std::int64_t>(m), BigInt(1));
  return f;
}

// ---------------------------------------------------------------------------
// FactoredReal: \prod p^{e_p} with rational exponents e_p != 0; {} is 1.
// Distinct exponent maps always denote distinct reals (unique factorization),
// so structural equality is value equality.
// ---------------------------------------------------------------------------

class FactoredReal {
public:
  FactoredReal() = default;

  static FactoredReal one() { return FactoredReal{}; }

  static FactoredReal from_integer(const FactoredInteger& f) {
    FactoredReal r;
    for (const auto& [p, e] : f.exponents()) r.exp_[p] = BigRational(e);
    return r;
  }

  // f^{1/root}: each exponent divided exactly as a rational.
  static FactoredReal root_of(const FactoredInteger& f, const BigInt& root) {
    if (sgn(root) <= 0) throw std::invalid_argument("FactoredReal::root_of: root must be >= 1");
    FactoredReal r;
    for (const auto& [p, e] : f.exponents()) r.exp_[p] = make_rational(e, root);
    return r;
  }

  const std::map<std::int64_t, BigRational>& exponents() const { return exp_; }
  bool is_one() const { return exp_.empty(); }

  BigRational exponent_of(std::int64_t p) const {
    auto it = exp_.find(p);
    return it == exp_.end() ? BigRational(0) : it->second;
  }

  void set_exponent(std::int64_t p, BigRational e) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
      throw std::invalid_argument("FactoredReal: key must be prime");
    if (sgn(e) == 0)
      exp_.erase(p);
    else
      exp_[p] = std::move(e);
  }

  FactoredReal& operator*=(const FactoredReal& rhs) {
    for (const auto& [p, e] : rhs.exp_) {
      auto it = exp_.find(p);
      if (it == exp_.end()) {
        exp_.emplace(p, e);
      } else {
        it->second += e;
        if (sgn(it->second) == 0) exp_.erase(it);
      }
    }
    return *this;
  }

  FactoredReal& operator/=(const FactoredReal& rhs) { return *this *= rhs.pow(BigRational(-1)); }

  friend FactoredReal operator*(FactoredReal a, const FactoredReal& b) { return a *= b; }
  friend FactoredReal operator/(FactoredReal a, const FactoredReal& b) { return a /= b; }

  FactoredReal pow(const BigRational& q) const {
    FactoredReal r;
    if (sgn(q) == 0) return r;
    for (const auto& [p, e] : exp_) r.exp_[p] = e * q;
    return r;
  }

  // Canonical text form: factors sorted by prime, e.g. "2^(-1/2) * 3^(-2/3)".
  std::string to_text() const {
    if (exp_.empty()) return "1";
    std::string s;
    for (const auto& [p, e] : exp_) {
      if (!s.empty()) s += " * ";
      s += std::to_string(p) + "^" + detail::exponent_text(e.get_num(), e.get_den());
    }
    return s;
  }

  bool operator==(const FactoredReal&) const = default;

private:
  std::map<std::int64_t, BigRational> exp_;
};

namespace detail {

struct ClearedExponents {
  BigInt common_den;                                    // D > 0
  std::vector<std::pair<std::int64_t, BigInt>> cleared; // (p, n_p = e_p * D), n_p != 0
  bool has_positive = false;
  bool has_negative = false;
};

inline ClearedExponents clear_denominators(const FactoredReal& d) {
  ClearedExponents out;
  out.common_den = 1;
  for (const auto& [p, e] : d.exponents()) {
    (void)p;
    mpz_lcm(out.common_den.get_mpz_t(), out.common_den.get_mpz_t(), e.get_den().get_mpz_t());
  }
  for (const auto& [p, e] : d.exponents()) {
    BigInt n = e.get_num() * (out.common_den / e.get_den());
    if (sgn(n) > 0) out.has_positive = true;
    if (sgn(n) < 0) out.has_negative = true;
    out.cleared.emplace_back(p, std::move(n));
  }
  return out;
}

// Upper bound in bits for the two comparands together; used only as a
// resource guard.  bits(p^n) <= ceil(n * b / 16) with b = sizeinbase(p^16, 2),
// a fixed-point bound on 16*log2(p) that overshoots by at most ~6%.
inline BigInt product_bits_estimate(const std::vector<std::pair<std::int64_t, BigInt>>& cleared) {
  BigInt bits = 0;
  for (const auto& [p, n] : cleared) {
    BigInt p16;
    mpz_ui_pow_ui(p16.get_mpz_t(), static_cast<unsigned long>(p), 16);
    unsigned long b = static_cast<unsigned long>(mpz_sizeinbase(p16.get_mpz_t(), 2));
    bits += (abs(n) * b + 15) / 16;
  }
  return bits;
}

inline unsigned long to_ulong_checked(const BigInt& n, const char* what) {
  if (!n.fits_ulong_p()) throw BitBudgetError(std::string(what) + ": exponent does not fit a machine word");
  return n.get_ui();
}

}  // namespace detail

// Exact order of the represented reals.  Contract: form d = a/b exponentwise;
// empty d means Equal; otherwise clear exponent denominators to a common D,
// obtaining integers n_p, and compare \prod_{n_p>0} p^{n_p} against
// \prod_{n_p<0} p^{-n_p} as big integers.  When every n_p has the same sign
// one side is the empty product and no powers need to be built.  If the
// comparands would exceed `bit_budget` bits (upper-bound estimate), a
// BitBudgetError is thrown instead of approximating.
inline std::strong_ordering compare(const FactoredReal& a, const FactoredReal& b,
                                    std::size_t bit_budget = kDefaultBitBudget) {
  FactoredReal d = a / b;
  if (d.is_one()) return std::strong_ordering::equal;

  auto cx = detail::clear_denominators(d);
  if (!cx.has_negative) return std::strong_ordering::greater;
  if (!cx.has_positive) return std::strong_ordering::less;

  BigInt estimate = detail::product_bits_estimate(cx.cleared);
  if (estimate > static_cast<unsigned long>(bit_budget))
    throw BitBudgetError("compare: bit budget of " + std::to_string(bit_budget) +
                         " exceeded (estimated " + estimate.get_str() + " bits)");

  BigInt lhs = 1, rhs = 1, pw;
  for (const auto& [p, n] : cx.cleared) {
    BigInt pz(static_cast<unsigned long>(p));
    unsigned long e = detail::to_ulong_checked(abs(n), "compare");
    mpz_pow_ui(pw.get_mpz_t(), pz.get_mpz_t(), e);
    (sgn(n) > 0 ? lhs : rhs) *= pw;
  }
  int c = cmp(lhs, rhs);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;  // unreachable for disjoint prime sets
}

// Exact comparison of a FactoredReal against a positive rational, by
// factorizing numerator and denominator and reusing `compare`.
inline std::strong_ordering compare_with_rational(const FactoredReal& a, const BigRational& r,
                                                  std::size_t bit_budget = kDefaultBitBudget) {
  if (sgn(r) <= 0) throw std::invalid_argument("compare_with_rational: rational must be > 0");
  const BigInt& num = r.get_num();
  const BigInt& den = r.get_den();
  if (!num.fits_ulong_p() || !den.fits_ulong_p())
    throw std::invalid_argument("compare_with_rational: rational too large to factorize");
  FactoredReal rf = FactoredReal::from_integer(factorize(num.get_ui())) /
                    FactoredReal::from_integer(factorize(den.get_ui()));
  return compare(a, rf, bit_budget);
}

// ---------------------------------------------------------------------------
// Decimal rendering.  Truncated, never rounded; the absolute error of the
// rendered value is < 10^-digits.  Comparisons never depend on this output.
// ---------------------------------------------------------------------------

struct Decimal {
  std::string text;
  int digits;  // |represented value - text| < 10^-digits
};

namespace detail {

inline std::string render_scaled(const BigInt& scaled, int digits) {
  std::string s = scaled.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return s;
}

}  // namespace detail

// floor(v * 10^digits) computed exactly: with common exponent denominator D
// and A = \prod_{n_p>0} p^{n_p}, B = \prod_{n_p<0} p^{-n_p},
//   floor(v * 10^d) = floor( floor(A * 10^{dD} / B) ^ {1/D} ).
// The inner floor is harmless because k <= x^{1/D} iff k^D <= floor(x).
inline Decimal to_decimal(const FactoredReal& v, int digits,
                          std::size_t bit_budget = kDefaultBitBudget) {
  if (digits < 1) throw std::invalid_argument("to_decimal: digits must be >= 1");
  auto cx = detail::clear_denominators(v);
  unsigned long d_ul = detail::to_ulong_checked(cx.common_den, "to_decimal");

  BigInt estimate = detail::product_bits_estimate(cx.cleared);
  estimate += BigInt(4) * static_cast<unsigned long>(digits) * cx.common_den;
  if (estimate > static_cast<unsigned long>(bit_budget))
    throw BitBudgetError("to_decimal: bit budget of " + std::to_string(bit_budget) +
                         " exceeded (estimated " + estimate.get_str() + " bits)");

  BigInt a = 1, b = 1, pw;
  for (const auto& [p, n] : cx.cleared) {
    BigInt pz(static_cast<unsigned long>(p));
    unsigned long e = detail::to_ulong_checked(abs(n), "to_decimal");
    mpz_pow_ui(pw.get_mpz_t(), pz.get_mpz_t(), e);
    (sgn(n) > 0 ? a : b) *= pw;
  }
  BigInt ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(digits) * d_ul);
  BigInt scaled_pow = (a * ten_pow) / b;  // floor
  BigInt scaled;
  mpz_root(scaled.get_mpz_t(), scaled_pow.get_mpz_t(), d_ul);
  return Decimal{detail::render_scaled(scaled, digits), digits};
}

// Truncated decimal rendering of a positive rational.
inline Decimal rational_to_decimal(const BigRational& q, int digits) {
  if (digits < 1) throw std::invalid_argument("rational_to_decimal: digits must be >= 1");
  if (sgn(q) <= 0) throw std::invalid_argument("rational_to_decimal: value must be > 0");
  BigInt ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  BigInt scaled = (q.get_num() * ten_pow) / q.get_den();  // floor
  return Decimal{detail::render_scaled(scaled, digits), digits};
}

inline std::string rational_to_text(const BigRational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace ordmean

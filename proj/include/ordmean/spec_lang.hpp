#pragma once

// Tiny spec language naming the groups the toolkit builds:
//   Expr := Atom ("x" Atom)*
//   Atom := "C"int | "D"int (even, >= 4) | "S"int | "A"int | "Q8"
//         | "F(" int "," int ["," int] ")"
// Whitespace is ignored and letters are case-insensitive.  "Dn" is the
// dihedral group of ORDER n (the D_2p convention), not of degree n.
// "F(p,q[,r])" is the metacyclic group C_p : C_q; r defaults to the smallest
// residue of multiplicative order q mod p.

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "families.hpp"
#include "group.hpp"

namespace ordmean {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

struct GroupExpr {
  enum class Kind { Cyclic, Dihedral, Symmetric, Alternating, Quaternion8, Metacyclic, Product };
  Kind kind = Kind::Cyclic;
  std::uint64_t a = 0;  // Cn/Dn/Sn/An parameter; metacyclic p
  std::uint64_t b = 0;  // metacyclic q
  std::uint64_t c = 0;  // metacyclic r, 0 = auto
  std::vector<GroupExpr> factors;  // Product only

  bool operator==(const GroupExpr&) const = default;
};

namespace detail {

class SpecParser {
public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupExpr parse() {
    GroupExpr first = parse_atom();
    skip_ws();
    if (!peek_is_x()) {
      expect_end();
      return first;
    }
    GroupExpr prod;
    prod.kind = GroupExpr::Kind::Product;
    prod.factors.push_back(std::move(first));
    while (peek_is_x()) {
      ++pos_;
      prod.factors.push_back(parse_atom());
      skip_ws();
    }
    expect_end();
    return prod;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_is_x() {
    skip_ws();
    return pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == 'X');
  }

  void expect_end() {
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
  }

  char next_letter() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("expected a group atom", pos_);
    return static_cast<char>(std::toupper(static_cast<unsigned char>(text_[pos_])));
  }

  std::uint64_t parse_uint() {
    skip_ws();
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::uint64_t d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (UINT64_MAX - d) / 10) throw ParseError("integer too large", start);
      v = v * 10 + d;
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected an integer", pos_);
    return v;
  }

  void expect_char(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  GroupExpr parse_atom() {
    char letter = next_letter();
    std::size_t at = pos_;
    GroupExpr e;
    switch (letter) {
      case 'C':
        ++pos_;
        e.kind = GroupExpr::Kind::Cyclic;
        e.a = parse_uint();
        if (e.a < 1) throw ParseError("cyclic order must be >= 1", at);
        return e;
      case 'D':
        ++pos_;
        e.kind = GroupExpr::Kind::Dihedral;
        e.a = parse_uint();
        if (e.a < 4 || e.a % 2 != 0)
          throw ParseError("dihedral order must be even and >= 4", at);
        return e;
      case 'S':
        ++pos_;
        e.kind = GroupExpr::Kind::Symmetric;
        e.a = parse_uint();
        if (e.a < 1 || e.a > 12) throw ParseError("symmetric degree out of range [1, 12]", at);
        return e;
      case 'A':
        ++pos_;
        e.kind = GroupExpr::Kind::Alternating;
        e.a = parse_uint();
        if (e.a < 1 || e.a > 12) throw ParseError("alternating degree out of range [1, 12]", at);
        return e;
      case 'Q':
        ++pos_;
        if (parse_uint() != 8) throw ParseError("only Q8 is supported", at);
        e.kind = GroupExpr::Kind::Quaternion8;
        return e;
      case 'F': {
        ++pos_;
        expect_char('(');
        e.kind = GroupExpr::Kind::Metacyclic;
        e.a = parse_uint();
        expect_char(',');
        e.b = parse_uint();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          e.c = parse_uint();
        }
        expect_char(')');
        if (e.a < 3 || e.a % 2 == 0 || !is_prime_u64(e.a))
          throw ParseError("metacyclic p must be an odd prime", at);
        if (e.b < 2 || (e.a - 1) % e.b != 0)
          throw ParseError("metacyclic q must divide p-1 and be > 1", at);
        if (e.c != 0 && (e.c % e.a <= 1 || detail::multiplicative_order(e.c % e.a, e.a) != e.b))
          throw ParseError("metacyclic r must have multiplicative order q mod p", at);
        return e;
      }
      default:
        throw ParseError("unknown group atom", pos_);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline GroupExpr parse_spec(std::string_view text) { return detail::SpecParser(text).parse(); }

inline std::string to_spec_string(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::Cyclic: return "C" + std::to_string(e.a);
    case GroupExpr::Kind::Dihedral: return "D" + std::to_string(e.a);
    case GroupExpr::Kind::Symmetric: return "S" + std::to_string(e.a);
    case GroupExpr::Kind::Alternating: return "A" + std::to_string(e.a);
    case GroupExpr::Kind::Quaternion8: return "Q8";
    case GroupExpr::Kind::Metacyclic:
      return "F(" + std::to_string(e.a) + "," + std::to_string(e.b) +
             (e.c != 0 ? "," + std::to_string(e.c) : "") + ")";
    case GroupExpr::Kind::Product: {
      std::string s;
      for (const auto& f : e.factors) {
        if (!s.empty()) s += "x";
        s += to_spec_string(f);
      }
      return s;
    }
  }
  throw std::logic_error("to_spec_string: bad kind");
}

inline std::uint64_t expr_order(const GroupExpr& e) {
  auto factorial = [](std::uint64_t n) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 2; i <= n; ++i) r *= i;
    return r;
  };
  switch (e.kind) {
    case GroupExpr::Kind::Cyclic: return e.a;
    case GroupExpr::Kind::Dihedral: return e.a;
    case GroupExpr::Kind::Symmetric: return factorial(e.a);
    case GroupExpr::Kind::Alternating: return e.a <= 2 ? 1 : factorial(e.a) / 2;
    case GroupExpr::Kind::Quaternion8: return 8;
    case GroupExpr::Kind::Metacyclic: return e.a * e.b;
    case GroupExpr::Kind::Product: {
      std::uint64_t r = 1;
      for (const auto& f : e.factors) r *= expr_order(f);
      return r;
    }
  }
  throw std::logic_error("expr_order: bad kind");
}

inline PermGroup build_group(const GroupExpr& e, std::uint64_t cap = kDefaultElementCap) {
  switch (e.kind) {
    case GroupExpr::Kind::Cyclic: return cyclic(e.a, cap);
    case GroupExpr::Kind::Dihedral: return dihedral(e.a, cap);
    case GroupExpr::Kind::Symmetric: return symmetric(e.a, cap);
    case GroupExpr::Kind::Alternating: return alternating(e.a, cap);
    case GroupExpr::Kind::Quaternion8: return quaternion8(cap);
    case GroupExpr::Kind::Metacyclic: return metacyclic(e.a, e.b, e.c, cap);
    case GroupExpr::Kind::Product: {
      if (e.factors.empty()) throw std::invalid_argument("build_group: empty product");
      PermGroup g = build_group(e.factors[0], cap);
      for (std::size_t i = 1; i < e.factors.size(); ++i)
        g = direct_product(g, build_group(e.factors[i], cap));
      return g;
    }
  }
  throw std::logic_error("build_group: bad kind");
}

}  // namespace ordmean

#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordmean {

// Permutation of {0, ..., degree-1} stored as its image array.
// Products compose left to right: (a * b)(x) = b(a(x)).
class Permutation {
  std::vector<std::uint32_t> img_;

public:
  Permutation() = default;

  explicit Permutation(std::uint32_t degree) : img_(degree) {
    for (std::uint32_t i = 0; i < degree; ++i) img_[i] = i;
  }

  static Permutation from_images(std::vector<std::uint32_t> images) {
    std::vector<bool> seen(images.size(), false);
    for (std::uint32_t v : images) {
      if (v >= images.size() || seen[v])
        throw std::invalid_argument("Permutation: image array is not a bijection");
      seen[v] = true;
    }
    Permutation p;
    p.img_ = std::move(images);
    return p;
  }

  static Permutation from_cycle(std::uint32_t degree, const std::vector<std::uint32_t>& cycle) {
    Permutation p(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      std::uint32_t from = cycle[i];
      std::uint32_t to = cycle[(i + 1) % cycle.size()];
      if (from >= degree || to >= degree) throw std::invalid_argument("Permutation: cycle point out of range");
      p.img_[from] = to;
    }
    std::vector<bool> seen(degree, false);
    for (std::uint32_t v : p.img_) {
      if (seen[v]) throw std::invalid_argument("Permutation: repeated point in cycle");
      seen[v] = true;
    }
    return p;
  }

  std::uint32_t degree() const { return static_cast<std::uint32_t>(img_.size()); }
  std::uint32_t operator[](std::uint32_t i) const { return img_[i]; }
  const std::vector<std::uint32_t>& images() const { return img_; }

  bool is_identity() const {
    for (std::uint32_t i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("Permutation: degree mismatch");
    Permutation r;
    r.img_.resize(a.degree());
    for (std::uint32_t i = 0; i < a.degree(); ++i) r.img_[i] = b.img_[a.img_[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.img_.resize(degree());
    for (std::uint32_t i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
    return r;
  }

  // Smallest k >= 1 with p^k = identity: lcm of cycle lengths.
  std::uint64_t order() const {
    std::vector<bool> seen(degree(), false);
    std::uint64_t result = 1;
    for (std::uint32_t i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (std::uint32_t j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      std::uint64_t g = std::gcd(result, len);
      unsigned __int128 l = static_cast<unsigned __int128>(result / g) * len;
      if (l > static_cast<unsigned __int128>(UINT64_MAX))
        throw std::overflow_error("Permutation::order: overflow");
      result = static_cast<std::uint64_t>(l);
    }
    return result;
  }

  auto operator<=>(const Permutation&) const = default;
};

}  // namespace ordmean

#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symspec/error.hpp"

namespace symspec {

/// Hard cap on the degree of any permutation handled by the library.
inline constexpr int kMaxDegree = 12;

using Rank = std::uint64_t;

enum class Parity { all, even, odd };

/// n! for 0 <= n <= 20.
std::uint64_t factorial(int n);

/// A permutation of {0, ..., n-1} stored as its image array.
///
/// Composition follows a(b(x)): `compose(a, b)` applies b first. I/O helpers
/// use 1-based points; storage is 0-based.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int degree);
  /// Validates that `images` is a bijection on {0..n-1}.
  static Permutation from_images(std::span<const int> images);
  /// Product of disjoint or overlapping cycles given with 0-based points, applied right to left.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
  static Permutation transposition(int degree, int a, int b);

  int degree() const { return degree_; }
  int operator()(int x) const { return images_[x]; }
  int operator[](int x) const { return images_[x]; }
  std::span<const std::uint8_t> images() const { return {images_.data(), static_cast<size_t>(degree_)}; }

  Permutation inverse() const;
  bool is_identity() const;
  int cycle_count() const;
  /// Cycle lengths sorted in weakly decreasing order.
  std::vector<int> cycle_type() const;

  /// Extends to degree `m` >= degree() by fixing the new points.
  Permutation extended(int m) const;

  bool operator==(const Permutation& o) const {
    return degree_ == o.degree_ && images_ == o.images_;
  }
  std::strong_ordering operator<=>(const Permutation& o) const;

 private:
  friend Permutation compose(const Permutation&, const Permutation&);
  friend class PermutationRange;
  std::array<std::uint8_t, kMaxDegree> images_{};
  int degree_ = 0;
};

/// (a ∘ b)(x) = a(b(x)).
Permutation compose(const Permutation& a, const Permutation& b);

int sign(const Permutation& p);

/// Lexicographic rank via the Lehmer code.
Rank rank(const Permutation& p);
Permutation unrank(Rank r, int degree);

/// Lehmer rank of a∘b from raw image arrays of length n, without building a Permutation.
inline Rank compose_rank(const std::uint8_t* a, const std::uint8_t* b, int n) {
  Rank r = 0;
  std::uint32_t used = 0;
  for (int x = 0; x < n; ++x) {
    const int v = a[b[x]];
    r = r * static_cast<Rank>(n - x) + static_cast<Rank>(v - std::popcount(used & ((1u << v) - 1)));
    used |= 1u << v;
  }
  return r;
}

/// One-line image notation with 1-based points, e.g. "3 1 2".
std::string to_string(const Permutation& p);
/// Accepts one-line notation ("3 1 2") or cycle notation ("(1 3 2)(4 5)").
/// Cycle notation needs `degree` since fixed points may be omitted.
Permutation parse_permutation(std::string_view text, int degree = 0);

/// All permutations of degree n in lexicographic order, filtered by parity.
///
/// The iterator carries the running rank and sign so dense scans never
/// recompute them.
class PermutationRange {
 public:
  PermutationRange(int degree, Parity parity);

  class iterator {
   public:
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    const Permutation& operator*() const { return current_; }
    const Permutation* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return done_; }

    Rank rank() const { return rank_; }
    int sign() const { return sign_; }

   private:
    friend class PermutationRange;
    bool advance();
    bool accept() const;
    Permutation current_;
    Rank rank_ = 0;
    int sign_ = 1;
    Parity parity_ = Parity::all;
    bool done_ = false;
  };

  iterator begin() const;
  std::default_sentinel_t end() const { return {}; }
  std::uint64_t size() const;

 private:
  int degree_;
  Parity parity_;
};

inline PermutationRange enumerate(int degree, Parity parity = Parity::all) {
  return PermutationRange(degree, parity);
}

/// Calls fn(perm, rank, sign) for every element of S_n in rank order.
template <class Fn>
void for_each_permutation(int degree, Fn&& fn) {
  for (auto it = PermutationRange(degree, Parity::all).begin(); it != std::default_sentinel; ++it) {
    fn(*it, it.rank(), it.sign());
  }
}

}  // namespace symspec

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <span>
#include <vector>

#include "areawalk/exact.hpp"

namespace areawalk {

/// An ordered tuple of positive parts. Stored in canonical form: no zero
/// parts. The zero-padded form of length `half_length()` is available
/// through `padded()`.
class Composition {
 public:
  Composition() = default;

  /// Throws InvalidArgument if any part is < 1. An empty list is accepted
  /// and represents the (degenerate) composition of 0.
  explicit Composition(std::vector<int> parts);

  /// Builds from a zero-padded list: trailing zeros are stripped, the first
  /// part must be >= 1 and no zero may precede a positive part.
  static Composition from_padded(std::span<const int> padded);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int half_length() const noexcept { return half_length_; }

  Composition reversed() const;
  std::vector<int> padded() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int half_length_ = 0;
};

/// The 2^(h-1) compositions of h in cut-set order.
///
/// Composition number `i` is decoded from the (h-1)-bit mask `i`: bit b set
/// means "cut after the (b+1)-th unit". Index 0 is (h), index 2^(h-1)-1 is
/// (1,1,...,1). For h = 3 the order is (3), (1,2), (2,1), (1,1,1).
/// h = 0 yields an empty range. The range is a value type and can be split
/// by index for parallel consumption.
class Compositions {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Composition*;
    using reference = const Composition&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.index_ == b.index_;
    }

   private:
    friend class Compositions;
    iterator(int h, std::uint64_t index, std::uint64_t end);

    int h_ = 0;
    std::uint64_t index_ = 0;
    std::uint64_t end_ = 0;
    Composition current_;
  };

  explicit Compositions(int h);

  std::uint64_t size() const noexcept { return count_; }
  int half_length() const noexcept { return h_; }
  Composition operator[](std::uint64_t index) const;
  iterator begin() const { return {h_, 0, count_}; }
  iterator end() const { return {h_, count_, count_}; }

 private:
  int h_;
  std::uint64_t count_;
};

/// Convenience wrapper for `Compositions(h)`; throws InvalidArgument for
/// h < 0 or h > 63.
inline Compositions compositions(int h) { return Compositions(h); }

/// Decodes the composition of h encoded by cut mask `mask`.
Composition composition_from_mask(int h, std::uint64_t mask);

/// binom(n, k), zero when k < 0, k > n or n < 0. Generalized binomials with
/// negative upper argument are never needed here and are not provided.
BigCount binomial(int n, int k);

/// Table-backed 64-bit binomial for 0 <= n <= 66 (zero-extended like
/// `binomial`). Throws InvalidArgument if n > 66.
std::int64_t binomial_i64(int n, int k);

BigCount factorial(int n);

/// (sum m)! / prod(m_i!) for non-negative entries.
BigCount multinomial(std::span<const int> multiplicities);

/// c(l_1, ..., l_j): the weight of the composition's term in the order-q
/// reduction. For j = 1 this is 1/l_1; otherwise
///   binom(l1+l2, l1)/(l1+l2) * prod_{i=2}^{j-1} l_i binom(l_i+l_{i+1}, l_i)/(l_i+l_{i+1}).
/// Mirror symmetric. Throws InvalidArgument("empty composition").
BigRatio composition_coefficient(const Composition& c);

/// Sum of composition_coefficient over all compositions of h
/// (equals binom(2h, h) / (2h)).
BigRatio coefficient_sum(int h);

enum class MirrorClass { palindromic, mirror_pair };

MirrorClass classify_composition(const Composition& c);

/// Number of palindromic compositions of h: 2^floor(h/2).
std::uint64_t palindromic_count(int h);

/// Number of classes of compositions of h under reversal:
/// (2^(h-1) + 2^floor(h/2)) / 2.
std::uint64_t mirror_free_count(int h);

/// Calls `visit(mult)` for every vector mult = (m_1, ..., m_max_part) of
/// non-negative integers with sum_i i * m_i == target. Nothing is visited
/// when target < 0; the zero vector is visited once when target == 0.
void for_each_multiplicity_vector(int target, int max_part,
                                  const std::function<void(std::span<const int>)>& visit);

}  // namespace areawalk

#include "areawalk/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace areawalk {

BigCount parse_count(const std::string& text) {
  if (text.empty()) throw InvalidArgument("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size() ||
      !std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start), text.end(),
                   [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw InvalidArgument("not a decimal integer: '" + text + "'");
  }
  return BigCount(text);
}

BigCount require_integral(const BigRatio& r, const char* what) {
  if (boost::multiprecision::denominator(r) != 1) {
    throw InvariantViolation(std::string("non-integral ") + what + ": " + to_string(r));
  }
  return boost::multiprecision::numerator(r);
}

// ---------------------------------------------------------------------------
// Composition

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw InvalidArgument("composition parts must be >= 1");
  }
  half_length_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::from_padded(std::span<const int> padded) {
  std::size_t len = padded.size();
  while (len > 0 && padded[len - 1] == 0) --len;
  std::vector<int> parts(padded.begin(), padded.begin() + static_cast<std::ptrdiff_t>(len));
  if (!parts.empty() && parts.front() < 1) {
    throw InvalidArgument("first part of a composition must be >= 1");
  }
  return Composition(std::move(parts));
}

Composition Composition::reversed() const {
  std::vector<int> r(parts_.rbegin(), parts_.rend());
  return Composition(std::move(r));
}

std::vector<int> Composition::padded() const {
  std::vector<int> out(parts_);
  out.resize(static_cast<std::size_t>(std::max(half_length_, 0)), 0);
  return out;
}

// ---------------------------------------------------------------------------
// Compositions

Composition composition_from_mask(int h, std::uint64_t mask) {
  if (h <= 0) return Composition();
  std::vector<int> parts;
  int run = 1;
  for (int b = 0; b < h - 1; ++b) {
    if ((mask >> b) & 1U) {
      parts.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  parts.push_back(run);
  return Composition(std::move(parts));
}

Compositions::Compositions(int h) : h_(h) {
  if (h < 0 || h > 63) throw InvalidArgument("composition size must be in [0, 63]");
  count_ = h == 0 ? 0 : (std::uint64_t{1} << (h - 1));
}

Composition Compositions::operator[](std::uint64_t index) const {
  if (index >= count_) throw InvalidArgument("composition index out of range");
  return composition_from_mask(h_, index);
}

Compositions::iterator::iterator(int h, std::uint64_t index, std::uint64_t end)
    : h_(h), index_(index), end_(end) {
  if (index_ < end_) current_ = composition_from_mask(h_, index_);
}

Compositions::iterator& Compositions::iterator::operator++() {
  ++index_;
  if (index_ < end_) current_ = composition_from_mask(h_, index_);
  return *this;
}

// ---------------------------------------------------------------------------
// Binomials

namespace {

constexpr int kMaxTableN = 66;

struct PascalTable {
  std::array<std::array<std::int64_t, kMaxTableN + 1>, kMaxTableN + 1> rows{};
  PascalTable() {
    for (int n = 0; n <= kMaxTableN; ++n) {
      rows[n][0] = 1;
      for (int k = 1; k <= n; ++k) {
        // binom(66, 33) < 2^63; no overflow anywhere in the table.
        rows[n][k] = rows[n - 1][k - 1] + (k <= n - 1 ? rows[n - 1][k] : 0);
      }
    }
  }
};

const PascalTable& pascal() {
  static const PascalTable table;
  return table;
}

}  // namespace

std::int64_t binomial_i64(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n > kMaxTableN) throw InvalidArgument("binomial_i64: n exceeds 66");
  return pascal().rows[n][k];
}

BigCount binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n <= kMaxTableN) return pascal().rows[n][k];
  k = std::min(k, n - k);
  BigCount r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigCount factorial(int n) {
  if (n < 0) throw InvalidArgument("factorial of a negative number");
  BigCount r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigCount multinomial(std::span<const int> multiplicities) {
  int total = 0;
  BigCount denom = 1;
  for (int m : multiplicities) {
    if (m < 0) throw InvalidArgument("multinomial: negative multiplicity");
    total += m;
    denom *= factorial(m);
  }
  return factorial(total) / denom;
}

// ---------------------------------------------------------------------------
// Composition coefficients

BigRatio composition_coefficient(const Composition& c) {
  if (c.empty()) throw InvalidArgument("empty composition");
  const auto& l = c.parts();
  if (l.size() == 1) return BigRatio(1, l[0]);

  // Leading block. Blocks involving padded zeros collapse to 1 and are
  // therefore omitted; on the canonical form that is exactly the final block.
  BigRatio r(binomial(l[0] + l[1], l[0]), l[0] + l[1]);
  for (std::size_t i = 1; i + 1 < l.size(); ++i) {
    r *= BigRatio(BigCount(l[i]) * binomial(l[i] + l[i + 1], l[i]), l[i] + l[i + 1]);
  }
  return r;
}

BigRatio coefficient_sum(int h) {
  if (h < 1) throw InvalidArgument("coefficient_sum requires h >= 1");
  BigRatio sum = 0;
  for (const auto& c : compositions(h)) sum += composition_coefficient(c);
  return sum;
}

MirrorClass classify_composition(const Composition& c) {
  const auto& p = c.parts();
  return std::equal(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(p.size() / 2), p.rbegin())
             ? MirrorClass::palindromic
             : MirrorClass::mirror_pair;
}

std::uint64_t palindromic_count(int h) {
  if (h < 1 || h > 63) throw InvalidArgument("palindromic_count requires 1 <= h <= 63");
  return std::uint64_t{1} << (h / 2);
}

std::uint64_t mirror_free_count(int h) {
  if (h < 1 || h > 63) throw InvalidArgument("mirror_free_count requires 1 <= h <= 63");
  return ((std::uint64_t{1} << (h - 1)) + palindromic_count(h)) / 2;
}

// ---------------------------------------------------------------------------

namespace {

void visit_multiplicities(int remaining, int part, std::vector<int>& mult,
                          const std::function<void(std::span<const int>)>& visit) {
  if (part == 0) {
    if (remaining == 0) visit(mult);
    return;
  }
  for (int m = 0; m * part <= remaining; ++m) {
    mult[static_cast<std::size_t>(part - 1)] = m;
    visit_multiplicities(remaining - m * part, part - 1, mult, visit);
  }
  mult[static_cast<std::size_t>(part - 1)] = 0;
}

}  // namespace

void for_each_multiplicity_vector(int target, int max_part,
                                  const std::function<void(std::span<const int>)>& visit) {
  if (target < 0) return;
  if (max_part < 0) throw InvalidArgument("max_part must be >= 0");
  std::vector<int> mult(static_cast<std::size_t>(max_part), 0);
  visit_multiplicities(target, max_part, mult, visit);
}

}  // namespace areawalk

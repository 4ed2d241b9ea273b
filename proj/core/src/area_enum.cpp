#include "areawalk/area_enum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <thread>

namespace areawalk {

// ---------------------------------------------------------------------------
// AreaDistribution / LaurentPolynomial

BigCount AreaDistribution::at(int area) const {
  auto it = counts.find(area);
  return it == counts.end() ? BigCount(0) : it->second;
}

BigCount AreaDistribution::total() const {
  BigCount s = 0;
  for (const auto& [a, v] : counts) s += v;
  return s;
}

int AreaDistribution::max_abs_area() const {
  int m = 0;
  for (const auto& [a, v] : counts) m = std::max(m, std::abs(a));
  return m;
}

bool AreaDistribution::is_symmetric() const {
  return std::all_of(counts.begin(), counts.end(),
                     [this](const auto& kv) { return at(-kv.first) == kv.second; });
}

void AreaDistribution::add(int area, const BigCount& value) {
  if (value == 0) return;
  auto [it, inserted] = counts.try_emplace(area, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) counts.erase(it);
  }
}

BigCount LaurentPolynomial::at(int exponent) const {
  auto it = coeffs.find(exponent);
  return it == coeffs.end() ? BigCount(0) : it->second;
}

BigCount LaurentPolynomial::evaluate_at_one() const {
  BigCount s = 0;
  for (const auto& [e, v] : coeffs) s += v;
  return s;
}

std::complex<double> LaurentPolynomial::evaluate(std::complex<double> x) const {
  std::complex<double> s = 0;
  for (const auto& [e, v] : coeffs) s += to_double(v) * std::pow(x, e);
  return s;
}

// ---------------------------------------------------------------------------
// k weights

long k_shift(int i, int j, std::span<const long> k) {
  if (j < 1 || i < 1 || i > j) throw InvalidArgument("k_shift: block index out of range");
  if (static_cast<int>(k.size()) != std::max(j - 2, 0)) {
    throw InvalidArgument("k_shift: expected j-2 summation variables");
  }
  auto var = [&](int r) -> long { return (r >= 3 && r <= j) ? k[static_cast<std::size_t>(r - 3)] : 0; };
  long s = 0;
  for (int r = std::max(i, 3); r <= j; ++r) s -= var(r);
  s += static_cast<long>(i - 1) * var(2 * i - 2);
  s += static_cast<long>(2 * i - 1) * var(2 * i - 1);
  s += static_cast<long>(i) * var(2 * i);
  return s;
}

KWeightMatrix::KWeightMatrix(int j) : j_(j) {
  if (j < 2) throw InvalidArgument("KWeightMatrix needs at least two blocks");
  std::vector<long> unit(static_cast<std::size_t>(j - 2), 0);
  for (int r = 3; r <= j; ++r) {
    std::fill(unit.begin(), unit.end(), 0);
    unit[static_cast<std::size_t>(r - 3)] = 1;
    std::vector<int> row(static_cast<std::size_t>(j));
    for (int i = 1; i <= j; ++i) row[static_cast<std::size_t>(i - 1)] = static_cast<int>(k_shift(i, j, unit));
    rows_.push_back(std::move(row));
  }
}

const std::vector<int>& KWeightMatrix::row(int r) const {
  if (r < 3 || r > j_) throw InvalidArgument("KWeightMatrix: row index out of range");
  return rows_[static_cast<std::size_t>(r - 3)];
}

int KWeightMatrix::weight(int r, int i) const {
  if (i < 1 || i > j_) throw InvalidArgument("KWeightMatrix: block index out of range");
  return row(r)[static_cast<std::size_t>(i - 1)];
}

int KWeightMatrix::area_sign(int i) const {
  if (i < 1 || i > j_) throw InvalidArgument("KWeightMatrix: block index out of range");
  return (i == j_ - 1 ? 1 : 0) - (i == j_ ? 1 : 0);
}

// ---------------------------------------------------------------------------
// Block products

namespace {

constexpr int kMaxTotalParts = 33;  // binom(66, 33) is the largest table entry

int checked_total(std::span<const int> parts) {
  if (parts.empty()) throw InvalidArgument("empty composition");
  int total = 0;
  for (int l : parts) {
    if (l < 0) throw InvalidArgument("block exponents must be >= 0");
    total += l;
  }
  if (total > kMaxTotalParts) throw InvalidArgument("block exponents sum beyond 33");
  return total;
}

// Visits every (k_3..k_j) with k_i in [0, 2 l_i], passing the offsets
// S1 = sum (i-2)(k_i-l_i), S2 = sum (i-1)(k_i-l_i) and the k vector.
template <typename Visit>
void for_each_tail(std::span<const int> parts, Visit&& visit) {
  const std::size_t j = parts.size();
  std::vector<int> k(j > 2 ? j - 2 : 0, 0);
  while (true) {
    long s1 = 0;
    long s2 = 0;
    for (std::size_t t = 0; t < k.size(); ++t) {
      const long block = static_cast<long>(t) + 3;  // 1-based block index
      const long dev = k[t] - parts[t + 2];
      s1 += (block - 2) * dev;
      s2 += (block - 1) * dev;
    }
    visit(s1, s2, std::span<const int>(k));
    // odometer
    std::size_t pos = 0;
    while (pos < k.size()) {
      if (k[pos] < 2 * parts[pos + 2]) {
        ++k[pos];
        break;
      }
      k[pos] = 0;
      ++pos;
    }
    if (pos == k.size()) return;
  }
}

}  // namespace

std::map<int, std::int64_t> block_product_expansion(std::span<const int> parts) {
  checked_total(parts);
  std::map<int, std::int64_t> out;
  if (parts.size() == 1) {
    out[0] = binomial_i64(2 * parts[0], parts[0]);
    return out;
  }
  const int l1 = parts[0];
  const int l2 = parts[1];
  for_each_tail(parts, [&](long s1, long s2, std::span<const int> k) {
    std::int64_t tail = 1;
    for (std::size_t t = 0; t < k.size(); ++t) tail *= binomial_i64(2 * parts[t + 2], k[t]);
    if (tail == 0) return;
    for (int x1 = 0; x1 <= 2 * l1; ++x1) {
      const long area = x1 - l1 - s1;
      const long x2 = l2 - area - s2;
      if (x2 < 0 || x2 > 2 * l2) continue;
      out[static_cast<int>(area)] +=
          tail * binomial_i64(2 * l1, x1) * binomial_i64(2 * l2, static_cast<int>(x2));
    }
  });
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

namespace {

// P_l(x)[t] = sum_j binom(l, j) binom(l, x - j) t^j for x in [0, 2l].
std::vector<std::vector<std::int64_t>> deformed_binomials(int l) {
  std::vector<std::vector<std::int64_t>> table(static_cast<std::size_t>(2 * l + 1),
                                               std::vector<std::int64_t>(static_cast<std::size_t>(l + 1), 0));
  for (int x = 0; x <= 2 * l; ++x) {
    for (int j = 0; j <= l; ++j) {
      table[static_cast<std::size_t>(x)][static_cast<std::size_t>(j)] = binomial_i64(l, j) * binomial_i64(l, x - j);
    }
  }
  return table;
}

void poly_mul_into(std::vector<std::int64_t>& acc, const std::vector<std::int64_t>& factor, std::size_t degree_cap) {
  std::vector<std::int64_t> out(degree_cap + 1, 0);
  for (std::size_t a = 0; a < acc.size() && a <= degree_cap; ++a) {
    if (acc[a] == 0) continue;
    for (std::size_t b = 0; b < factor.size() && a + b <= degree_cap; ++b) {
      out[a + b] += acc[a] * factor[b];
    }
  }
  acc = std::move(out);
}

}  // namespace

std::map<int, std::vector<std::int64_t>> lambda_block_product_expansion(std::span<const int> parts) {
  const int total = checked_total(parts);
  const auto degree = static_cast<std::size_t>(total);
  std::vector<std::vector<std::vector<std::int64_t>>> tables;
  tables.reserve(parts.size());
  for (int l : parts) tables.push_back(deformed_binomials(l));

  std::map<int, std::vector<std::int64_t>> out;
  auto accumulate = [&](int area, const std::vector<std::int64_t>& poly) {
    auto& slot = out[area];
    if (slot.empty()) slot.assign(degree + 1, 0);
    for (std::size_t d = 0; d < poly.size() && d <= degree; ++d) slot[d] += poly[d];
  };

  if (parts.size() == 1) {
    accumulate(0, tables[0][static_cast<std::size_t>(parts[0])]);
    return out;
  }
  const int l1 = parts[0];
  const int l2 = parts[1];
  for_each_tail(parts, [&](long s1, long s2, std::span<const int> k) {
    std::vector<std::int64_t> tail{1};
    for (std::size_t t = 0; t < k.size(); ++t) {
      poly_mul_into(tail, tables[t + 2][static_cast<std::size_t>(k[t])], degree);
    }
    if (std::all_of(tail.begin(), tail.end(), [](std::int64_t v) { return v == 0; })) return;
    for (int x1 = 0; x1 <= 2 * l1; ++x1) {
      const long area = x1 - l1 - s1;
      const long x2 = l2 - area - s2;
      if (x2 < 0 || x2 > 2 * l2) continue;
      auto poly = tail;
      poly_mul_into(poly, tables[0][static_cast<std::size_t>(x1)], degree);
      poly_mul_into(poly, tables[1][static_cast<std::size_t>(x2)], degree);
      accumulate(static_cast<int>(area), poly);
    }
  });
  std::erase_if(out, [](const auto& kv) {
    return std::all_of(kv.second.begin(), kv.second.end(), [](std::int64_t v) { return v == 0; });
  });
  return out;
}

CosinePolynomial composition_term(const Composition& c) {
  if (c.empty()) throw InvalidArgument("empty composition");
  CosinePolynomial out;
  for (const auto& [area, v] : block_product_expansion(c.parts())) {
    out.add(std::abs(area), BigRatio(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Assembly

namespace {

void require_even_length(int n) {
  if (n % 2 != 0) throw InvalidArgument("length must be even");
  if (n < 2) throw InvalidArgument("length must be >= 2");
  if (n / 2 > kMaxTotalParts) throw InvalidArgument("length beyond supported range (n <= 66)");
}

// Runs `work(first, last)` over [0, count) split into contiguous chunks and
// returns the per-chunk results in chunk order.
template <typename Result, typename Work>
std::vector<Result> map_chunks(std::uint64_t count, unsigned threads, Work&& work) {
  const std::uint64_t workers = std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(count, 1));
  std::vector<Result> results(static_cast<std::size_t>(workers));
  auto range = [&](std::uint64_t w) {
    return std::pair{count * w / workers, count * (w + 1) / workers};
  };
  if (workers == 1) {
    results[0] = work(std::uint64_t{0}, count);
    return results;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (std::uint64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      auto [first, last] = range(w);
      results[static_cast<std::size_t>(w)] = work(first, last);
    });
  }
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace

CosinePolynomial first_order_q(int n, const EnumerationOptions& options) {
  require_even_length(n);
  const Compositions all(n / 2);
  auto partials = map_chunks<CosinePolynomial>(all.size(), options.threads,
                                               [&](std::uint64_t first, std::uint64_t last) {
    CosinePolynomial acc;
    for (std::uint64_t idx = first; idx < last; ++idx) {
      const Composition c = all[idx];
      CosinePolynomial term = composition_term(c);
      term *= composition_coefficient(c);
      acc += term;
    }
    return acc;
  });
  CosinePolynomial total;
  for (const auto& part : partials) total += part;
  return total;
}

AreaDistribution enumerate_areas(int n, const EnumerationOptions& options) {
  require_even_length(n);
  AreaDistribution d{n, {}};
  if (n == 2) {
    d.add(0, 4);
    return d;
  }
  const CosinePolynomial slice = first_order_q(n, options);
  for (const auto& [a, c] : slice.coefficients()) {
    if (a == 0) {
      d.add(0, require_integral(c * n, "C_n(0)"));
    } else {
      const BigCount v = require_integral(c * n / 2, "C_n(A)");
      d.add(a, v);
      d.add(-a, v);
    }
  }
  return d;
}

LaurentPolynomial to_laurent(const AreaDistribution& d) {
  LaurentPolynomial z;
  for (const auto& [a, v] : d.counts) z.coeffs.emplace(a, v);
  return z;
}

LaurentPolynomial generating_polynomial(int n, const EnumerationOptions& options) {
  return to_laurent(enumerate_areas(n, options));
}

std::complex<double> evaluate_at_flux(const AreaDistribution& d, const RationalFlux& flux) {
  long double re = 0;
  long double im = 0;
  for (const auto& [a, v] : d.counts) {
    const auto w = static_cast<long double>(to_double(v));
    re += w * static_cast<long double>(flux.cos_harmonic(a));
    im += w * static_cast<long double>(flux.sin_harmonic(a));
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::vector<AreaDistribution> lambda_area_table(int n, const EnumerationOptions& options) {
  require_even_length(n);
  const int h = n / 2;
  using Accumulator = std::map<std::pair<int, int>, BigRatio>;  // (m, A)
  const Compositions all(h);
  auto partials = map_chunks<Accumulator>(all.size(), options.threads,
                                          [&](std::uint64_t first, std::uint64_t last) {
    Accumulator acc;
    for (std::uint64_t idx = first; idx < last; ++idx) {
      const Composition c = all[idx];
      const BigRatio weight = composition_coefficient(c);
      for (const auto& [area, poly] : lambda_block_product_expansion(c.parts())) {
        for (std::size_t m = 0; m < poly.size(); ++m) {
          if (poly[m] != 0) acc[{static_cast<int>(m), area}] += weight * poly[m];
        }
      }
    }
    return acc;
  });

  std::vector<AreaDistribution> table(static_cast<std::size_t>(h + 1), AreaDistribution{n, {}});
  Accumulator merged;
  for (const auto& part : partials) {
    for (const auto& [key, v] : part) merged[key] += v;
  }
  for (const auto& [key, v] : merged) {
    table[static_cast<std::size_t>(key.first)].add(key.second, require_integral(v * n, "C_{m,m}(A)"));
  }
  return table;
}

AreaDistribution lambda_area_counts(int n, int m, const EnumerationOptions& options) {
  require_even_length(n);
  if (m < 0 || m > n / 2) throw InvalidArgument("m must lie in [0, n/2]");
  return lambda_area_table(n, options)[static_cast<std::size_t>(m)];
}

}  // namespace areawalk

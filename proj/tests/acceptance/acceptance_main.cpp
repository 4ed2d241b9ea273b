// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "areawalk/area_enum.hpp"
#include "areawalk/combinatorics.hpp"
#include "areawalk/hofstadter.hpp"
#include "areawalk/identities.hpp"
#include "areawalk/kreft.hpp"
#include "areawalk/walk_oracle.hpp"

namespace {

using namespace areawalk;

constexpr double kTol = 1e-9;

struct Verdict {
  bool ok = true;
  std::string detail;
  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::vector<RationalFlux> fluxes_up_to(long qmax) {
  std::vector<RationalFlux> out;
  for (long q = 1; q <= qmax; ++q) {
    for (long p = 0; p < q; ++p) {
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  return out;
}

CosinePolynomial cosine(std::initializer_list<std::pair<const int, BigRatio>> terms) {
  return CosinePolynomial(CosinePolynomial::Map(terms));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Verdict criterion_1() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const AreaDistribution d = enumerate_areas(4);
  const double elapsed = seconds_since(t0);
  v.require(d.at(0) == 28 && d.at(1) == 4 && d.at(-1) == 4, "C_4 values");
  v.require(d.total() == 36, "C_4 total");
  v.require(d.counts.size() == 3, "C_4 support");
  v.require(elapsed < 1e-3, "runtime " + std::to_string(elapsed) + " s");
  return v;
}

Verdict criterion_2() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = 2; n <= 14; n += 2) {
    v.require(enumerate_areas(n) == oracle_areas(n), "n=" + std::to_string(n));
  }
  v.require(seconds_since(t0) < 60, "budget");
  return v;
}

Verdict criterion_3() {
  Verdict v;
  for (int n = 2; n <= 16; n += 2) {
    const auto t0 = std::chrono::steady_clock::now();
    const AreaDistribution d = enumerate_areas(n);
    const double elapsed = seconds_since(t0);
    const BigCount c = binomial(n, n / 2);
    const std::string tag = "n=" + std::to_string(n);
    v.require(d.total() == c * c, tag + " total");
    v.require(d.max_abs_area() <= n * n / 16, tag + " support");
    v.require(d.is_symmetric(), tag + " symmetry");
    for (const auto& [a, count] : d.counts) v.require(count == d.at(-a), tag + " mirror");
    if (n == 16) v.require(elapsed < 30, "runtime at 16");
  }
  return v;
}

Verdict criterion_4() {
  Verdict v;
  const std::map<std::vector<int>, BigRatio> reference{
      {{2}, BigRatio(1, 2)},    {{1, 1}, 1},          {{3}, BigRatio(1, 3)},   {{2, 1}, 1},
      {{1, 2}, 1},              {{1, 1, 1}, 1},       {{4}, BigRatio(1, 4)},   {{3, 1}, 1},
      {{1, 3}, 1},              {{2, 2}, BigRatio(3, 2)}, {{1, 2, 1}, 2},      {{2, 1, 1}, 1},
      {{1, 1, 2}, 1},           {{1, 1, 1, 1}, 1}};
  std::size_t seen = 0;
  for (int h = 2; h <= 4; ++h) {
    for (const Composition& c : compositions(h)) {
      const auto it = reference.find(c.parts());
      v.require(it != reference.end(), "unexpected composition");
      if (it == reference.end()) continue;
      v.require(composition_coefficient(c) == it->second, "coefficient mismatch");
      ++seen;
    }
  }
  v.require(seen == reference.size(), "composition count");
  for (int h = 1; h <= 8; ++h) {
    v.require(coefficient_sum(h) == BigRatio(binomial(2 * h, h), 2 * h), "sum rule h=" + std::to_string(h));
  }
  return v;
}

Verdict criterion_5() {
  Verdict v;
  const std::vector<std::pair<std::vector<int>, CosinePolynomial>> reference{
      {{2}, cosine({{0, 6}})},
      {{1, 1}, cosine({{0, 4}, {1, 2}})},
      {{3}, cosine({{0, 20}})},
      {{2, 1}, cosine({{0, 12}, {1, 8}})},
      {{1, 2}, cosine({{0, 12}, {1, 8}})},
      {{1, 1, 1}, cosine({{0, 8}, {1, 8}, {2, 4}})},
      {{4}, cosine({{0, 70}})},
      {{3, 1}, cosine({{0, 40}, {1, 30}})},
      {{1, 3}, cosine({{0, 40}, {1, 30}})},
      {{2, 2}, cosine({{0, 36}, {1, 32}, {2, 2}})},
      {{1, 2, 1}, cosine({{0, 26}, {1, 32}, {2, 12}})},
      {{2, 1, 1}, cosine({{0, 24}, {1, 28}, {2, 16}, {3, 2}})},
      {{1, 1, 2}, cosine({{0, 24}, {1, 28}, {2, 16}, {3, 2}})},
      {{1, 1, 1, 1}, cosine({{0, 18}, {1, 24}, {2, 18}, {3, 8}, {4, 2}})}};
  for (const auto& [parts, expected] : reference) {
    v.require(composition_term(Composition(parts)) == expected, "expansion mismatch");
  }
  return v;
}

Verdict criterion_6() {
  Verdict v;
  for (const RationalFlux& f : fluxes_up_to(12)) {
    for (int j = 1; j <= 4 && 2L * j <= f.q(); ++j) {
      const double dev = relative_deviation(kreft_direct(f, j), kreft_closed_form(j).evaluate(f));
      v.require(dev <= kTol, f.str() + " j=" + std::to_string(j));
    }
  }
  return v;
}

Verdict criterion_7() {
  Verdict v;
  for (int j = 2; j <= 6; ++j) {
    for (long q = j + 1; q < 2L * j; ++q) {
      for (long p = 1; p < q; ++p) {
        if (std::gcd(p, q) != 1) continue;
        const RationalFlux f(p, q);
        v.require(kreft_extrapolated(f, j) == 0.0, "vanishing " + f.str());
        v.require(std::abs(kreft_series(f, j)) <= kTol, "series vanishing " + f.str());
      }
    }
  }
  for (const RationalFlux& f : fluxes_up_to(12)) {
    for (int j = 1; j <= 6; ++j) {
      const std::string tag = f.str() + " j=" + std::to_string(j);
      const double dispatch = kreft_coefficient(f, j);
      v.require(relative_deviation(kreft_series(f, j), dispatch) <= kTol, "series " + tag);
      v.require(relative_deviation(q_expansion_reconstruct(2 * j, f), dispatch) <= kTol, "q-expansion " + tag);
      if (f.q() < 2L * j && f.q() <= j) {
        v.require(relative_deviation(kreft_extrapolated(f, j), kreft_series(f, j)) <= kTol, "extrapolated " + tag);
        if (j <= 4) {
          v.require(relative_deviation(kreft_extrapolated(f, j), kreft_closed_form(j).evaluate(f)) <= kTol,
                    "closed form " + tag);
        }
      }
    }
  }
  const RationalFlux zero(0, 1);
  v.require(a11(1) == 2 && a11(2) == 7, "a11 exact");
  v.require(std::abs(kreft_series(zero, 1) - 2) <= kTol && std::abs(kreft_series(zero, 2) - 7) <= kTol, "a11 series");
  v.require(std::abs(kreft_closed_form(1).evaluate(zero) - 2) <= kTol &&
                std::abs(kreft_closed_form(2).evaluate(zero) - 7) <= kTol,
            "a11 closed form");
  return v;
}

Verdict criterion_8() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = 2; n <= 12; n += 2) {
    for (const RationalFlux& f : fluxes_up_to(8)) {
      const MomentReport r = verify_moment_identity(n, f);
      v.require(r.passed && r.max_deviation <= kTol, "n=" + std::to_string(n) + " " + f.str());
    }
  }
  v.require(seconds_since(t0) < 60, "runtime");
  return v;
}

Verdict criterion_9() {
  Verdict v;
  for (int n = 2; n <= 12; n += 2) {
    const std::string tag = "n=" + std::to_string(n);
    const auto table = lambda_area_table(n);
    v.require(table == oracle_areas_by_steps(n), tag + " table");
    AreaDistribution summed{n, {}};
    for (const auto& row : table) {
      for (const auto& [a, c] : row.counts) summed.add(a, c);
    }
    v.require(summed == enumerate_areas(n), tag + " m-sum");
    AreaDistribution row0{n, {}};
    row0.add(0, binomial(n, n / 2));
    v.require(table.front() == row0, tag + " m=0 row");
  }
  return v;
}

Verdict criterion_10() {
  Verdict v;
  std::mt19937 rng(500);
  std::uniform_int_distribution<int> pick(0, 30);
  for (int i = 0; i < 500; ++i) {
    v.require(chu_vandermonde(pick(rng), pick(rng), pick(rng), pick(rng)), "chu-vandermonde");
  }

  std::function<void(std::vector<int>&, int)> each = [&](std::vector<int>& parts, int left) {
    if (!parts.empty()) {
      v.require(multi_binomial_identity_doubled(parts).holds, "multi-binomial");
    }
    if (parts.size() == 5) return;
    for (int l = 1; l <= left; ++l) {
      parts.push_back(l);
      each(parts, left - l);
      parts.pop_back();
    }
  };
  std::vector<int> scratch;
  each(scratch, 6);

  for (int l1 = 0; l1 <= 3; ++l1) {
    for (int l2 = 0; l2 <= 3; ++l2) {
      for (int l3 = 0; l3 <= 3; ++l3) {
        const long q = 2L * (l1 + l2 + l3) + 1;
        for (long p = 1; p < q; ++p) {
          if (std::gcd(p, q) == 1) v.require(paired_sum_identity(l1, l2, l3, RationalFlux(p, q)).holds(), "paired sum");
        }
      }
    }
  }

  const std::vector<std::vector<int>> blocks{{2}, {1, 1}, {2, 1}, {1, 2, 1}, {1, 1, 1, 1}, {3, 1, 2}};
  for (long q : {11L, 13L}) {
    for (long p = 1; p < q; ++p) {
      for (int r = 1; r <= 3; ++r) {
        for (const auto& parts : blocks) {
          v.require(shifted_product_sum(RationalFlux(p, q), parts, r).holds, "stride rule");
        }
      }
    }
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Verdict (*)()>> criteria{
      {"n=4 distribution", criterion_1},
      {"oracle equivalence n<=14", criterion_2},
      {"totals, support, symmetry n<=16", criterion_3},
      {"composition coefficients", criterion_4},
      {"cosine expansions", criterion_5},
      {"Kreft closed forms q<=12", criterion_6},
      {"extrapolation and series", criterion_7},
      {"five-way moment identity", criterion_8},
      {"lambda tables", criterion_9},
      {"identity suite", criterion_10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = seconds_since(t0);
    std::printf("criterion %2zu %s  %s (%.3f s)%s%s\n", i + 1, v.ok ? "PASS" : "FAIL", criteria[i].first, elapsed,
                v.ok ? "" : " : ", v.detail.c_str());
    if (!v.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

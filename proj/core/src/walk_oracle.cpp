#include "areawalk/walk_oracle.hpp"

#include <array>
#include <cstdint>
#include <cstdlib>

namespace areawalk {

namespace {

void require_oracle_length(int n, int cap) {
  if (n <= 0 || n % 2 != 0) throw InvalidArgument("length must be even and positive");
  if (n > cap) throw InvalidArgument("oracle length cap exceeded (n <= " + std::to_string(cap) + ")");
}

// Dense (m, x, y, area) grid. Positions are bounded by n/2 in absolute value
// once unreachable-return states are pruned; partial areas by n^2/4.
// 4^16 fits comfortably in 64 bits, so counts are exact.
class StateGrid {
 public:
  StateGrid(int n, bool track_steps)
      : half_(n / 2),
        area_bound_(n * n / 4),
        m_dim_(track_steps ? n / 2 + 1 : 1),
        side_(2 * half_ + 1),
        area_dim_(2 * area_bound_ + 1),
        cells_(static_cast<std::size_t>(m_dim_) * side_ * side_ * area_dim_, 0) {}

  std::uint64_t& at(int m, int x, int y, int area) {
    return cells_[index(m, x, y, area)];
  }
  std::uint64_t at(int m, int x, int y, int area) const {
    return cells_[index(m, x, y, area)];
  }
  bool in_range(int m, int x, int y, int area) const {
    return m < m_dim_ && std::abs(x) <= half_ && std::abs(y) <= half_ && std::abs(area) <= area_bound_;
  }
  void clear() { std::fill(cells_.begin(), cells_.end(), 0); }

  int half() const { return half_; }
  int area_bound() const { return area_bound_; }
  int m_dim() const { return m_dim_; }

 private:
  std::size_t index(int m, int x, int y, int area) const {
    return ((static_cast<std::size_t>(m) * side_ + static_cast<std::size_t>(x + half_)) * side_ +
            static_cast<std::size_t>(y + half_)) *
               area_dim_ +
           static_cast<std::size_t>(area + area_bound_);
  }

  int half_;
  int area_bound_;
  int m_dim_;
  int side_;
  int area_dim_;
  std::vector<std::uint64_t> cells_;
};

struct Step {
  int dx;
  int dy;
};
constexpr std::array<Step, 4> kSteps{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};

int area_increment(const Step& s, int x, int y, AreaConvention convention) {
  if (convention == AreaConvention::vertical_steps) return x * s.dy;
  return -y * s.dx;
}

std::vector<AreaDistribution> run_dp(int n, bool track_steps, AreaConvention convention) {
  StateGrid current(n, track_steps);
  StateGrid next(n, track_steps);
  current.at(0, 0, 0, 0) = 1;
  const int h = current.half();
  const int ab = current.area_bound();

  for (int t = 0; t < n; ++t) {
    next.clear();
    const int remaining_after = n - t - 1;
    for (int m = 0; m < current.m_dim(); ++m) {
      for (int x = -h; x <= h; ++x) {
        for (int y = -h; y <= h; ++y) {
          for (int a = -ab; a <= ab; ++a) {
            const std::uint64_t v = current.at(m, x, y, a);
            if (v == 0) continue;
            for (const Step& s : kSteps) {
              const int nx = x + s.dx;
              const int ny = y + s.dy;
              if (std::abs(nx) + std::abs(ny) > remaining_after) continue;
              const int nm = (track_steps && s.dx == 1) ? m + 1 : m;
              const int na = a + area_increment(s, x, y, convention);
              if (!next.in_range(nm, nx, ny, na)) continue;
              next.at(nm, nx, ny, na) += v;
            }
          }
        }
      }
    }
    std::swap(current, next);
  }

  std::vector<AreaDistribution> out(static_cast<std::size_t>(current.m_dim()), AreaDistribution{n, {}});
  for (int m = 0; m < current.m_dim(); ++m) {
    for (int a = -ab; a <= ab; ++a) {
      const std::uint64_t v = current.at(m, 0, 0, a);
      if (v != 0) out[static_cast<std::size_t>(m)].add(a, BigCount(v));
    }
  }
  return out;
}

}  // namespace

AreaDistribution oracle_areas(int n, AreaConvention convention) {
  require_oracle_length(n, kOracleMaxLength);
  return run_dp(n, false, convention).front();
}

std::vector<AreaDistribution> oracle_areas_by_steps(int n) {
  require_oracle_length(n, kOracleMaxLength);
  return run_dp(n, true, AreaConvention::vertical_steps);
}

AreaDistribution oracle_naive(int n) {
  if (n > 10) throw InvalidArgument("naive enumeration cap exceeded");
  require_oracle_length(n, 10);
  std::map<int, std::uint64_t> hist;
  const std::uint64_t total = std::uint64_t{1} << (2 * n);
  for (std::uint64_t code = 0; code < total; ++code) {
    int x = 0;
    int y = 0;
    int area = 0;
    std::uint64_t c = code;
    for (int t = 0; t < n; ++t, c >>= 2) {
      const Step& s = kSteps[c & 3U];
      area += x * s.dy;
      x += s.dx;
      y += s.dy;
    }
    if (x == 0 && y == 0) ++hist[area];
  }
  AreaDistribution d{n, {}};
  for (const auto& [a, v] : hist) d.add(a, BigCount(v));
  return d;
}

}  // namespace areawalk

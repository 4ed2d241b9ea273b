#pragma once

#include <vector>

#include "areawalk/area_enum.hpp"

namespace areawalk {

/// Which line integral defines the enclosed area. Both agree on closed walks.
enum class AreaConvention {
  /// A += x on an up step, A -= x on a down step (sum of x dy).
  vertical_steps,
  /// A -= y on a right step, A += y on a left step (sum of -y dx).
  horizontal_steps,
};

/// Largest length accepted by the dynamic-programming oracles.
inline constexpr int kOracleMaxLength = 16;

/// Exact area distribution of all closed walks of length n from a layered
/// DP over (x, y, area). Counterclockwise loops have positive area.
/// n even, 2 <= n <= 16.
AreaDistribution oracle_areas(int n, AreaConvention convention = AreaConvention::vertical_steps);

/// Same DP additionally indexed by m, the number of right steps (equal to
/// the number of left steps on a closed walk). Entry m, 0 <= m <= n/2.
std::vector<AreaDistribution> oracle_areas_by_steps(int n);

/// Enumerates all 4^n step sequences explicitly. n even, 2 <= n <= 10.
AreaDistribution oracle_naive(int n);

}  // namespace areawalk

#pragma once

#include <vector>

namespace causalmp {

inline constexpr double kLpTol = 1e-9;

struct LpResult {
    double value = 0.0;
    std::vector<double> x;
};

// Minimise cost.x subject to E x = d, x >= 0, via the two-phase simplex
// method with Bland's anti-cycling rule. Throws Infeasible when phase one
// cannot drive the artificials to zero (tolerance kLpTol) and Unbounded
// when phase two finds an unbounded ray.
LpResult solve_lp_min(const std::vector<std::vector<double>>& E,
                      const std::vector<double>& d,
                      const std::vector<double>& cost);

// Convenience wrapper maximising the objective.
LpResult solve_lp_max(const std::vector<std::vector<double>>& E,
                      const std::vector<double>& d,
                      const std::vector<double>& cost);

}  // namespace causalmp

#pragma once

#include <vector>

namespace causalmp {

// Reduced row echelon form of [rows | rhs] with partial pivoting. Rows that
// reduce to zero are dropped; a zero row with nonzero rhs marks the system
// inconsistent.
struct RrefResult {
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    std::vector<int> pivot_cols;
    bool consistent = true;
};

RrefResult rref(std::vector<std::vector<double>> rows, std::vector<double> rhs,
                double tol = 1e-10);

// Solve the dense SPD-ish system M x = b by Gaussian elimination with
// partial pivoting. Returns false when M is numerically singular.
bool solve_dense(std::vector<std::vector<double>> M, std::vector<double> b,
                 std::vector<double>& x, double tol = 1e-12);

}  // namespace causalmp

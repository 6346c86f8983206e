#include "causalmp/simplex.hpp"

#include <cmath>
#include <cstddef>

#include "causalmp/errors.hpp"

namespace causalmp {

namespace {

// Dense tableau: rows 0..m-1 are the constraints with the rhs in the last
// column, row m is the (negated) objective row.
struct Tableau {
    std::size_t m, n;  // constraints, structural + artificial columns
    std::vector<std::vector<double>> t;
    std::vector<std::size_t> basis;

    Tableau(std::size_t m_, std::size_t n_)
        : m(m_), n(n_), t(m_ + 1, std::vector<double>(n_ + 1, 0.0)), basis(m_) {}

    void pivot(std::size_t row, std::size_t col) {
        const double piv = t[row][col];
        for (auto& v : t[row]) v /= piv;
        for (std::size_t r = 0; r <= m; ++r) {
            if (r == row) continue;
            const double f = t[r][col];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= n; ++j) t[r][j] -= f * t[row][j];
        }
        basis[row] = col;
    }

    // Run simplex iterations on the current objective row. Columns with
    // index >= limit are excluded from entering (used to lock out
    // artificials in phase two). Returns false on an unbounded ray.
    bool iterate(std::size_t limit) {
        for (;;) {
            // Bland: entering column is the lowest index with a negative
            // reduced cost.
            std::size_t col = n;
            for (std::size_t j = 0; j < limit; ++j) {
                if (t[m][j] < -kLpTol) {
                    col = j;
                    break;
                }
            }
            if (col == n) return true;
            // Leaving row: minimum ratio, ties broken by the lowest basis
            // variable index.
            std::size_t row = m;
            double best = 0.0;
            for (std::size_t r = 0; r < m; ++r) {
                if (t[r][col] <= kLpTol) continue;
                const double ratio = t[r][n] / t[r][col];
                if (row == m || ratio < best - kLpTol ||
                    (ratio < best + kLpTol && basis[r] < basis[row])) {
                    row = r;
                    best = ratio;
                }
            }
            if (row == m) return false;
            pivot(row, col);
        }
    }
};

}  // namespace

LpResult solve_lp_min(const std::vector<std::vector<double>>& E,
                      const std::vector<double>& d,
                      const std::vector<double>& cost) {
    const std::size_t m = E.size();
    const std::size_t n = cost.size();
    Tableau tab(m, n + m);

    for (std::size_t r = 0; r < m; ++r) {
        const double sign = d[r] < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < n; ++j) tab.t[r][j] = sign * E[r][j];
        tab.t[r][n + r] = 1.0;  // artificial
        tab.t[r][tab.n] = sign * d[r];
        tab.basis[r] = n + r;
    }

    // Phase one: minimise the sum of artificials. The objective row starts
    // as minus the sum of the constraint rows so the basis is priced out.
    for (std::size_t j = 0; j <= tab.n; ++j) {
        double s = 0.0;
        for (std::size_t r = 0; r < m; ++r) s += tab.t[r][j];
        tab.t[m][j] = -s;
    }
    for (std::size_t r = 0; r < m; ++r) tab.t[m][n + r] = 0.0;
    if (!tab.iterate(tab.n)) {
        throw UnboundedError("Unbounded: phase one cannot be unbounded");
    }
    if (-tab.t[m][tab.n] > kLpTol) {
        throw InfeasibleError("Infeasible: equality system has no nonnegative solution");
    }
    // Drive any artificials still in the basis out of it (their value is 0).
    for (std::size_t r = 0; r < m; ++r) {
        if (tab.basis[r] < n) continue;
        std::size_t col = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(tab.t[r][j]) > kLpTol) {
                col = j;
                break;
            }
        }
        if (col < n) tab.pivot(r, col);
        // Otherwise the row is redundant and stays parked on its artificial.
    }

    // Phase two: price the real objective against the current basis.
    for (std::size_t j = 0; j <= tab.n; ++j) tab.t[m][j] = 0.0;
    for (std::size_t j = 0; j < n; ++j) tab.t[m][j] = cost[j];
    for (std::size_t r = 0; r < m; ++r) {
        if (tab.basis[r] >= n) continue;
        const double f = tab.t[m][tab.basis[r]];
        if (f == 0.0) continue;
        for (std::size_t j = 0; j <= tab.n; ++j) tab.t[m][j] -= f * tab.t[r][j];
    }
    if (!tab.iterate(n)) {
        throw UnboundedError("Unbounded: objective decreases without limit");
    }

    LpResult res;
    res.x.assign(n, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
        if (tab.basis[r] < n) res.x[tab.basis[r]] = tab.t[r][tab.n];
    }
    res.value = 0.0;
    for (std::size_t j = 0; j < n; ++j) res.value += cost[j] * res.x[j];
    return res;
}

LpResult solve_lp_max(const std::vector<std::vector<double>>& E,
                      const std::vector<double>& d,
                      const std::vector<double>& cost) {
    std::vector<double> neg(cost.size());
    for (std::size_t j = 0; j < cost.size(); ++j) neg[j] = -cost[j];
    LpResult res = solve_lp_min(E, d, neg);
    res.value = -res.value;
    return res;
}

}  // namespace causalmp

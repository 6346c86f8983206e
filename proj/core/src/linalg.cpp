#include "causalmp/linalg.hpp"

#include <cmath>
#include <cstddef>
#include <utility>

namespace causalmp {

RrefResult rref(std::vector<std::vector<double>> rows, std::vector<double> rhs,
                double tol) {
    RrefResult out;
    const std::size_t m = rows.size();
    const std::size_t n = m ? rows[0].size() : 0;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < n && lead < m; ++col) {
        std::size_t best = lead;
        for (std::size_t r = lead + 1; r < m; ++r) {
            if (std::abs(rows[r][col]) > std::abs(rows[best][col])) best = r;
        }
        if (std::abs(rows[best][col]) <= tol) continue;
        std::swap(rows[best], rows[lead]);
        std::swap(rhs[best], rhs[lead]);
        const double piv = rows[lead][col];
        for (std::size_t j = 0; j < n; ++j) rows[lead][j] /= piv;
        rhs[lead] /= piv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == lead) continue;
            const double f = rows[r][col];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) rows[r][j] -= f * rows[lead][j];
            rhs[r] -= f * rhs[lead];
        }
        out.pivot_cols.push_back(static_cast<int>(col));
        ++lead;
    }
    for (std::size_t r = 0; r < m; ++r) {
        double norm = 0.0;
        for (double v : rows[r]) norm += std::abs(v);
        if (norm > tol) {
            out.rows.push_back(rows[r]);
            out.rhs.push_back(rhs[r]);
        } else if (std::abs(rhs[r]) > 1e-9) {
            out.consistent = false;
        }
    }
    return out;
}

bool solve_dense(std::vector<std::vector<double>> M, std::vector<double> b,
                 std::vector<double>& x, double tol) {
    const std::size_t n = M.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(M[r][col]) > std::abs(M[best][col])) best = r;
        }
        if (std::abs(M[best][col]) <= tol) return false;
        std::swap(M[best], M[col]);
        std::swap(b[best], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = M[r][col] / M[col][col];
            if (f == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) M[r][j] -= f * M[col][j];
            b[r] -= f * b[col];
        }
    }
    x.assign(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= M[i][j] * x[j];
        x[i] = s / M[i][i];
    }
    return true;
}

}  // namespace causalmp

#include "causalmp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "causalmp/errors.hpp"
#include "causalmp/linalg.hpp"
#include "causalmp/maxent.hpp"

namespace causalmp {

namespace {

struct Eliminated {
    RrefResult red;            // RREF of the equality system, all 16 columns
    std::vector<int> free_cols;
};

Eliminated eliminate(const PolytopeSpec& spec, const GridSpec& g) {
    const EqualitySystem eq = effective_constraints(spec);
    std::vector<std::vector<double>> rows;
    for (const auto& r : eq.rows) rows.emplace_back(r.begin(), r.end());
    Eliminated e;
    e.red = rref(std::move(rows), eq.rhs);
    if (!e.red.consistent) {
        throw InfeasibleError("Infeasible: equality system inconsistent");
    }
    std::vector<bool> pivot(16, false);
    for (int c : e.red.pivot_cols) pivot[c] = true;
    for (int k = 0; k < 16; ++k)
        if (!pivot[k]) e.free_cols.push_back(k);
    if (static_cast<int>(e.free_cols.size()) > g.dimension_cap) {
        throw DimensionTooHighError(
            "DimensionTooHigh: " + std::to_string(e.free_cols.size()) +
            " free coordinates exceed the oracle cap");
    }
    return e;
}

// Enumerate grid points of the polytope, invoking visit(c) for each member.
// Returns the number of members found.
long enumerate_grid(const PolytopeSpec& spec, const GridSpec& g,
                    const std::function<void(const ResponseWeights16&)>& visit) {
    const Eliminated e = eliminate(spec, g);
    const std::size_t nfree = e.free_cols.size();
    const std::size_t npivot = e.red.rows.size();
    const double step = 1.0 / g.resolution;
    const double tol = 1e-9;

    std::vector<int> idx(nfree, 0);
    long members = 0;
    for (;;) {
        ResponseWeights16 c{};
        for (std::size_t j = 0; j < nfree; ++j)
            c[e.free_cols[j]] = idx[j] * step;
        bool ok = true;
        for (std::size_t r = 0; r < npivot && ok; ++r) {
            double v = e.red.rhs[r];
            for (std::size_t j = 0; j < nfree; ++j)
                v -= e.red.rows[r][e.free_cols[j]] * c[e.free_cols[j]];
            const int pc = e.red.pivot_cols[r];
            if (v < -tol || v > 1.0 + tol) ok = false;
            c[pc] = v;
        }
        if (ok) {
            ++members;
            visit(c);
        }
        // odometer over the free coordinates
        std::size_t j = 0;
        for (; j < nfree; ++j) {
            if (++idx[j] <= g.resolution) break;
            idx[j] = 0;
        }
        if (j == nfree) break;
        if (nfree == 0) break;
    }
    return members;
}

}  // namespace

LambdaInterval grid_lambda_range(const PolytopeSpec& spec, const GridSpec& g) {
    double lo = 2.0, hi = -1.0;
    const long members = enumerate_grid(spec, g, [&](const ResponseWeights16& c) {
        double lam = 0.0;
        for (int k = 0; k < 16; ++k) lam += spec.A[0][k] * c[k];
        lo = std::min(lo, lam);
        hi = std::max(hi, lam);
    });
    if (members == 0) {
        throw InfeasibleError(
            "Infeasible: no grid point is a member (inconclusive at coarse "
            "resolution)");
    }
    return {lo, hi};
}

double grid_max_entropy(const PolytopeSpec& spec, const GridSpec& g) {
    double best = -1.0;
    const long members = enumerate_grid(spec, g, [&](const ResponseWeights16& c) {
        ResponseWeights16 cc = c;
        for (double& v : cc) v = std::max(0.0, v);
        best = std::max(best, entropy_of_weights(cc));
    });
    if (members == 0) {
        throw InfeasibleError("Infeasible: no grid point is a member");
    }
    return best;
}

double abduction_oracle(const BinaryMarginal& m, double lambda,
                        CounterfactualQuery query) {
    const ResponseWeights4 a = response_weights(m, lambda);
    if (query == CounterfactualQuery::pns) {
        double p = 0.0;
        for (int j = 0; j < 4; ++j) {
            if (eval_univariate(j, 1) == 1 && eval_univariate(j, 0) == 0)
                p += a[j];
        }
        return p;
    }
    // Abduction: posterior over functions given the observed (w, z).
    // Action and prediction: evaluate each function at the intervened w.
    const int w_obs = query == CounterfactualQuery::suff_nonmono ? 0 : 1;
    const int z_obs = query == CounterfactualQuery::suff_nonmono ? 1 : 0;
    const int w_do = 1 - w_obs;
    const int z_query = 1 - z_obs;
    double denom = 0.0;
    for (int j = 0; j < 4; ++j)
        if (eval_univariate(j, w_obs) == z_obs) denom += a[j];
    if (denom <= kProbTol) {
        throw ConditioningEventNullError(
            "ConditioningEventNull: observed event has probability 0");
    }
    double num = 0.0;
    for (int j = 0; j < 4; ++j) {
        if (eval_univariate(j, w_obs) == z_obs &&
            eval_univariate(j, w_do) == z_query) {
            num += a[j];
        }
    }
    return num / denom;
}

}  // namespace causalmp

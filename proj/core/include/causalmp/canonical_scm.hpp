#pragma once

#include <array>

#include "causalmp/trial_data.hpp"

namespace causalmp {

// Global ordering of the univariate response functions: 0 = constant-0,
// 1 = constant-1, 2 = identity, 3 = negation.
enum UnivariateFn : int { fn_zero = 0, fn_one = 1, fn_id = 2, fn_not = 3 };

// Evaluate univariate response function j at input w.
inline int eval_univariate(int j, int w) {
    switch (j) {
        case fn_zero: return 0;
        case fn_one: return 1;
        case fn_id: return w;
        default: return 1 - w;
    }
}

struct LambdaInterval {
    double lo = 0.0;
    double hi = 0.0;
    double width() const { return hi - lo; }
    bool contains(double v, double tol = kProbTol) const {
        return v >= lo - tol && v <= hi + tol;
    }
};

using ResponseWeights4 = std::array<double, 4>;

struct PnsBounds {
    double lo = 0.0;
    double hi = 0.0;
};

// Feasible range of the free parameter of the W->Z response-function SCM
// (the weight on the constant-0 function).
LambdaInterval lambda_range(const BinaryMarginal& m);

// Weights over {0, 1, ID, NOT} for the given lambda. Values within
// kProbTol of the feasible interval are clamped; anything further out
// raises LambdaOutOfRange.
ResponseWeights4 response_weights(const BinaryMarginal& m, double lambda);

// PNS = P(Z_{w=1}=1, Z_{w=0}=0); equals the mass on the identity function.
double pns_from_lambda(const BinaryMarginal& m, double lambda);

// Classical single-marginal PNS bounds.
PnsBounds pns_bounds_single(const BinaryMarginal& m);

// Total mass on the non-constant response functions: the unnormalised
// probability that Z would have been different had W been different.
double counterfactual_influence(const BinaryMarginal& m, double lambda);

// P(Z=0 | W=0, Z=1, do(W=1)).
double prob_sufficient_nonmonotonicity(const BinaryMarginal& m, double lambda);

// P(Z=1 | W=1, Z=0, do(W=0)).
double prob_necessary_nonmonotonicity(const BinaryMarginal& m, double lambda);

}  // namespace causalmp

#include "causalmp/canonical_scm.hpp"

#include <algorithm>
#include <cmath>

#include "causalmp/errors.hpp"

namespace causalmp {

namespace {

// Clamp lambda into the feasible interval when it is within kProbTol of it,
// reject otherwise.
double checked_lambda(const BinaryMarginal& m, double lambda) {
    validate_marginal(m);
    const LambdaInterval r = lambda_range(m);
    if (!r.contains(lambda, kProbTol)) {
        throw LambdaOutOfRangeError("LambdaOutOfRange: lambda=" +
                                    std::to_string(lambda) + " outside [" +
                                    std::to_string(r.lo) + ", " +
                                    std::to_string(r.hi) + "]");
    }
    return std::clamp(lambda, r.lo, r.hi);
}

}  // namespace

LambdaInterval lambda_range(const BinaryMarginal& m) {
    validate_marginal(m);
    LambdaInterval r;
    r.lo = std::max(0.0, m.p_z0_w0 + m.p_z0_w1 - 1.0);
    r.hi = std::min(m.p_z0_w0, m.p_z0_w1);
    return r;
}

ResponseWeights4 response_weights(const BinaryMarginal& m, double lambda) {
    lambda = checked_lambda(m, lambda);
    ResponseWeights4 a{lambda, 1.0 - m.p_z0_w0 - m.p_z0_w1 + lambda,
                       m.p_z0_w0 - lambda, m.p_z0_w1 - lambda};
    for (double& v : a) {
        if (v < 0.0) v = 0.0;  // only roundoff at interval endpoints
        if (v > 1.0) v = 1.0;
    }
    return a;
}

double pns_from_lambda(const BinaryMarginal& m, double lambda) {
    lambda = checked_lambda(m, lambda);
    return m.p_z0_w0 - lambda;
}

PnsBounds pns_bounds_single(const BinaryMarginal& m) {
    validate_marginal(m);
    const double p11 = 1.0 - m.p_z0_w1;
    const double p10 = 1.0 - m.p_z0_w0;
    PnsBounds b;
    b.lo = std::max(0.0, p11 - p10);
    b.hi = std::min(p11, m.p_z0_w0);
    return b;
}

double counterfactual_influence(const BinaryMarginal& m, double lambda) {
    lambda = checked_lambda(m, lambda);
    return m.p_z0_w0 + m.p_z0_w1 - 2.0 * lambda;
}

double prob_sufficient_nonmonotonicity(const BinaryMarginal& m, double lambda) {
    lambda = checked_lambda(m, lambda);
    const double denom = 1.0 - m.p_z0_w0;
    if (denom <= kProbTol) {
        throw ConditioningEventNullError(
            "ConditioningEventNull: P(Z=1|W=0) = 0");
    }
    return (m.p_z0_w1 - lambda) / denom;
}

double prob_necessary_nonmonotonicity(const BinaryMarginal& m, double lambda) {
    lambda = checked_lambda(m, lambda);
    if (m.p_z0_w1 <= kProbTol) {
        throw ConditioningEventNullError(
            "ConditioningEventNull: P(Z=0|W=1) = 0");
    }
    return (m.p_z0_w1 - lambda) / m.p_z0_w1;
}

}  // namespace causalmp

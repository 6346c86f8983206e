#pragma once

#include "causalmp/canonical_scm.hpp"
#include "causalmp/polytope.hpp"

namespace causalmp {

// Brute-force verifiers. They share the polytope definition with the
// engines but reach answers by elimination plus grid enumeration instead
// of simplex or Newton iteration.
struct GridSpec {
    int resolution = 200;    // grid steps per unit interval
    int dimension_cap = 4;   // refuse to enumerate more free coordinates
};

// Min and max of the constant-0 weight [Ac]_0 over grid points of the
// polytope. Throws DimensionTooHigh when the equality system leaves more
// free coordinates than the cap, Infeasible when no grid point is a
// member (inconclusive at coarse resolution; refine before concluding).
LambdaInterval grid_lambda_range(const PolytopeSpec& spec, const GridSpec& g);

// Max entropy in bits over the same grid.
double grid_max_entropy(const PolytopeSpec& spec, const GridSpec& g);

enum class CounterfactualQuery { pns, suff_nonmono, nec_nonmono };

// Counterfactual probability by the explicit abduction, action, prediction
// procedure over the 4-function posterior.
double abduction_oracle(const BinaryMarginal& m, double lambda,
                        CounterfactualQuery query);

}  // namespace causalmp

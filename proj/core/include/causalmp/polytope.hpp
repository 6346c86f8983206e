#pragma once

#include <array>
#include <string>
#include <vector>

#include "causalmp/canonical_scm.hpp"
#include "causalmp/trial_data.hpp"

namespace causalmp {

inline constexpr double kMemberTol = 1e-9;

// All 16 bivariate boolean functions h_k(x,y), with h_k(x,y) equal to bit
// (2x+y) of k.
struct BivariateFunctionTable {
    std::array<std::array<std::array<int, 2>, 2>, 16> h{};
};

using ResponseWeights16 = std::array<double, 16>;

using Matrix4x16 = std::array<std::array<double, 16>, 4>;

// The consistency polytope of response-function weights c that reproduce
// both marginals. A and B map c to univariate response weights for the
// X->Z and Y->Z views respectively.
struct PolytopeSpec {
    Matrix4x16 A{};
    Matrix4x16 B{};
    ResponseWeights4 a0{};
    ResponseWeights4 b0{};
    LambdaInterval lamX;
    LambdaInterval lamY;
    double pY0 = 0.0;
    double pX0 = 0.0;
};

// Equality system E c = d over the 16 weights, always including the
// sum-to-one row.
struct EqualitySystem {
    std::vector<std::array<double, 16>> rows;
    std::vector<double> rhs;
};

BivariateFunctionTable enumerate_bivariate_functions();

enum class Axis { X, Y };

// Index in {0,1,ID,NOT} of h_k with the given axis fixed to value. Fixing Y
// yields a function of x, fixing X a function of y.
int project(int k, Axis axis, int value);

PolytopeSpec build_polytope(const BinaryMarginal& mX, const BinaryMarginal& mY);

// Membership in the full system: nonnegativity, the value-band inequality
// rows for both marginals, and the seven equality rows.
bool is_member(const ResponseWeights16& c, const PolytopeSpec& spec,
               double tol = kMemberTol);

// Seven-row equality system of the full polytope: three value rows per
// marginal plus the sum row.
EqualitySystem full_constraints(const PolytopeSpec& spec);

// Whether the Y-side conditionals are degenerate (one of them is 0 or 1),
// pinning lambda_Y to a single value.
bool y_side_degenerate(const PolytopeSpec& spec, double tol = kProbTol);

// Equality system actually used for optimisation. When the Y-side marginal
// is degenerate the three B-value rows collapse to a fixed support: weights
// outside it are forced to zero and the value rows carry no further
// information, so they are replaced by the forced-zero rows. Otherwise this
// is identical to full_constraints.
EqualitySystem effective_constraints(const PolytopeSpec& spec);

// Indices k with c_k necessarily 0 under a degenerate Y-side marginal.
std::vector<int> forced_zero_indices(const PolytopeSpec& spec);

std::string dump_polytope_json(const PolytopeSpec& spec);

}  // namespace causalmp

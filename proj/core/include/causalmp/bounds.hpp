#pragma once

#include <array>
#include <string>
#include <vector>

#include "causalmp/canonical_scm.hpp"
#include "causalmp/polytope.hpp"
#include "causalmp/trial_data.hpp"

namespace causalmp {

// Which branch of the closed-form lower bound was active. phi_d0 is the
// Phi_X + D_0 branch, d1 the D_1 branch; none means the single-marginal
// bound survived untightened.
enum class BindingCase { none, phi_d0, d1, infeasible };

const char* binding_case_name(BindingCase c);

struct TightenedBounds {
    LambdaInterval lambda;
    PnsBounds pns;
    bool compatible = true;
    BindingCase binding_case = BindingCase::none;
};

// Degeneracy flags of the Y-side outcome conditionals q00 = P(Z=0|Y=0) and
// q01 = P(Z=0|Y=1).
struct DegeneracyProfile {
    bool p00_is_0 = false;
    bool p01_is_0 = false;
    bool p00_is_1 = false;
    bool p01_is_1 = false;
    bool any() const { return p00_is_0 || p01_is_0 || p00_is_1 || p01_is_1; }
};

DegeneracyProfile degeneracy_profile(const BinaryMarginal& mY,
                                     double tol = kProbTol);

enum class LpSense { min, max };

struct LpSolve {
    double value = 0.0;
    ResponseWeights16 c{};
};

// Optimise a linear objective over the consistency polytope. Throws
// Infeasible when the polytope is empty. The returned point is re-validated
// against the constraint system before being handed back.
LpSolve solve_lp(const std::array<double, 16>& objective,
                 const PolytopeSpec& spec, LpSense sense);

// Same, over an explicit equality system (plus nonnegativity).
LpSolve solve_lp_over(const std::array<double, 16>& objective,
                      const EqualitySystem& eq, LpSense sense);

// [max(lambda_X^min, LP minimum of the identity-complement weight),
//  lambda_X^max]. The upper endpoint is never reduced by the merge.
LambdaInterval restricted_lambda_range(const BinaryMarginal& mX,
                                       const BinaryMarginal& mY);

struct CompatibilityResult {
    bool compatible = true;
    std::vector<std::string> violated;
};

// Closed-form compatibility certificate for a degenerate Y-side marginal.
// Throws NotDegenerate when both conditionals are interior.
CompatibilityResult degenerate_compatibility(const BinaryMarginal& mX,
                                             const BinaryMarginal& mY);

// max(lambda_X^min, Phi_X + D_0, D_1) with Phi_X = p00 + p01 - 1,
// D_0 the P(Y=y) mass on conditionals pinned at 0 and D_1 the mass on
// conditionals pinned at 1.
double closed_form_lambda_min(const BinaryMarginal& mX,
                              const BinaryMarginal& mY);

// Merge the two marginals into tightened lambda and PNS intervals. Uses the
// closed forms when mY is degenerate and the LP otherwise; throws
// Incompatible when no joint SCM exists.
TightenedBounds tightened_pns_bounds(const BinaryMarginal& mX,
                                     const BinaryMarginal& mY);

std::string bounds_to_json(const TightenedBounds& b);

}  // namespace causalmp

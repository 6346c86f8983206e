#include "causalmp/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "causalmp/errors.hpp"
#include "causalmp/serialize.hpp"
#include "causalmp/simplex.hpp"
#include "json.hpp"

namespace causalmp {

const char* binding_case_name(BindingCase c) {
    switch (c) {
        case BindingCase::none: return "none";
        case BindingCase::phi_d0: return "phi_d0";
        case BindingCase::d1: return "d1";
        default: return "infeasible";
    }
}

DegeneracyProfile degeneracy_profile(const BinaryMarginal& mY, double tol) {
    validate_marginal(mY);
    DegeneracyProfile p;
    p.p00_is_0 = mY.p_z0_w0 <= tol;
    p.p00_is_1 = mY.p_z0_w0 >= 1.0 - tol;
    p.p01_is_0 = mY.p_z0_w1 <= tol;
    p.p01_is_1 = mY.p_z0_w1 >= 1.0 - tol;
    return p;
}

LpSolve solve_lp(const std::array<double, 16>& objective,
                 const PolytopeSpec& spec, LpSense sense) {
    return solve_lp_over(objective, effective_constraints(spec), sense);
}

LpSolve solve_lp_over(const std::array<double, 16>& objective,
                      const EqualitySystem& eq, LpSense sense) {
    std::vector<std::vector<double>> E;
    E.reserve(eq.rows.size());
    for (const auto& row : eq.rows) E.emplace_back(row.begin(), row.end());
    const std::vector<double> cost(objective.begin(), objective.end());

    const LpResult r = sense == LpSense::min ? solve_lp_min(E, eq.rhs, cost)
                                             : solve_lp_max(E, eq.rhs, cost);

    LpSolve out;
    out.value = r.value;
    for (int k = 0; k < 16; ++k) {
        double v = r.x[k];
        if (v < 0.0 && v > -kLpTol) v = 0.0;
        out.c[k] = v;
    }
    // Paranoia: the simplex should hand back a point of the system it was
    // given. Residual above tolerance means a solver bug, not bad input.
    for (std::size_t i = 0; i < eq.rows.size(); ++i) {
        double lhs = 0.0;
        for (int k = 0; k < 16; ++k) lhs += eq.rows[i][k] * out.c[k];
        if (std::abs(lhs - eq.rhs[i]) > 10.0 * kLpTol) {
            throw Error("internal: LP certificate violates its constraints");
        }
    }
    return out;
}

namespace {

std::array<double, 16> lambda_objective(const PolytopeSpec& spec) {
    std::array<double, 16> obj{};
    for (int k = 0; k < 16; ++k) obj[k] = spec.A[0][k];
    return obj;
}

// Check one closed-form inequality, recording a description on failure.
void check(bool ok, const std::string& desc, CompatibilityResult& res) {
    if (!ok) {
        res.compatible = false;
        res.violated.push_back(desc);
    }
}

}  // namespace

CompatibilityResult degenerate_compatibility(const BinaryMarginal& mX,
                                             const BinaryMarginal& mY) {
    validate_marginal(mX);
    const DegeneracyProfile prof = degeneracy_profile(mY);
    if (!prof.any()) {
        throw NotDegenerateError(
            "NotDegenerate: compatibility certificate requires a degenerate "
            "Y-side marginal");
    }
    const double p00 = mX.p_z0_w0;
    const double p01 = mX.p_z0_w1;
    const double lmax = lambda_range(mX).hi;
    const double pY0 = mY.p_w0;
    const double pY1 = 1.0 - pY0;
    const double tol = kLpTol;

    const bool doubly = (prof.p00_is_0 || prof.p00_is_1) &&
                        (prof.p01_is_0 || prof.p01_is_1);
    if (doubly) {
        // Both conditionals pinned. The surviving support is tiny and the
        // case split no longer applies, so certify via LP feasibility.
        CompatibilityResult res;
        try {
            const PolytopeSpec spec = build_polytope(mX, mY);
            solve_lp(lambda_objective(spec), spec, LpSense::min);
        } catch (const InfeasibleError&) {
            res.compatible = false;
            res.violated.push_back("no joint SCM: reduced system infeasible");
        }
        return res;
    }

    CompatibilityResult res;
    auto side = [&](double pYv, const std::string& pname) {
        // Conditional pinned at 0 given Y=v: all identity-style mass must
        // fit inside P(Y=v).
        check(lmax <= pYv + tol, "lambda_x_max <= " + pname, res);
        check(p01 - lmax <= pYv + tol, "p01 - lambda_x_max <= " + pname, res);
        check(p00 - lmax <= pYv + tol, "p00 - lambda_x_max <= " + pname, res);
        check(lmax >= p00 + p01 - pYv - tol,
              "lambda_x_max >= p00 + p01 - " + pname, res);
    };
    auto side_one = [&](double pYv, double pOther, const std::string& pname,
                        const std::string& oname) {
        // Conditional pinned at 1 given Y=v: Z=0 is certain there, so the
        // constant-0 mass must cover P(Y=v).
        check(lmax >= pYv - tol, "lambda_x_max >= " + pname, res);
        check(p00 - lmax <= pOther + tol, "p00 - lambda_x_max <= " + oname, res);
        check(p01 - lmax <= pOther + tol, "p01 - lambda_x_max <= " + oname, res);
        check(lmax <= p00 + p01 - pYv + tol,
              "lambda_x_max <= p00 + p01 - " + pname, res);
    };
    if (prof.p01_is_0) side(pY0, "P(Y=0)");
    if (prof.p00_is_0) side(pY1, "P(Y=1)");
    if (prof.p00_is_1) side_one(pY0, pY1, "P(Y=0)", "P(Y=1)");
    if (prof.p01_is_1) side_one(pY1, pY0, "P(Y=1)", "P(Y=0)");
    return res;
}

double closed_form_lambda_min(const BinaryMarginal& mX,
                              const BinaryMarginal& mY) {
    const DegeneracyProfile prof = degeneracy_profile(mY);
    if (!prof.any()) {
        throw NotDegenerateError(
            "NotDegenerate: closed form requires a degenerate Y-side marginal");
    }
    const CompatibilityResult compat = degenerate_compatibility(mX, mY);
    if (!compat.compatible) {
        std::ostringstream msg;
        msg << "Incompatible: no joint SCM reproduces both marginals";
        throw IncompatibleError(msg.str(), compat.violated);
    }
    const double pY0 = mY.p_w0;
    const double pY1 = 1.0 - pY0;
    const double d0 = (prof.p00_is_0 ? pY0 : 0.0) + (prof.p01_is_0 ? pY1 : 0.0);
    const double d1 = (prof.p00_is_1 ? pY0 : 0.0) + (prof.p01_is_1 ? pY1 : 0.0);
    const double phi = mX.p_z0_w0 + mX.p_z0_w1 - 1.0;
    return std::max({lambda_range(mX).lo, phi + d0, d1});
}

LambdaInterval restricted_lambda_range(const BinaryMarginal& mX,
                                       const BinaryMarginal& mY) {
    const PolytopeSpec spec = build_polytope(mX, mY);
    LambdaInterval r = lambda_range(mX);
    try {
        const LpSolve lo = solve_lp(lambda_objective(spec), spec, LpSense::min);
        r.lo = std::max(r.lo, lo.value);
    } catch (const InfeasibleError&) {
        std::vector<std::string> violated;
        if (y_side_degenerate(spec)) {
            violated = degenerate_compatibility(mX, mY).violated;
        }
        throw IncompatibleError(
            "Incompatible: no joint SCM reproduces both marginals", violated);
    }
    r.lo = std::clamp(r.lo, lambda_range(mX).lo, r.hi);
    return r;
}

TightenedBounds tightened_pns_bounds(const BinaryMarginal& mX,
                                     const BinaryMarginal& mY) {
    validate_marginal(mX);
    const DegeneracyProfile prof = degeneracy_profile(mY);
    const LambdaInterval single = lambda_range(mX);
    TightenedBounds out;

    if (prof.any()) {
        const double lo = closed_form_lambda_min(mX, mY);  // throws if incompatible
        out.lambda = {std::min(lo, single.hi), single.hi};
        const double pY0 = mY.p_w0;
        const double pY1 = 1.0 - pY0;
        const double d0 =
            (prof.p00_is_0 ? pY0 : 0.0) + (prof.p01_is_0 ? pY1 : 0.0);
        const double d1 =
            (prof.p00_is_1 ? pY0 : 0.0) + (prof.p01_is_1 ? pY1 : 0.0);
        const double phi = mX.p_z0_w0 + mX.p_z0_w1 - 1.0;
        if (lo <= single.lo + kLpTol) {
            out.binding_case = BindingCase::none;
        } else if (phi + d0 >= d1) {
            out.binding_case = BindingCase::phi_d0;
        } else {
            out.binding_case = BindingCase::d1;
        }
    } else {
        out.lambda = restricted_lambda_range(mX, mY);  // throws if incompatible
        out.binding_case = BindingCase::none;
    }

    out.pns.lo = std::clamp(mX.p_z0_w0 - out.lambda.hi, 0.0, 1.0);
    out.pns.hi = std::clamp(mX.p_z0_w0 - out.lambda.lo, out.pns.lo, 1.0);
    out.compatible = true;
    return out;
}

std::string bounds_to_json(const TightenedBounds& b) {
    nlohmann::ordered_json j;
    j["lambda"] = {round12(b.lambda.lo), round12(b.lambda.hi)};
    j["pns"] = {round12(b.pns.lo), round12(b.pns.hi)};
    j["compatible"] = b.compatible;
    j["binding_case"] = binding_case_name(b.binding_case);
    return j.dump();
}

}  // namespace causalmp

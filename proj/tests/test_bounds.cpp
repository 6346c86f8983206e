#include <random>

#include "doctest.h"

#include "causalmp/bounds.hpp"
#include "causalmp/errors.hpp"
#include "support/generators.hpp"

using namespace causalmp;

namespace {

std::array<double, 16> lambda_objective(const PolytopeSpec& s) {
    std::array<double, 16> obj{};
    for (int k = 0; k < 16; ++k) obj[k] = s.A[0][k];
    return obj;
}

bool lp_feasible(const BinaryMarginal& mX, const BinaryMarginal& mY) {
    try {
        const PolytopeSpec s = build_polytope(mX, mY);
        solve_lp(lambda_objective(s), s, LpSense::min);
        return true;
    } catch (const InfeasibleError&) {
        return false;
    }
}

}  // namespace

TEST_CASE("solve_lp recovers the lambda extremes") {
    const PolytopeSpec s = build_polytope({0.5, 0.4, 0.5}, {0.9, 0.0, 0.6});
    const LpSolve lo = solve_lp(lambda_objective(s), s, LpSense::min);
    const LpSolve hi = solve_lp(lambda_objective(s), s, LpSense::max);
    CHECK(lo.value == doctest::Approx(0.3).epsilon(1e-9));
    CHECK(hi.value == doctest::Approx(0.4).epsilon(1e-9));

    std::array<double, 16> zero{};
    const LpSolve z = solve_lp(zero, s, LpSense::min);
    CHECK(z.value == doctest::Approx(0.0));

    const PolytopeSpec bad = build_polytope({0.9, 0.8, 0.5}, {0.7, 0.0, 0.3});
    CHECK_THROWS_AS(solve_lp(lambda_objective(bad), bad, LpSense::min),
                    InfeasibleError);
}

TEST_CASE("restricted lambda range") {
    LambdaInterval r = restricted_lambda_range({0.5, 0.4, 0.5}, {0.9, 0.0, 0.6});
    CHECK(r.lo == doctest::Approx(0.3).epsilon(1e-9));
    CHECK(r.hi == doctest::Approx(0.4).epsilon(1e-9));

    // uninformative Y marginal leaves the interval untouched
    r = restricted_lambda_range({0.5, 0.5, 0.5}, {0.5, 0.5, 0.5});
    CHECK(r.lo == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(r.hi == doctest::Approx(0.5).epsilon(1e-9));

    r = restricted_lambda_range({0.5, 0.5, 0.5}, {1.0, 0.5, 0.5});
    CHECK(r.lo == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(r.hi == doctest::Approx(0.5).epsilon(1e-9));

    CHECK_THROWS_AS(restricted_lambda_range({0.9, 0.8, 0.5}, {0.7, 0.0, 0.3}),
                    IncompatibleError);
}

TEST_CASE("degenerate compatibility certificate") {
    CompatibilityResult r =
        degenerate_compatibility({0.5, 0.4, 0.5}, {0.9, 0.0, 0.6});
    CHECK(r.compatible);
    CHECK(r.violated.empty());

    r = degenerate_compatibility({0.9, 0.8, 0.5}, {0.7, 0.0, 0.3});
    CHECK_FALSE(r.compatible);
    CHECK_FALSE(r.violated.empty());

    CHECK_THROWS_AS(degenerate_compatibility({0.5, 0.4, 0.5}, {0.5, 0.5, 0.5}),
                    NotDegenerateError);
}

TEST_CASE("closed form lambda minimum") {
    CHECK(closed_form_lambda_min({0.5, 0.4, 0.5}, {0.9, 0.0, 0.6}) ==
          doctest::Approx(0.3).epsilon(1e-12));
    CHECK(closed_form_lambda_min({0.5, 0.5, 0.5}, {1.0, 0.5, 0.5}) ==
          doctest::Approx(0.5).epsilon(1e-12));
    // the third branch is unreachable here: compatibility fails first
    CHECK_THROWS_AS(closed_form_lambda_min({0.5, 0.5, 0.5}, {0.2, 0.0, 0.01}),
                    IncompatibleError);
    CHECK_THROWS_AS(closed_form_lambda_min({0.5, 0.4, 0.5}, {0.5, 0.5, 0.5}),
                    NotDegenerateError);
}

TEST_CASE("tightened pns bounds") {
    TightenedBounds tb = tightened_pns_bounds({0.5, 0.4, 0.5}, {0.9, 0.0, 0.6});
    CHECK(tb.pns.lo == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(tb.pns.hi == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(tb.binding_case == BindingCase::phi_d0);
    CHECK(tb.compatible);

    tb = tightened_pns_bounds({0.5, 0.5, 0.5}, {1.0, 0.5, 0.5});
    CHECK(tb.pns.lo == doctest::Approx(0.0));
    CHECK(tb.pns.hi == doctest::Approx(0.0));
    CHECK(tb.binding_case == BindingCase::d1);

    tb = tightened_pns_bounds({0.5, 0.5, 0.5}, {0.5, 0.5, 0.5});
    CHECK(tb.pns.lo == doctest::Approx(0.0));
    CHECK(tb.pns.hi == doctest::Approx(0.5));
    CHECK(tb.binding_case == BindingCase::none);

    CHECK_THROWS_AS(tightened_pns_bounds({0.9, 0.8, 0.5}, {0.7, 0.0, 0.3}),
                    IncompatibleError);
}

TEST_CASE("json serialization of bounds") {
    const TightenedBounds tb =
        tightened_pns_bounds({0.5, 0.4, 0.5}, {0.9, 0.0, 0.6});
    const std::string j = bounds_to_json(tb);
    CHECK(j ==
          R"({"lambda":[0.3,0.4],"pns":[0.1,0.2],"compatible":true,"binding_case":"phi_d0"})");
}

TEST_CASE("random degenerate instances: closed form vs LP, certificate vs feasibility") {
    std::mt19937_64 rng(99);
    int compatible_seen = 0;
    for (int i = 0; i < 300; ++i) {
        const BinaryMarginal mX = testgen::random_marginal(rng);
        const BinaryMarginal mY = testgen::random_degenerate_marginal(rng, i);
        const bool feasible = lp_feasible(mX, mY);
        const CompatibilityResult cert = degenerate_compatibility(mX, mY);
        CHECK(cert.compatible == feasible);
        if (!feasible) continue;
        ++compatible_seen;
        const PolytopeSpec s = build_polytope(mX, mY);
        const LpSolve lo = solve_lp(lambda_objective(s), s, LpSense::min);
        const double cf = closed_form_lambda_min(mX, mY);
        CHECK(cf == doctest::Approx(lo.value).epsilon(1e-9));
        // upper bound is never tightened
        const LpSolve hi = solve_lp(lambda_objective(s), s, LpSense::max);
        CHECK(hi.value == doctest::Approx(lambda_range(mX).hi).epsilon(1e-9));
        // monotone tightening
        const TightenedBounds tb = tightened_pns_bounds(mX, mY);
        const PnsBounds single = pns_bounds_single(mX);
        CHECK(tb.pns.lo >= single.lo - 1e-9);
        CHECK(tb.pns.hi <= single.hi + 1e-9);
    }
    CHECK(compatible_seen > 20);
}

TEST_CASE("feasibility is symmetric in the treatment order") {
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 100; ++i) {
        // joint SCMs generate marginal pairs that are compatible both ways
        const testgen::JointScm scm = testgen::random_joint_scm(rng);
        const BinaryMarginal mX = scm.marginal_x();
        const BinaryMarginal mY = scm.marginal_y();
        CHECK(lp_feasible(mX, mY));
        CHECK(lp_feasible(mY, mX));
    }
    // and an incompatible pair stays incompatible when swapped
    const BinaryMarginal a{0.9, 0.8, 0.5};
    const BinaryMarginal b{0.7, 0.0, 0.3};
    CHECK_FALSE(lp_feasible(a, b));
    CHECK_FALSE(lp_feasible(b, a));
}

#include <random>

#include "doctest.h"

#include "causalmp/canonical_scm.hpp"
#include "causalmp/errors.hpp"
#include "support/generators.hpp"

using namespace causalmp;

TEST_CASE("lambda range") {
    auto r = lambda_range({0.5, 0.5, 0.5});
    CHECK(r.lo == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(r.hi == doctest::Approx(0.5).epsilon(1e-15));
    r = lambda_range({1.0, 1.0, 0.5});
    CHECK(r.lo == doctest::Approx(1.0));
    CHECK(r.hi == doctest::Approx(1.0));
    r = lambda_range({0.5, 0.4, 0.5});
    CHECK(r.lo == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(r.hi == doctest::Approx(0.4).epsilon(1e-15));
}

TEST_CASE("response weights") {
    auto a = response_weights({0.5, 0.5, 0.5}, 0.5);
    CHECK(a[0] == doctest::Approx(0.5));
    CHECK(a[1] == doctest::Approx(0.5));
    CHECK(a[2] == doctest::Approx(0.0));
    CHECK(a[3] == doctest::Approx(0.0));
    a = response_weights({0.5, 0.5, 0.5}, 0.0);
    CHECK(a[0] == doctest::Approx(0.0));
    CHECK(a[2] == doctest::Approx(0.5));
    CHECK(a[3] == doctest::Approx(0.5));
    a = response_weights({0.5, 0.4, 0.5}, 0.2);
    CHECK(a[0] == doctest::Approx(0.2));
    CHECK(a[1] == doctest::Approx(0.3));
    CHECK(a[2] == doctest::Approx(0.3));
    CHECK(a[3] == doctest::Approx(0.2));
}

TEST_CASE("lambda membership tolerance") {
    const BinaryMarginal m{0.5, 0.4, 0.5};
    CHECK_NOTHROW(response_weights(m, 0.4 + 5e-13));  // clamped
    CHECK_THROWS_AS(response_weights(m, 0.41), LambdaOutOfRangeError);
    CHECK_THROWS_AS(response_weights(m, -0.01), LambdaOutOfRangeError);
    const ResponseWeights4 a = response_weights(m, 0.4 + 5e-13);
    for (double v : a) CHECK(v >= 0.0);
}

TEST_CASE("pns and bounds") {
    CHECK(pns_from_lambda({0.5, 0.5, 0.5}, 0.5) == doctest::Approx(0.0));
    CHECK(pns_from_lambda({0.5, 0.5, 0.5}, 0.0) == doctest::Approx(0.5));
    const BinaryMarginal m{0.5, 0.4, 0.5};
    CHECK(pns_from_lambda(m, 0.2) == doctest::Approx(response_weights(m, 0.2)[fn_id]));

    PnsBounds b = pns_bounds_single(m);
    CHECK(b.lo == doctest::Approx(0.1));
    CHECK(b.hi == doctest::Approx(0.5));
    b = pns_bounds_single({0.5, 0.5, 0.5});
    CHECK(b.lo == doctest::Approx(0.0));
    CHECK(b.hi == doctest::Approx(0.5));
    b = pns_bounds_single({1.0, 1.0, 0.5});
    CHECK(b.lo == doctest::Approx(0.0));
    CHECK(b.hi == doctest::Approx(0.0));
}

TEST_CASE("counterfactual influence") {
    CHECK(counterfactual_influence({0.5, 0.5, 0.5}, 0.5) == doctest::Approx(0.0));
    CHECK(counterfactual_influence({0.5, 0.5, 0.5}, 0.0) == doctest::Approx(1.0));
    const BinaryMarginal m{0.5, 0.4, 0.5};
    CHECK(counterfactual_influence(m, 0.2) == doctest::Approx(0.5));
    const ResponseWeights4 a = response_weights(m, 0.2);
    CHECK(counterfactual_influence(m, 0.2) == doctest::Approx(a[fn_id] + a[fn_not]));
}

TEST_CASE("non-monotonicity counterfactuals") {
    const BinaryMarginal m{0.5, 0.4, 0.5};
    CHECK(prob_sufficient_nonmonotonicity(m, 0.4) == doctest::Approx(0.0));
    CHECK(prob_sufficient_nonmonotonicity(m, 0.0) == doctest::Approx(0.8));
    CHECK_THROWS_AS(prob_sufficient_nonmonotonicity({1.0, 0.5, 0.5}, 0.5),
                    ConditioningEventNullError);
    CHECK(prob_necessary_nonmonotonicity(m, 0.4) == doctest::Approx(0.0));
    CHECK(prob_necessary_nonmonotonicity(m, 0.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(prob_necessary_nonmonotonicity({0.5, 0.0, 0.5}, 0.0),
                    ConditioningEventNullError);
}

TEST_CASE("random properties: probability vector, endpoints, slope") {
    std::mt19937_64 rng(20240817);
    for (int i = 0; i < 2000; ++i) {
        const BinaryMarginal m = testgen::random_marginal(rng);
        const double lam = testgen::random_lambda(rng, m);
        const ResponseWeights4 a = response_weights(m, lam);
        double sum = 0.0;
        for (double v : a) {
            CHECK(v >= -1e-12);
            sum += v;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));

        const LambdaInterval r = lambda_range(m);
        const PnsBounds b = pns_bounds_single(m);
        CHECK(b.lo == doctest::Approx(m.p_z0_w0 - r.hi).epsilon(1e-12));
        CHECK(b.hi == doctest::Approx(m.p_z0_w0 - r.lo).epsilon(1e-12));

        if (r.width() > 1e-6) {
            const double mid = 0.5 * (r.lo + r.hi);
            const double d = 0.25 * r.width();
            const double slope = (counterfactual_influence(m, mid + d) -
                                  counterfactual_influence(m, mid - d)) /
                                 (2.0 * d);
            CHECK(slope == doctest::Approx(-2.0).epsilon(1e-9));
        }
    }
}

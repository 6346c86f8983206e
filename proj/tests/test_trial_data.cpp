#include "doctest.h"

#include "causalmp/errors.hpp"
#include "causalmp/trial_data.hpp"

using namespace causalmp;

TEST_CASE("json trial summary round trip") {
    const std::string body =
        R"({"treatment":"aspirin","outcome":"recovered","n00":5,"n01":5,"n10":4,"n11":6})";
    const CountTable t = parse_trial_summary(body, TrialFormat::json);
    CHECK(t.n[0][0] == 5);
    CHECK(t.n[1][1] == 6);
    CHECK(t.treatment == "aspirin");
    CHECK(t.total() == 20);
    const std::string again = serialize_trial_summary(t, TrialFormat::json);
    const CountTable t2 = parse_trial_summary(again, TrialFormat::json);
    CHECK(t2.n == t.n);
    CHECK(t2.outcome == "recovered");
}

TEST_CASE("csv trial summary round trip") {
    const std::string body = "w,z,count\n0,0,5\n0,1,5\n1,0,4\n1,1,6\n";
    const CountTable t = parse_trial_summary(body, TrialFormat::csv);
    CHECK(t.n[1][0] == 4);
    CHECK(serialize_trial_summary(t, TrialFormat::csv) == body);
}

TEST_CASE("csv accepts CRLF and ignores blank lines") {
    const std::string body = "w,z,count\r\n0,0,5\r\n0,1,5\r\n\r\n1,0,4\r\n1,1,6\r\n";
    CHECK(parse_trial_summary(body, TrialFormat::csv).total() == 20);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_trial_summary("not json", TrialFormat::json), ParseError);
    CHECK_THROWS_AS(parse_trial_summary(R"({"n00":1,"n01":1,"n10":1})", TrialFormat::json),
                    ParseError);
    CHECK_THROWS_AS(parse_trial_summary(R"({"n00":0.5,"n01":1,"n10":1,"n11":1})",
                                        TrialFormat::json),
                    ParseError);
    CHECK_THROWS_AS(parse_trial_summary("x,y,n\n", TrialFormat::csv), ParseError);
    CHECK_THROWS_AS(parse_trial_summary("w,z,count\n0,0,1\n0,0,2\n0,1,1\n1,0,1\n1,1,1\n",
                                        TrialFormat::csv),
                    ParseError);
    CHECK_THROWS_AS(parse_trial_summary("w,z,count\n0,0,1\n", TrialFormat::csv),
                    ParseError);
    CHECK_THROWS_AS(parse_trial_summary("w,z,count\n0,2,1\n0,1,1\n1,0,1\n1,1,1\n",
                                        TrialFormat::csv),
                    ParseError);
}

TEST_CASE("count validation") {
    CHECK_THROWS_AS(parse_trial_summary(R"({"n00":-1,"n01":1,"n10":1,"n11":1})",
                                        TrialFormat::json),
                    NegativeCountError);
    CHECK_THROWS_AS(parse_trial_summary(R"({"n00":0,"n01":0,"n10":1,"n11":1})",
                                        TrialFormat::json),
                    EmptyArmError);
}

TEST_CASE("plug-in marginal from counts") {
    CountTable t;
    t.n = {{{5, 5}, {4, 6}}};
    const BinaryMarginal m = marginal_from_counts(t);
    CHECK(m.p_z0_w0 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(m.p_z0_w1 == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(m.p_w0 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(m.p_z0() == doctest::Approx(0.45).epsilon(1e-15));
}

TEST_CASE("marginal validation") {
    CHECK_THROWS_AS(validate_marginal({0.5, 0.5, 0.0}),
                    DegenerateTreatmentMarginalError);
    CHECK_THROWS_AS(validate_marginal({0.5, 0.5, 1.0}),
                    DegenerateTreatmentMarginalError);
    CHECK_THROWS_AS(validate_marginal({1.5, 0.5, 0.5}), OutOfRangeError);
    CHECK_NOTHROW(validate_marginal({0.0, 1.0, 0.5}));  // degenerate conditionals allowed
}

TEST_CASE("trivariate parse and validation") {
    const std::string body =
        R"({"p":[[[0.25,0],[0,0.25]],[[0,0.25],[0.25,0]]]})";
    const TrivariateTable t = parse_trivariate(body);
    CHECK(t.p[0][0][0] == doctest::Approx(0.25));
    CHECK_THROWS_AS(parse_trivariate(R"({"q":[]})"), ParseError);
    CHECK_THROWS_AS(parse_trivariate(R"({"p":[[[0.5,0],[0,0.25]],[[0,0.25],[0.25,0]]]})"),
                    OutOfRangeError);
}

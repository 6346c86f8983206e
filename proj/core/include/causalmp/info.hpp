#pragma once

#include <string>

#include "causalmp/trial_data.hpp"

namespace causalmp {

inline constexpr double kInfoTol = 1e-12;

// All quantities in bits. The two chain-rule decompositions of H(Z) are
// h_z = i_xz + i_nz_z_given_x = i_nz_z + i_xz_given_nz.
struct InfoReport {
    double h_z = 0.0;
    double i_xz = 0.0;
    double i_nz_z = 0.0;
    double i_xz_given_nz = 0.0;
    double i_nz_z_given_x = 0.0;
};

struct BitsInterval {
    double lo = 0.0;
    double hi = 0.0;
};

struct InfoBounds {
    BitsInterval nz_z;          // attainable I(N_Z:Z)
    BitsInterval xz_given_nz;   // attainable I(X:Z|N_Z)
};

enum class FalsificationCriterion { marginal_info, conditional_info };

struct FalsificationVerdict {
    bool falsified = false;
    FalsificationCriterion criterion = FalsificationCriterion::marginal_info;
    double observed = 0.0;
    double hypothesized = 0.0;
    double slack = 0.0;  // observed - hypothesized, signed
};

// Binary entropy in bits with the 0 log 0 = 0 convention.
double entropy_bits(double p);

// Information decomposition of the W->Z SCM at the given lambda. I(N_Z:Z)
// is computed both from the linear identity
// H(Z) - H(W) (p00 + p01 - 2 lambda) and by enumerating the joint
// P(Z, N_Z); the two must agree.
InfoReport info_report(const BinaryMarginal& m, double lambda);

// I(N_Z:Z) by direct enumeration of the 8-cell joint P(Z, N_Z).
double info_nz_z_enumerated(const BinaryMarginal& m, double lambda);

// Attainable ranges of the two decomposition components over lambda.
InfoBounds info_bounds(const BinaryMarginal& m);

// I(Y:Z) computed from the marginal.
double marginal_mutual_information(const BinaryMarginal& mY);

// I(X:Z|Y) computed from the full trivariate table.
double conditional_mutual_information(const TrivariateTable& joint);

// Falsify a hypothesised SCM by data-processing: Y is a function of the
// noise, so I(Y:Z) can never exceed the SCM's I(N_Z:Z).
FalsificationVerdict falsify_by_marginal_info(double hyp_i_nz_z,
                                              const BinaryMarginal& mY);

// Same idea conditionally: I(X:Z|Y) can never exceed I(X:Z|N_Z).
FalsificationVerdict falsify_by_conditional_info(double hyp_i_xz_given_nz,
                                                 const TrivariateTable& joint);

std::string info_report_to_json(const InfoReport& r);

}  // namespace causalmp

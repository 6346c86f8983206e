#include "causalmp/info.hpp"

#include <array>
#include <cmath>

#include "causalmp/canonical_scm.hpp"
#include "causalmp/errors.hpp"
#include "causalmp/serialize.hpp"
#include "json.hpp"

namespace causalmp {

namespace {

double plogp(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

}  // namespace

double entropy_bits(double p) { return -plogp(p) - plogp(1.0 - p); }

double info_nz_z_enumerated(const BinaryMarginal& m, double lambda) {
    const ResponseWeights4 a = response_weights(m, lambda);
    const double pw0 = m.p_w0;
    const double pw1 = 1.0 - pw0;
    // joint[z][n]: constants put all their mass on one z value; ID follows
    // W, NOT follows 1-W.
    double joint[2][4] = {};
    joint[0][fn_zero] = a[fn_zero];
    joint[1][fn_one] = a[fn_one];
    joint[0][fn_id] = pw0 * a[fn_id];
    joint[1][fn_id] = pw1 * a[fn_id];
    joint[0][fn_not] = pw1 * a[fn_not];
    joint[1][fn_not] = pw0 * a[fn_not];

    double pz[2] = {};
    double pn[4] = {};
    for (int z = 0; z < 2; ++z)
        for (int n = 0; n < 4; ++n) {
            pz[z] += joint[z][n];
            pn[n] += joint[z][n];
        }
    double mi = 0.0;
    for (int z = 0; z < 2; ++z)
        for (int n = 0; n < 4; ++n) {
            if (joint[z][n] > 0.0) {
                mi += joint[z][n] * std::log2(joint[z][n] / (pz[z] * pn[n]));
            }
        }
    return mi;
}

InfoReport info_report(const BinaryMarginal& m, double lambda) {
    const double influence = counterfactual_influence(m, lambda);
    InfoReport r;
    r.h_z = entropy_bits(m.p_z0());
    const double h_w = entropy_bits(m.p_w0);
    const double h_z_given_w = m.p_w0 * entropy_bits(m.p_z0_w0) +
                               (1.0 - m.p_w0) * entropy_bits(m.p_z0_w1);
    r.i_xz = r.h_z - h_z_given_w;
    r.i_nz_z = r.h_z - h_w * influence;
    const double direct = info_nz_z_enumerated(m, lambda);
    if (std::abs(direct - r.i_nz_z) > 1e-9) {
        throw Error("internal: noise-information identity violated");
    }
    r.i_xz_given_nz = r.h_z - r.i_nz_z;
    r.i_nz_z_given_x = r.h_z - r.i_xz;
    return r;
}

InfoBounds info_bounds(const BinaryMarginal& m) {
    validate_marginal(m);
    const double h_z = entropy_bits(m.p_z0());
    const double h_w = entropy_bits(m.p_w0);
    const double h_z_given_w = m.p_w0 * entropy_bits(m.p_z0_w0) +
                               (1.0 - m.p_w0) * entropy_bits(m.p_z0_w1);
    InfoBounds b;
    b.nz_z = {0.0, h_z_given_w};
    b.xz_given_nz = {h_z - h_z_given_w, h_w};
    return b;
}

double marginal_mutual_information(const BinaryMarginal& mY) {
    validate_marginal(mY);
    const double h_z = entropy_bits(mY.p_z0());
    const double h_z_given_y = mY.p_w0 * entropy_bits(mY.p_z0_w0) +
                               (1.0 - mY.p_w0) * entropy_bits(mY.p_z0_w1);
    return h_z - h_z_given_y;
}

double conditional_mutual_information(const TrivariateTable& joint) {
    joint.validate();
    double mi = 0.0;
    for (int y = 0; y < 2; ++y) {
        double py = 0.0;
        double px_y[2] = {};
        double pz_y[2] = {};
        for (int x = 0; x < 2; ++x)
            for (int z = 0; z < 2; ++z) {
                py += joint.p[x][y][z];
                px_y[x] += joint.p[x][y][z];
                pz_y[z] += joint.p[x][y][z];
            }
        if (py <= 0.0) continue;
        for (int x = 0; x < 2; ++x)
            for (int z = 0; z < 2; ++z) {
                const double pxz = joint.p[x][y][z];
                if (pxz > 0.0) {
                    mi += pxz * std::log2(pxz * py / (px_y[x] * pz_y[z]));
                }
            }
    }
    return mi;
}

namespace {

FalsificationVerdict make_verdict(FalsificationCriterion crit, double observed,
                                  double hyp) {
    FalsificationVerdict v;
    v.criterion = crit;
    v.observed = observed;
    v.hypothesized = hyp;
    v.slack = observed - hyp;
    v.falsified = v.slack > kInfoTol;
    return v;
}

}  // namespace

FalsificationVerdict falsify_by_marginal_info(double hyp_i_nz_z,
                                              const BinaryMarginal& mY) {
    return make_verdict(FalsificationCriterion::marginal_info,
                        marginal_mutual_information(mY), hyp_i_nz_z);
}

FalsificationVerdict falsify_by_conditional_info(double hyp_i_xz_given_nz,
                                                 const TrivariateTable& joint) {
    return make_verdict(FalsificationCriterion::conditional_info,
                        conditional_mutual_information(joint),
                        hyp_i_xz_given_nz);
}

std::string info_report_to_json(const InfoReport& r) {
    nlohmann::ordered_json j;
    j["h_z"] = round12(r.h_z);
    j["i_xz"] = round12(r.i_xz);
    j["i_nz_z"] = round12(r.i_nz_z);
    j["i_xz_given_nz"] = round12(r.i_xz_given_nz);
    j["i_nz_z_given_x"] = round12(r.i_nz_z_given_x);
    return j.dump();
}

}  // namespace causalmp

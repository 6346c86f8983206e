#pragma once

#include <array>
#include <cmath>
#include <random>

#include "causalmp/canonical_scm.hpp"
#include "causalmp/polytope.hpp"
#include "causalmp/trial_data.hpp"

namespace testgen {

using causalmp::BinaryMarginal;
using causalmp::ResponseWeights16;

inline BinaryMarginal random_marginal(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::uniform_real_distribution<double> interior(0.1, 0.9);
    BinaryMarginal m;
    m.p_z0_w0 = u01(rng);
    m.p_z0_w1 = u01(rng);
    m.p_w0 = interior(rng);
    return m;
}

inline double random_lambda(std::mt19937_64& rng, const BinaryMarginal& m) {
    const causalmp::LambdaInterval r = causalmp::lambda_range(m);
    std::uniform_real_distribution<double> u(r.lo, r.hi);
    return r.width() > 0.0 ? u(rng) : r.lo;
}

// Random Y-side marginal with one conditional pinned to 0 or 1. The case
// index selects which of the four degeneracy patterns is produced.
inline BinaryMarginal random_degenerate_marginal(std::mt19937_64& rng,
                                                 int degeneracy_case) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::uniform_real_distribution<double> interior(0.05, 0.95);
    BinaryMarginal m;
    m.p_w0 = interior(rng);
    const double u = u01(rng);
    switch (degeneracy_case & 3) {
        case 0: m.p_z0_w0 = u; m.p_z0_w1 = 0.0; break;  // p'01 = 0
        case 1: m.p_z0_w0 = 0.0; m.p_z0_w1 = u; break;  // p'00 = 0
        case 2: m.p_z0_w0 = 1.0; m.p_z0_w1 = u; break;  // p'00 = 1
        default: m.p_z0_w0 = u; m.p_z0_w1 = 1.0; break; // p'01 = 1
    }
    return m;
}

// A ground-truth SCM over {X,Y} -> Z: independent exogenous X and Y plus a
// Dirichlet-ish weight vector over the 16 response functions.
struct JointScm {
    double px0 = 0.5;
    double py0 = 0.5;
    ResponseWeights16 c{};

    int h(int k, int x, int y) const { return (k >> (2 * x + y)) & 1; }

    double px(int x) const { return x == 0 ? px0 : 1.0 - px0; }
    double py(int y) const { return y == 0 ? py0 : 1.0 - py0; }

    BinaryMarginal marginal_x() const {
        BinaryMarginal m;
        m.p_w0 = px0;
        for (int k = 0; k < 16; ++k)
            for (int y = 0; y < 2; ++y) {
                if (h(k, 0, y) == 0) m.p_z0_w0 += c[k] * py(y);
                if (h(k, 1, y) == 0) m.p_z0_w1 += c[k] * py(y);
            }
        return m;
    }

    BinaryMarginal marginal_y() const {
        BinaryMarginal m;
        m.p_w0 = py0;
        for (int k = 0; k < 16; ++k)
            for (int x = 0; x < 2; ++x) {
                if (h(k, x, 0) == 0) m.p_z0_w0 += c[k] * px(x);
                if (h(k, x, 1) == 0) m.p_z0_w1 += c[k] * px(x);
            }
        return m;
    }

    causalmp::TrivariateTable trivariate() const {
        causalmp::TrivariateTable t;
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int k = 0; k < 16; ++k)
                    t.p[x][y][h(k, x, y)] += px(x) * py(y) * c[k];
        return t;
    }

    // From the X-treatment point of view the noise is the pair (Y, K).
    // I((Y,K):Z) and I(X:Z|(Y,K)), both in bits.
    void true_noise_information(double& i_nz_z, double& i_xz_given_nz) const {
        // joint over (x, n, z) with n = 16*y + k
        std::array<std::array<std::array<double, 2>, 32>, 2> p{};
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int k = 0; k < 16; ++k)
                    p[x][16 * y + k][h(k, x, y)] += px(x) * py(y) * c[k];
        double pz[2] = {}, pn[32] = {}, pnz[32][2] = {};
        for (int x = 0; x < 2; ++x)
            for (int n = 0; n < 32; ++n)
                for (int z = 0; z < 2; ++z) {
                    pz[z] += p[x][n][z];
                    pn[n] += p[x][n][z];
                    pnz[n][z] += p[x][n][z];
                }
        i_nz_z = 0.0;
        for (int n = 0; n < 32; ++n)
            for (int z = 0; z < 2; ++z)
                if (pnz[n][z] > 0.0)
                    i_nz_z += pnz[n][z] * std::log2(pnz[n][z] / (pn[n] * pz[z]));
        i_xz_given_nz = 0.0;
        for (int n = 0; n < 32; ++n) {
            if (pn[n] <= 0.0) continue;
            double px_n[2] = {}, pz_n[2] = {};
            for (int x = 0; x < 2; ++x)
                for (int z = 0; z < 2; ++z) {
                    px_n[x] += p[x][n][z];
                    pz_n[z] += p[x][n][z];
                }
            for (int x = 0; x < 2; ++x)
                for (int z = 0; z < 2; ++z)
                    if (p[x][n][z] > 0.0)
                        i_xz_given_nz +=
                            p[x][n][z] *
                            std::log2(p[x][n][z] * pn[n] / (px_n[x] * pz_n[z]));
        }
    }
};

inline JointScm random_joint_scm(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> interior(0.1, 0.9);
    std::exponential_distribution<double> ex(1.0);
    JointScm s;
    s.px0 = interior(rng);
    s.py0 = interior(rng);
    double sum = 0.0;
    for (double& v : s.c) {
        v = ex(rng);
        sum += v;
    }
    for (double& v : s.c) v /= sum;
    return s;
}

}  // namespace testgen

#pragma once

#include <string>
#include <vector>

#include "causalmp/polytope.hpp"
#include "causalmp/trial_data.hpp"

namespace causalmp {

inline constexpr double kMaxEntResidualTol = 1e-7;
inline constexpr double kMaxEntGradTol = 1e-8;
inline constexpr int kMaxEntIterCap = 10000;

struct MaxEntResult {
    ResponseWeights16 c{};
    double entropy_bits = 0.0;
    double lambda_x = 0.0;
    int iterations = 0;
    double residual = 0.0;
};

// Entropy of a weight vector in bits, 0 log 0 = 0.
double entropy_of_weights(const ResponseWeights16& c);

// The unique entropy maximiser over the consistency polytope, found by
// Newton iteration on the Lagrangian dual of the equality system after
// eliminating coordinates the polytope forces to zero.
MaxEntResult maxent_scm(const PolytopeSpec& spec);

// MaxEnt over the treatment-side constraints only (value rows for P(Z|X)
// and normalisation), i.e. before any Y-side evidence arrives. The value
// rows average over the Y population, so p_y0 must be supplied; the
// two-marginal polytope for (mX, mY) is a subset of this feasible set when
// p_y0 = mY.p_w0, making this an entropy upper bound for that merge.
MaxEntResult maxent_baseline(const BinaryMarginal& mX, double p_y0 = 0.5);

// Entropy-maximising lambda for a single marginal: the stationary point of
// H(a(lambda)) is lambda = p00 * p01. Returns the pinned value when the
// interval is a point.
double maxent_lambda_single(const BinaryMarginal& m);

struct EvidenceEntry {
    std::string id;
    bool compatible = true;
    double baseline_entropy = 0.0;   // maxent_baseline at this candidate's p_y0
    double entropy_after = 0.0;      // meaningless when incompatible
    double entropy_reduction = 0.0;  // +infinity when incompatible
};

struct EvidenceRanking {
    double baseline_entropy = 0.0;  // reference baseline at p_y0 = 0.5
    std::string baseline_note;
    std::vector<EvidenceEntry> entries;  // sorted by reduction, descending
};

// Rank candidate Y-side datasets by how much they shrink the MaxEnt
// entropy relative to knowing only the treatment-side trial. Each
// candidate is scored against maxent_baseline(mX, candidate p_y0), so a
// compatible candidate's reduction is always nonnegative.
EvidenceRanking rank_evidence(const BinaryMarginal& mX,
                              const std::vector<BinaryMarginal>& candidates);

std::string maxent_to_json(const MaxEntResult& r);

}  // namespace causalmp

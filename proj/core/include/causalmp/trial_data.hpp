#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace causalmp {

inline constexpr double kProbTol = 1e-12;

// 2x2 contingency table of a single trial; first index is the treatment
// value, second the outcome value.
struct CountTable {
    std::array<std::array<std::int64_t, 2>, 2> n{};
    std::string treatment = "w";
    std::string outcome = "z";

    std::int64_t total() const {
        return n[0][0] + n[0][1] + n[1][0] + n[1][1];
    }
    void validate() const;
};

// Joint distribution of one binary treatment W and the binary outcome Z,
// stored as the two outcome conditionals plus the treatment marginal.
struct BinaryMarginal {
    double p_z0_w0 = 0.0;  // P(Z=0 | W=0)
    double p_z0_w1 = 0.0;  // P(Z=0 | W=1)
    double p_w0 = 0.0;     // P(W=0)

    // P(Z=0) implied by this marginal.
    double p_z0() const { return p_w0 * p_z0_w0 + (1.0 - p_w0) * p_z0_w1; }
    void validate() const;
};

// Full distribution over (X, Y, Z), indexed p[x][y][z].
struct TrivariateTable {
    std::array<std::array<std::array<double, 2>, 2>, 2> p{};
    void validate() const;
};

enum class TrialFormat { json, csv };

CountTable parse_trial_summary(std::string_view payload, TrialFormat format);
std::string serialize_trial_summary(const CountTable& t, TrialFormat format);

TrivariateTable parse_trivariate(std::string_view payload);

// Maximum-likelihood plug-in estimates from a count table.
BinaryMarginal marginal_from_counts(const CountTable& t);

void validate_marginal(const BinaryMarginal& m);

}  // namespace causalmp

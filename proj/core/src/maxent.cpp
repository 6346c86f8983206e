#include "causalmp/maxent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "causalmp/bounds.hpp"
#include "causalmp/errors.hpp"
#include "causalmp/linalg.hpp"
#include "causalmp/simplex.hpp"
#include "causalmp/serialize.hpp"
#include "json.hpp"

namespace causalmp {

double entropy_of_weights(const ResponseWeights16& c) {
    double h = 0.0;
    for (double v : c) {
        if (v > 0.0) h -= v * std::log2(v);
    }
    return h;
}

namespace {

// Indices whose weight the constraints force to zero, found by maximising
// each coordinate separately. Throws Incompatible when the feasible set is
// empty.
std::vector<int> forced_zeros_by_lp(const EqualitySystem& eq) {
    std::vector<int> zeros;
    for (int k = 0; k < 16; ++k) {
        std::array<double, 16> obj{};
        obj[k] = 1.0;
        LpSolve r;
        try {
            r = solve_lp_over(obj, eq, LpSense::max);
        } catch (const InfeasibleError&) {
            throw IncompatibleError(
                "Incompatible: no joint SCM reproduces both marginals");
        }
        if (r.value <= kLpTol) zeros.push_back(k);
    }
    return zeros;
}

// Entropy maximiser over an explicit equality system; spec supplies the A
// matrix for the induced lambda and its feasible band.
MaxEntResult maxent_over(const PolytopeSpec& spec, const EqualitySystem& eq) {
    const std::vector<int> zeros = forced_zeros_by_lp(eq);
    std::vector<int> free_idx;
    {
        std::vector<bool> forced(16, false);
        for (int k : zeros) forced[k] = true;
        for (int k = 0; k < 16; ++k)
            if (!forced[k]) free_idx.push_back(k);
    }
    const std::size_t nf = free_idx.size();

    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    for (std::size_t r = 0; r < eq.rows.size(); ++r) {
        std::vector<double> row(nf);
        for (std::size_t j = 0; j < nf; ++j) row[j] = eq.rows[r][free_idx[j]];
        rows.push_back(std::move(row));
        rhs.push_back(eq.rhs[r]);
    }
    const RrefResult red = rref(std::move(rows), std::move(rhs));
    if (!red.consistent) {
        throw IncompatibleError(
            "Incompatible: equality system inconsistent after elimination");
    }
    const std::size_t m = red.rows.size();

    MaxEntResult out;
    std::vector<double> cfree(nf, 0.0);

    if (m >= nf) {
        // No degrees of freedom left: the polytope is a single point.
        if (!solve_dense(red.rows, red.rhs, cfree) && nf > 0) {
            throw Error("internal: point-identified system is singular");
        }
    } else {
        // Newton on the dual. The maximiser has the Gibbs form
        // c = exp(E^T mu - 1); the dual gradient is the constraint residual.
        std::vector<double> mu(m, 0.0);
        auto eval = [&](const std::vector<double>& muv,
                        std::vector<double>& c) {
            double g = 0.0;
            for (std::size_t j = 0; j < nf; ++j) {
                double e = -1.0;
                for (std::size_t r = 0; r < m; ++r)
                    e += muv[r] * red.rows[r][j];
                c[j] = std::exp(e);
                g += c[j];
            }
            for (std::size_t r = 0; r < m; ++r) g -= muv[r] * red.rhs[r];
            return g;
        };
        double gval = eval(mu, cfree);
        int iter = 0;
        for (; iter < kMaxEntIterCap; ++iter) {
            std::vector<double> grad(m, 0.0);
            for (std::size_t r = 0; r < m; ++r) {
                for (std::size_t j = 0; j < nf; ++j)
                    grad[r] += red.rows[r][j] * cfree[j];
                grad[r] -= red.rhs[r];
            }
            double gnorm = 0.0;
            for (double v : grad) gnorm = std::max(gnorm, std::abs(v));
            if (gnorm <= kMaxEntGradTol) break;

            std::vector<std::vector<double>> H(m, std::vector<double>(m, 0.0));
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t s = r; s < m; ++s) {
                    double v = 0.0;
                    for (std::size_t j = 0; j < nf; ++j)
                        v += red.rows[r][j] * red.rows[s][j] * cfree[j];
                    H[r][s] = H[s][r] = v;
                }
            for (std::size_t r = 0; r < m; ++r) H[r][r] += 1e-12;

            std::vector<double> step;
            if (!solve_dense(H, grad, step)) {
                throw NoConvergenceError(
                    "NoConvergence: singular dual Hessian");
            }
            double t = 1.0;
            std::vector<double> trial(m), ctrial(nf);
            for (int bt = 0; bt < 60; ++bt) {
                for (std::size_t r = 0; r < m; ++r)
                    trial[r] = mu[r] - t * step[r];
                const double gt = eval(trial, ctrial);
                if (gt < gval) break;
                t *= 0.5;
            }
            mu = trial;
            cfree = ctrial;
            gval = eval(mu, cfree);
        }
        out.iterations = iter;
    }

    for (std::size_t j = 0; j < nf; ++j) {
        out.c[free_idx[j]] = std::max(0.0, cfree[j]);
    }
    out.residual = 0.0;
    for (std::size_t r = 0; r < eq.rows.size(); ++r) {
        double lhs = 0.0;
        for (int k = 0; k < 16; ++k) lhs += eq.rows[r][k] * out.c[k];
        out.residual = std::max(out.residual, std::abs(lhs - eq.rhs[r]));
    }
    if (out.residual > kMaxEntResidualTol) {
        throw NoConvergenceError("NoConvergence: residual " +
                                 std::to_string(out.residual));
    }
    out.entropy_bits = entropy_of_weights(out.c);
    for (int k = 0; k < 16; ++k) out.lambda_x += spec.A[0][k] * out.c[k];
    // The lambda band is implied by the equality system, so this should
    // never fire; keep it as a guard against solver drift.
    if (out.lambda_x < spec.lamX.lo - kMaxEntResidualTol ||
        out.lambda_x > spec.lamX.hi + kMaxEntResidualTol) {
        throw Error("internal: MaxEnt lambda escaped its feasible band");
    }
    out.lambda_x = std::clamp(out.lambda_x, spec.lamX.lo, spec.lamX.hi);
    return out;
}

}  // namespace

MaxEntResult maxent_scm(const PolytopeSpec& spec) {
    return maxent_over(spec, effective_constraints(spec));
}

MaxEntResult maxent_baseline(const BinaryMarginal& mX, double p_y0) {
    validate_marginal(mX);
    if (p_y0 < 0.0 || p_y0 > 1.0) {
        throw OutOfRangeError("OutOfRange: p_y0 must lie in [0, 1]");
    }
    // Before any Y-side evidence the only equality constraints are the
    // treatment-side value rows and normalisation. Those rows average over
    // the Y population, hence the explicit p_y0; the conditionals of the
    // marginal handed to build_polytope are irrelevant because only the A
    // rows are kept.
    BinaryMarginal flat;
    flat.p_z0_w0 = mX.p_z0();
    flat.p_z0_w1 = mX.p_z0();
    flat.p_w0 = p_y0;
    const PolytopeSpec spec = build_polytope(mX, flat);
    const EqualitySystem full = full_constraints(spec);
    EqualitySystem eq;
    for (int r : {0, 1, 2, 6}) {
        eq.rows.push_back(full.rows[r]);
        eq.rhs.push_back(full.rhs[r]);
    }
    return maxent_over(spec, eq);
}

double maxent_lambda_single(const BinaryMarginal& m) {
    const LambdaInterval r = lambda_range(m);
    if (r.width() <= kProbTol) return r.lo;
    // Stationarity of H(a(lambda)): a0 a1 = a2 a3, i.e.
    // lambda (1 - p00 - p01 + lambda) = (p00 - lambda)(p01 - lambda).
    return m.p_z0_w0 * m.p_z0_w1;
}

EvidenceRanking rank_evidence(const BinaryMarginal& mX,
                              const std::vector<BinaryMarginal>& candidates) {
    validate_marginal(mX);
    EvidenceRanking ranking;
    ranking.baseline_note =
        "baseline: MaxEnt over the treatment-side constraints only, "
        "evaluated at each candidate's P(Y=0)";
    ranking.baseline_entropy = maxent_baseline(mX).entropy_bits;

    for (std::size_t i = 0; i < candidates.size(); ++i) {
        EvidenceEntry e;
        e.id = std::to_string(i);
        e.baseline_entropy =
            maxent_baseline(mX, candidates[i].p_w0).entropy_bits;
        try {
            const MaxEntResult r =
                maxent_scm(build_polytope(mX, candidates[i]));
            e.entropy_after = r.entropy_bits;
            e.entropy_reduction = e.baseline_entropy - r.entropy_bits;
        } catch (const IncompatibleError&) {
            e.compatible = false;
            e.entropy_reduction = std::numeric_limits<double>::infinity();
        }
        ranking.entries.push_back(std::move(e));
    }
    std::stable_sort(ranking.entries.begin(), ranking.entries.end(),
                     [](const EvidenceEntry& a, const EvidenceEntry& b) {
                         return a.entropy_reduction > b.entropy_reduction;
                     });
    return ranking;
}

std::string maxent_to_json(const MaxEntResult& r) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json c = nlohmann::json::array();
    for (double v : r.c) c.push_back(round12(v));
    j["c"] = c;
    j["entropy_bits"] = round12(r.entropy_bits);
    j["lambda_x"] = round12(r.lambda_x);
    j["iterations"] = r.iterations;
    return j.dump();
}

}  // namespace causalmp

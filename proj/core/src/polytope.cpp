#include "causalmp/polytope.hpp"

#include <cmath>

#include "causalmp/errors.hpp"
#include "causalmp/serialize.hpp"
#include "json.hpp"

namespace causalmp {

namespace {

constexpr double kM[3][4] = {
    {1.0, -1.0, 0.0, 0.0},
    {1.0, 0.0, 1.0, 0.0},
    {1.0, 0.0, 0.0, 1.0},
};

int pair_to_fn(int f0, int f1) {
    if (f0 == 0 && f1 == 0) return fn_zero;
    if (f0 == 1 && f1 == 1) return fn_one;
    if (f0 == 0 && f1 == 1) return fn_id;
    return fn_not;
}

bool near(double a, double b) { return std::abs(a - b) <= kProbTol; }

// Value of lambda_Y implied by a degenerate Y-side marginal.
double pinned_lambda_y(double q00, double q01) {
    if (near(q00, 0.0) || near(q01, 0.0)) return 0.0;
    if (near(q00, 1.0)) return q01;
    return q00;  // q01 == 1
}

}  // namespace

BivariateFunctionTable enumerate_bivariate_functions() {
    BivariateFunctionTable t;
    for (int k = 0; k < 16; ++k)
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) t.h[k][x][y] = (k >> (2 * x + y)) & 1;
    return t;
}

int project(int k, Axis axis, int value) {
    int f0, f1;
    if (axis == Axis::Y) {
        f0 = (k >> value) & 1;        // h(0, value)
        f1 = (k >> (2 + value)) & 1;  // h(1, value)
    } else {
        f0 = (k >> (2 * value)) & 1;      // h(value, 0)
        f1 = (k >> (2 * value + 1)) & 1;  // h(value, 1)
    }
    return pair_to_fn(f0, f1);
}

PolytopeSpec build_polytope(const BinaryMarginal& mX, const BinaryMarginal& mY) {
    validate_marginal(mX);
    validate_marginal(mY);
    PolytopeSpec s;
    s.pX0 = mX.p_w0;
    s.pY0 = mY.p_w0;
    s.lamX = lambda_range(mX);
    s.lamY = lambda_range(mY);
    s.a0 = {0.0, 1.0 - mX.p_z0_w0 - mX.p_z0_w1, mX.p_z0_w0, mX.p_z0_w1};
    s.b0 = {0.0, 1.0 - mY.p_z0_w0 - mY.p_z0_w1, mY.p_z0_w0, mY.p_z0_w1};
    for (int k = 0; k < 16; ++k) {
        for (int y = 0; y < 2; ++y) {
            const double py = y == 0 ? s.pY0 : 1.0 - s.pY0;
            s.A[project(k, Axis::Y, y)][k] += py;
        }
        for (int x = 0; x < 2; ++x) {
            const double px = x == 0 ? s.pX0 : 1.0 - s.pX0;
            s.B[project(k, Axis::X, x)][k] += px;
        }
    }
    return s;
}

bool is_member(const ResponseWeights16& c, const PolytopeSpec& spec, double tol) {
    double sum = 0.0;
    for (double v : c) {
        if (v < -tol) return false;
        sum += v;
    }
    if (std::abs(sum - 1.0) > tol) return false;

    std::array<double, 4> Ac{}, Bc{};
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 16; ++k) {
            Ac[j] += spec.A[j][k] * c[k];
            Bc[j] += spec.B[j][k] * c[k];
        }
    // Value bands: components 0 and 1 of a(lambda) grow with lambda,
    // components 2 and 3 shrink.
    for (int j = 0; j < 4; ++j) {
        const double alo =
            spec.a0[j] + (j < 2 ? spec.lamX.lo : -spec.lamX.hi);
        const double ahi =
            spec.a0[j] + (j < 2 ? spec.lamX.hi : -spec.lamX.lo);
        if (Ac[j] < alo - tol || Ac[j] > ahi + tol) return false;
        const double blo =
            spec.b0[j] + (j < 2 ? spec.lamY.lo : -spec.lamY.hi);
        const double bhi =
            spec.b0[j] + (j < 2 ? spec.lamY.hi : -spec.lamY.lo);
        if (Bc[j] < blo - tol || Bc[j] > bhi + tol) return false;
    }

    const EqualitySystem eq = full_constraints(spec);
    for (std::size_t r = 0; r < eq.rows.size(); ++r) {
        double lhs = 0.0;
        for (int k = 0; k < 16; ++k) lhs += eq.rows[r][k] * c[k];
        if (std::abs(lhs - eq.rhs[r]) > tol) return false;
    }
    return true;
}

EqualitySystem full_constraints(const PolytopeSpec& spec) {
    EqualitySystem eq;
    for (const auto* side : {&spec.A, &spec.B}) {
        const ResponseWeights4& base = side == &spec.A ? spec.a0 : spec.b0;
        for (int r = 0; r < 3; ++r) {
            std::array<double, 16> row{};
            double d = 0.0;
            for (int j = 0; j < 4; ++j) {
                for (int k = 0; k < 16; ++k) row[k] += kM[r][j] * (*side)[j][k];
                d += kM[r][j] * base[j];
            }
            eq.rows.push_back(row);
            eq.rhs.push_back(d);
        }
    }
    std::array<double, 16> ones;
    ones.fill(1.0);
    eq.rows.push_back(ones);
    eq.rhs.push_back(1.0);
    return eq;
}

bool y_side_degenerate(const PolytopeSpec& spec, double tol) {
    const double q00 = spec.b0[2];
    const double q01 = spec.b0[3];
    return q00 <= tol || q00 >= 1.0 - tol || q01 <= tol || q01 >= 1.0 - tol;
}

std::vector<int> forced_zero_indices(const PolytopeSpec& spec) {
    if (!y_side_degenerate(spec)) {
        throw NotDegenerateError(
            "NotDegenerate: Y-side conditionals are interior to (0,1)");
    }
    const double q00 = spec.b0[2];
    const double q01 = spec.b0[3];
    const double lam = pinned_lambda_y(q00, q01);
    const ResponseWeights4 b = {lam, 1.0 - q00 - q01 + lam, q00 - lam,
                                q01 - lam};
    std::vector<int> zeros;
    for (int k = 0; k < 16; ++k) {
        for (int j = 0; j < 4; ++j) {
            if (spec.B[j][k] > kProbTol && b[j] <= kProbTol) {
                zeros.push_back(k);
                break;
            }
        }
    }
    return zeros;
}

EqualitySystem effective_constraints(const PolytopeSpec& spec) {
    if (!y_side_degenerate(spec)) return full_constraints(spec);
    // A degenerate Y-side marginal pins lambda_Y and hence the whole vector
    // b. The B-value rows then say exactly which weights must vanish, so we
    // keep the A-value rows and the sum row and add one row per forced zero.
    EqualitySystem eq;
    const EqualitySystem full = full_constraints(spec);
    for (int r = 0; r < 3; ++r) {
        eq.rows.push_back(full.rows[r]);
        eq.rhs.push_back(full.rhs[r]);
    }
    eq.rows.push_back(full.rows[6]);
    eq.rhs.push_back(full.rhs[6]);
    for (int k : forced_zero_indices(spec)) {
        std::array<double, 16> row{};
        row[k] = 1.0;
        eq.rows.push_back(row);
        eq.rhs.push_back(0.0);
    }
    return eq;
}

std::string dump_polytope_json(const PolytopeSpec& spec) {
    nlohmann::ordered_json j;
    auto mat = [](const Matrix4x16& m) {
        nlohmann::ordered_json rows = nlohmann::json::array();
        for (const auto& r : m) {
            nlohmann::ordered_json row = nlohmann::json::array();
            for (double v : r) row.push_back(round12(v));
            rows.push_back(row);
        }
        return rows;
    };
    auto vec4 = [](const ResponseWeights4& v) {
        nlohmann::ordered_json a = nlohmann::json::array();
        for (double x : v) a.push_back(round12(x));
        return a;
    };
    j["A"] = mat(spec.A);
    j["B"] = mat(spec.B);
    j["a0"] = vec4(spec.a0);
    j["b0"] = vec4(spec.b0);
    j["lambda_x"] = {round12(spec.lamX.lo), round12(spec.lamX.hi)};
    j["lambda_y"] = {round12(spec.lamY.lo), round12(spec.lamY.hi)};
    j["p_y0"] = round12(spec.pY0);
    j["p_x0"] = round12(spec.pX0);
    return j.dump();
}

}  // namespace causalmp

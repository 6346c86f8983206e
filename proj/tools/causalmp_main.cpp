#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "causalmp/bounds.hpp"
#include "causalmp/errors.hpp"
#include "causalmp/info.hpp"
#include "causalmp/maxent.hpp"
#include "causalmp/oracle.hpp"
#include "causalmp/polytope.hpp"
#include "causalmp/serialize.hpp"
#include "causalmp/trial_data.hpp"

namespace {

using namespace causalmp;
using nlohmann::ordered_json;

struct GlobalOpts {
    bool json = false;
    bool verify = false;
    bool dump_polytope = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

BinaryMarginal load_marginal(const std::string& path) {
    const std::string body = read_file(path);
    const bool csv = path.size() > 4 && path.substr(path.size() - 4) == ".csv";
    const CountTable t = parse_trial_summary(
        body, csv ? TrialFormat::csv : TrialFormat::json);
    return marginal_from_counts(t);
}

void emit(const ordered_json& j, const GlobalOpts& g) {
    if (g.json) {
        std::cout << j.dump() << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

ordered_json interval_json(double lo, double hi) {
    return ordered_json::array({round12(lo), round12(hi)});
}

int run_bounds(const std::string& xpath, const std::string& ypath,
               const GlobalOpts& g) {
    const BinaryMarginal mX = load_marginal(xpath);
    const BinaryMarginal mY = load_marginal(ypath);
    const PnsBounds single = pns_bounds_single(mX);
    const LambdaInterval lamS = lambda_range(mX);

    ordered_json out;
    out["single_pns"] = interval_json(single.lo, single.hi);
    out["single_lambda"] = interval_json(lamS.lo, lamS.hi);
    try {
        const TightenedBounds tb = tightened_pns_bounds(mX, mY);
        out["lambda"] = interval_json(tb.lambda.lo, tb.lambda.hi);
        out["pns"] = interval_json(tb.pns.lo, tb.pns.hi);
        out["compatible"] = true;
        out["binding_case"] = binding_case_name(tb.binding_case);
        if (g.verify) {
            const LambdaInterval lp = restricted_lambda_range(mX, mY);
            const bool lp_ok = std::abs(lp.lo - tb.lambda.lo) <= 1e-9 &&
                               std::abs(lp.hi - tb.lambda.hi) <= 1e-9;
            ordered_json v;
            v["lp_lambda"] = interval_json(lp.lo, lp.hi);
            v["lp_agrees"] = lp_ok;
            try {
                const GridSpec gs;
                const LambdaInterval gr =
                    grid_lambda_range(build_polytope(mX, mY), gs);
                const double slop = 1.0 / gs.resolution + 1e-9;
                v["grid_lambda"] = interval_json(gr.lo, gr.hi);
                v["grid_agrees"] = std::abs(gr.lo - tb.lambda.lo) <= slop &&
                                   std::abs(gr.hi - tb.lambda.hi) <= slop;
            } catch (const DimensionTooHighError&) {
                v["grid_lambda"] = nullptr;
            }
            out["verify"] = v;
            if (!lp_ok) {
                emit(out, g);
                std::cerr << "verification failed\n";
                return 1;
            }
        }
        if (g.dump_polytope) {
            out["polytope"] =
                ordered_json::parse(dump_polytope_json(build_polytope(mX, mY)));
        }
        emit(out, g);
        return 0;
    } catch (const IncompatibleError& e) {
        out["compatible"] = false;
        out["binding_case"] = "infeasible";
        out["violated"] = e.violated;
        emit(out, g);
        return 2;
    }
}

int run_compat(const std::string& xpath, const std::string& ypath,
               const GlobalOpts& g) {
    const BinaryMarginal mX = load_marginal(xpath);
    const BinaryMarginal mY = load_marginal(ypath);
    ordered_json out;
    const bool degen = degeneracy_profile(mY).any();
    out["degenerate"] = degen;
    bool compatible = true;
    std::vector<std::string> violated;
    if (degen) {
        const CompatibilityResult r = degenerate_compatibility(mX, mY);
        compatible = r.compatible;
        violated = r.violated;
    } else {
        try {
            restricted_lambda_range(mX, mY);
        } catch (const IncompatibleError& e) {
            compatible = false;
            violated = e.violated;
        }
    }
    out["compatible"] = compatible;
    out["violated"] = violated;
    if (g.verify && degen) {
        bool lp_feasible = true;
        try {
            restricted_lambda_range(mX, mY);
        } catch (const IncompatibleError&) {
            lp_feasible = false;
        }
        out["verify"] = ordered_json{{"lp_feasible", lp_feasible},
                                     {"agrees", lp_feasible == compatible}};
    }
    emit(out, g);
    return compatible ? 0 : 2;
}

int run_maxent(const std::string& xpath, const std::string& ypath,
               const GlobalOpts& g) {
    const BinaryMarginal mX = load_marginal(xpath);
    if (ypath.empty()) {
        const double lam = maxent_lambda_single(mX);
        ordered_json out;
        out["lambda_x"] = round12(lam);
        out["pns"] = round12(mX.p_z0_w0 - lam);
        emit(out, g);
        return 0;
    }
    const BinaryMarginal mY = load_marginal(ypath);
    try {
        const PolytopeSpec spec = build_polytope(mX, mY);
        const MaxEntResult r = maxent_scm(spec);
        ordered_json out = ordered_json::parse(maxent_to_json(r));
        out["pns"] = round12(mX.p_z0_w0 - r.lambda_x);
        if (g.verify) {
            try {
                const double gridH = grid_max_entropy(spec, GridSpec{});
                out["verify"] = ordered_json{
                    {"grid_entropy_bits", round12(gridH)},
                    {"agrees", std::abs(gridH - r.entropy_bits) <= 2e-3}};
            } catch (const DimensionTooHighError&) {
                out["verify"] = nullptr;
            }
        }
        if (g.dump_polytope) {
            out["polytope"] = ordered_json::parse(dump_polytope_json(spec));
        }
        emit(out, g);
        return 0;
    } catch (const IncompatibleError& e) {
        ordered_json out;
        out["compatible"] = false;
        out["violated"] = e.violated;
        emit(out, g);
        return 2;
    }
}

ordered_json verdict_json(const FalsificationVerdict& v) {
    ordered_json out;
    out["falsified"] = v.falsified;
    out["criterion"] = v.criterion == FalsificationCriterion::marginal_info
                           ? "marginal_info"
                           : "conditional_info";
    out["observed"] = round12(v.observed);
    out["hypothesized"] = round12(v.hypothesized);
    out["slack"] = round12(v.slack);
    return out;
}

int run_info(const std::string& trial, double lambda, bool have_lambda,
             double hyp_nz, bool have_hyp_nz, double hyp_xz, bool have_hyp_xz,
             const std::string& trivariate, const GlobalOpts& g) {
    if (have_lambda) {
        if (trial.empty()) throw ParseError("info --lambda needs a trial file");
        const InfoReport r = info_report(load_marginal(trial), lambda);
        emit(ordered_json::parse(info_report_to_json(r)), g);
        return 0;
    }
    if (have_hyp_nz) {
        if (trial.empty()) {
            throw ParseError("info --hyp-i-nz-z needs the Y trial file");
        }
        const FalsificationVerdict v =
            falsify_by_marginal_info(hyp_nz, load_marginal(trial));
        emit(verdict_json(v), g);
        return v.falsified ? 3 : 0;
    }
    if (have_hyp_xz) {
        if (trivariate.empty()) {
            throw ParseError("info --hyp-i-xz-given-nz needs --trivariate");
        }
        const TrivariateTable t = parse_trivariate(read_file(trivariate));
        const FalsificationVerdict v = falsify_by_conditional_info(hyp_xz, t);
        emit(verdict_json(v), g);
        return v.falsified ? 3 : 0;
    }
    throw ParseError("info: give --lambda, --hyp-i-nz-z or --hyp-i-xz-given-nz");
}

struct AxisRange {
    double start = 0.0;
    double stop = 0.0;
    int steps = 0;
    double at(int i) const {
        return start + (stop - start) * i / (steps - 1);
    }
};

AxisRange parse_axis(const nlohmann::json& j, const std::string& name,
                     bool interior) {
    if (!j.contains(name)) throw ParseError("sweep config missing " + name);
    AxisRange r;
    try {
        r.start = j[name].at("start").get<double>();
        r.stop = j[name].at("stop").get<double>();
        r.steps = j[name].at("steps").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("sweep config axis " + name + ": " + e.what());
    }
    if (r.steps < 2) throw ParseError("sweep axis " + name + " needs steps >= 2");
    if (r.start < 0.0 || r.stop > 1.0 || r.start > r.stop) {
        throw ParseError("sweep axis " + name + " must stay within [0,1]");
    }
    if (interior && (r.start <= 0.0 || r.stop >= 1.0)) {
        throw ParseError("sweep axis " + name + " must be interior to (0,1)");
    }
    return r;
}

int run_sweep(const std::string& config_path, const std::string& out_path,
              const GlobalOpts& g) {
    nlohmann::json cfg;
    try {
        cfg = nlohmann::json::parse(read_file(config_path));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed sweep config: ") + e.what());
    }
    BinaryMarginal mX;
    try {
        mX.p_z0_w0 = cfg.at("mx").at("p00").get<double>();
        mX.p_z0_w1 = cfg.at("mx").at("p01").get<double>();
        mX.p_w0 = cfg.at("mx").at("px0").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("sweep config mx: ") + e.what());
    }
    validate_marginal(mX);
    const AxisRange py0 = parse_axis(cfg, "py0", true);
    const AxisRange pp00 = parse_axis(cfg, "pp00", false);
    const AxisRange pp01 = parse_axis(cfg, "pp01", false);

    const LambdaInterval lamS = lambda_range(mX);
    const int total = py0.steps * pp00.steps * pp01.steps;
    std::vector<std::string> rows(total);

    auto cell = [&](int idx) {
        const int i0 = idx / (pp00.steps * pp01.steps);
        const int i1 = (idx / pp01.steps) % pp00.steps;
        const int i2 = idx % pp01.steps;
        BinaryMarginal mY;
        mY.p_w0 = py0.at(i0);
        mY.p_z0_w0 = pp00.at(i1);
        mY.p_z0_w1 = pp01.at(i2);
        std::string row = format_double(mY.p_w0) + "," +
                          format_double(mY.p_z0_w0) + "," +
                          format_double(mY.p_z0_w1) + ",";
        try {
            const TightenedBounds tb = tightened_pns_bounds(mX, mY);
            const MaxEntResult me = maxent_scm(build_polytope(mX, mY));
            row += "1," + format_double(me.entropy_bits) + "," +
                   format_double(tb.lambda.lo) + "," +
                   format_double(tb.lambda.hi) + "," +
                   format_double(me.lambda_x) + ",";
            if (lamS.width() > kProbTol) {
                row += format_double((lamS.hi - me.lambda_x) / lamS.width());
            }
        } catch (const IncompatibleError&) {
            row += "0,,,,,";
        }
        rows[idx] = row;
    };

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < hw; ++t) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < total; i = next.fetch_add(1))
                cell(i);
        });
    }
    for (auto& t : pool) t.join();

    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot open output file: " + out_path);
    out << "p_y0,pp00,pp01,compatible,entropy_bits,lambda_min_restricted,"
           "lambda_max,maxent_lambda,maxent_lambda_normalized\n";
    for (const std::string& r : rows) out << r << "\n";
    out.close();

    ordered_json summary;
    summary["rows"] = total;
    summary["out"] = out_path;
    emit(summary, g);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Merge two randomized-trial marginals sharing an outcome: "
                 "bounds on probabilities of causation, compatibility "
                 "checks, information-theoretic falsification, and MaxEnt "
                 "model selection"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json", g.json, "compact single-line JSON output");
    app.add_flag("--verify", g.verify, "cross-check results with brute-force oracles");
    app.add_flag("--dump-polytope", g.dump_polytope, "include the constraint polytope in the output");

    std::string xpath, ypath, trivariate, config_path, out_path;
    double lambda = 0.0, hyp_nz = 0.0, hyp_xz = 0.0;

    auto* bounds = app.add_subcommand("bounds", "tightened lambda and PNS bounds");
    bounds->add_option("trial_x", xpath, "X-treatment trial file")->required();
    bounds->add_option("trial_y", ypath, "Y-treatment trial file")->required();

    auto* compat = app.add_subcommand("compat", "joint-SCM compatibility check");
    compat->add_option("trial_x", xpath, "X-treatment trial file")->required();
    compat->add_option("trial_y", ypath, "Y-treatment trial file")->required();

    auto* maxent = app.add_subcommand("maxent", "maximum-entropy SCM selection");
    maxent->add_option("trial_x", xpath, "X-treatment trial file")->required();
    maxent->add_option("trial_y", ypath, "optional Y-treatment trial file");

    auto* info = app.add_subcommand("info", "information reports and falsification");
    info->add_option("trial", xpath, "trial file (X for --lambda, Y for --hyp-i-nz-z)");
    auto* lam_opt = info->add_option("--lambda", lambda, "decompose H(Z) at this lambda");
    auto* nz_opt = info->add_option("--hyp-i-nz-z", hyp_nz, "hypothesised I(N_Z:Z) in bits");
    auto* xz_opt = info->add_option("--hyp-i-xz-given-nz", hyp_xz, "hypothesised I(X:Z|N_Z) in bits");
    info->add_option("--trivariate", trivariate, "trivariate P(X,Y,Z) JSON file");

    auto* sweep = app.add_subcommand("sweep", "grid sweep over Y-side marginals, CSV output");
    sweep->add_option("config", config_path, "sweep config JSON")->required();
    sweep->add_option("out", out_path, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(bounds)) return run_bounds(xpath, ypath, g);
        if (app.got_subcommand(compat)) return run_compat(xpath, ypath, g);
        if (app.got_subcommand(maxent)) return run_maxent(xpath, ypath, g);
        if (app.got_subcommand(info)) {
            return run_info(xpath, lambda, lam_opt->count() > 0, hyp_nz,
                            nz_opt->count() > 0, hyp_xz, xz_opt->count() > 0,
                            trivariate, g);
        }
        if (app.got_subcommand(sweep)) return run_sweep(config_path, out_path, g);
    } catch (const IncompatibleError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 1;
}

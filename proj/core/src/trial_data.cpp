#include "causalmp/trial_data.hpp"

#include <cmath>
#include <sstream>

#include "causalmp/errors.hpp"
#include "json.hpp"

namespace causalmp {

void CountTable::validate() const {
    for (int w = 0; w < 2; ++w) {
        for (int z = 0; z < 2; ++z) {
            if (n[w][z] < 0) {
                throw NegativeCountError("NegativeCount: n[" + std::to_string(w) +
                                         "][" + std::to_string(z) + "] < 0");
            }
        }
        if (n[w][0] + n[w][1] == 0) {
            throw EmptyArmError("EmptyArm: treatment arm w=" + std::to_string(w) +
                                " has no observations");
        }
    }
}

void BinaryMarginal::validate() const { validate_marginal(*this); }

void TrivariateTable::validate() const {
    double sum = 0.0;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) {
                if (p[x][y][z] < -kProbTol) {
                    throw OutOfRangeError("OutOfRange: trivariate cell negative");
                }
                sum += p[x][y][z];
            }
    if (std::abs(sum - 1.0) > kProbTol) {
        throw OutOfRangeError("OutOfRange: trivariate cells do not sum to 1");
    }
}

namespace {

CountTable parse_json_counts(std::string_view payload) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(payload);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON trial summary: ") + e.what());
    }
    CountTable t;
    const char* keys[2][2] = {{"n00", "n01"}, {"n10", "n11"}};
    for (int w = 0; w < 2; ++w)
        for (int z = 0; z < 2; ++z) {
            if (!j.contains(keys[w][z]) || !j[keys[w][z]].is_number_integer()) {
                throw ParseError(std::string("missing or non-integer key ") + keys[w][z]);
            }
            t.n[w][z] = j[keys[w][z]].get<std::int64_t>();
        }
    if (j.contains("treatment")) t.treatment = j["treatment"].get<std::string>();
    if (j.contains("outcome")) t.outcome = j["outcome"].get<std::string>();
    t.validate();
    return t;
}

CountTable parse_csv_counts(std::string_view payload) {
    std::istringstream in{std::string(payload)};
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty CSV trial summary");
    // Header "w,z,count", then one row per cell.
    auto strip = [](std::string s) {
        while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
        return s;
    };
    if (strip(line) != "w,z,count") {
        throw ParseError("CSV trial summary must start with header \"w,z,count\"");
    }
    CountTable t;
    bool seen[2][2] = {};
    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty()) continue;
        int w = 0, z = 0;
        long long cnt = 0;
        char c1 = 0, c2 = 0;
        std::istringstream row(line);
        if (!(row >> w >> c1 >> z >> c2 >> cnt) || c1 != ',' || c2 != ',') {
            throw ParseError("malformed CSV row: " + line);
        }
        if (w < 0 || w > 1 || z < 0 || z > 1) {
            throw ParseError("CSV cell indices must be 0 or 1: " + line);
        }
        if (seen[w][z]) throw ParseError("duplicate CSV cell: " + line);
        seen[w][z] = true;
        t.n[w][z] = cnt;
    }
    for (int w = 0; w < 2; ++w)
        for (int z = 0; z < 2; ++z)
            if (!seen[w][z]) throw ParseError("CSV trial summary is missing a cell");
    t.validate();
    return t;
}

}  // namespace

CountTable parse_trial_summary(std::string_view payload, TrialFormat format) {
    return format == TrialFormat::json ? parse_json_counts(payload)
                                       : parse_csv_counts(payload);
}

std::string serialize_trial_summary(const CountTable& t, TrialFormat format) {
    if (format == TrialFormat::json) {
        nlohmann::ordered_json j;
        j["treatment"] = t.treatment;
        j["outcome"] = t.outcome;
        j["n00"] = t.n[0][0];
        j["n01"] = t.n[0][1];
        j["n10"] = t.n[1][0];
        j["n11"] = t.n[1][1];
        return j.dump();
    }
    std::ostringstream out;
    out << "w,z,count\n";
    for (int w = 0; w < 2; ++w)
        for (int z = 0; z < 2; ++z) out << w << "," << z << "," << t.n[w][z] << "\n";
    return out.str();
}

TrivariateTable parse_trivariate(std::string_view payload) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(payload);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed trivariate JSON: ") + e.what());
    }
    if (!j.contains("p")) throw ParseError("trivariate JSON must contain key \"p\"");
    TrivariateTable t;
    try {
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int z = 0; z < 2; ++z)
                    t.p[x][y][z] = j["p"].at(x).at(y).at(z).get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("trivariate \"p\" must be a 2x2x2 array: ") + e.what());
    }
    t.validate();
    return t;
}

BinaryMarginal marginal_from_counts(const CountTable& t) {
    t.validate();
    const double n0 = static_cast<double>(t.n[0][0] + t.n[0][1]);
    const double n1 = static_cast<double>(t.n[1][0] + t.n[1][1]);
    BinaryMarginal m;
    m.p_z0_w0 = static_cast<double>(t.n[0][0]) / n0;
    m.p_z0_w1 = static_cast<double>(t.n[1][0]) / n1;
    m.p_w0 = n0 / (n0 + n1);
    validate_marginal(m);
    return m;
}

void validate_marginal(const BinaryMarginal& m) {
    auto in_unit = [](double v) { return v >= -kProbTol && v <= 1.0 + kProbTol; };
    if (!in_unit(m.p_z0_w0) || !in_unit(m.p_z0_w1) || !in_unit(m.p_w0)) {
        throw OutOfRangeError("OutOfRange: marginal field outside [0,1]");
    }
    if (m.p_w0 <= kProbTol || m.p_w0 >= 1.0 - kProbTol) {
        throw DegenerateTreatmentMarginalError(
            "DegenerateTreatmentMarginal: treatment marginal must be interior to (0,1)");
    }
}

}  // namespace causalmp

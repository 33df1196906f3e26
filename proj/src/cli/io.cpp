#include "tq/cli/claims.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace tq {

namespace {

Rational field_value(const nlohmann::json& j, const std::string& field) {
    const auto& v = j.at(field);
    if (v.is_number_integer())
        return Rational(v.get<long>());
    if (!v.is_string())
        throw NonRational("field " + field + ": expected a \"p/q\" string, got " + v.dump());
    try {
        return parse_rational(v.get<std::string>());
    } catch (const NonRational& e) {
        throw NonRational("field " + field + ": " + e.what());
    }
}

}  // namespace

QuarticCoefficients parse_input_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw InputParseError("", "input must be a JSON object");
    std::array<Rational, 12> v;
    for (std::size_t i = 0; i < 12; ++i) {
        std::string name = QuarticCoefficients::names()[i];
        if (!j.contains(name))
            throw InputParseError(name, "missing field " + name);
        v[i] = field_value(j, name);
    }
    Rational delta = j.contains("delta") ? field_value(j, "delta") : Rational(1);
    return QuarticCoefficients::from_values(v, delta);
}

QuarticCoefficients parse_input(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputParseError("", "cannot open " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputParseError("", path + ": " + e.what());
    }
    return parse_input_json(j);
}

QuarticCoefficients reference_sample() {
    return QuarticCoefficients::from_values({2, -3, 5, 7, -11, 13, -17, 19, 23, 29, -31, 37});
}

int resolve_jobs(const std::optional<int>& explicit_jobs) {
    if (explicit_jobs)
        return *explicit_jobs;
    if (const char* env = std::getenv("TETRAQUARTIC_JOBS")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw InputParseError("TETRAQUARTIC_JOBS", std::string("TETRAQUARTIC_JOBS is not an integer: ") + env);
        }
    }
    return 0;
}

nlohmann::json to_json(const std::vector<ClaimRecord>& claims, const std::optional<QuarticCoefficients>& input) {
    nlohmann::json j;
    if (input) {
        nlohmann::json in;
        auto v = input->values();
        for (std::size_t i = 0; i < 12; ++i)
            in[QuarticCoefficients::names()[i]] = to_string(v[i]);
        in["delta"] = to_string(input->delta);
        j["input"] = in;
        GenericityFlags g = genericity(*input);
        nlohmann::json flags;
        flags["all_nonzero"] = g.all_nonzero;
        flags["vertex_nondegenerate"] = g.vertex_nondegenerate;
        flags["cross_ratios_distinct"] = g.cross_ratios_distinct;
        j["genericity"] = flags;
    }
    nlohmann::json arr = nlohmann::json::array();
    std::size_t passed = 0, failed = 0, unverified = 0;
    for (const auto& c : claims) {
        arr.push_back({{"id", c.claim_id},
                       {"topic", c.topic},
                       {"criterion", std::to_string(c.criterion)},
                       {"expected", c.expected},
                       {"computed", c.computed},
                       {"status", to_string(c.status)}});
        passed += c.status == ClaimStatus::Pass;
        failed += c.status == ClaimStatus::Fail;
        unverified += c.status == ClaimStatus::Unverified;
    }
    j["claims"] = arr;
    j["summary"] = {{"pass", std::to_string(passed)},
                    {"fail", std::to_string(failed)},
                    {"unverified", std::to_string(unverified)}};
    return j;
}

std::string render_text(const std::vector<ClaimRecord>& claims, const std::optional<QuarticCoefficients>& input) {
    std::ostringstream os;
    if (input) {
        os << "input:";
        auto v = input->values();
        for (std::size_t i = 0; i < 12; ++i)
            os << ' ' << QuarticCoefficients::names()[i] << '=' << to_string(v[i]);
        os << " delta=" << to_string(input->delta) << '\n';
        GenericityFlags g = genericity(*input);
        os << "genericity: nonzero=" << g.all_nonzero << " vertices=" << g.vertex_nondegenerate[0]
           << g.vertex_nondegenerate[1] << g.vertex_nondegenerate[2] << g.vertex_nondegenerate[3]
           << " distinct-cross-ratios=" << g.cross_ratios_distinct << '\n';
    }
    std::size_t failed = 0;
    for (const auto& c : claims) {
        os << '[' << to_string(c.status) << "] " << c.claim_id << ": " << c.computed;
        if (c.status != ClaimStatus::Pass)
            os << " (expected " << c.expected << ')';
        os << '\n';
        failed += c.status == ClaimStatus::Fail;
    }
    os << claims.size() << " claims, " << failed << " failed\n";
    return os.str();
}

}  // namespace tq

#pragma once

#include "tq/quartic/quartic.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tq {

class InputParseError : public std::runtime_error {
public:
    InputParseError(std::string field, const std::string& what)
        : std::runtime_error(what), field(std::move(field)) {}
    std::string field;  // empty for syntax errors
};

enum class Subcommand { Lattice, Discform, Isometry, Quartic, Report };
enum class OutputFormat { Text, Json };

struct RunConfig {
    Subcommand subcommand = Subcommand::Report;
    std::optional<std::string> input_path;
    OutputFormat output_format = OutputFormat::Text;
    std::optional<int> parallelism;
};

enum class ClaimStatus { Pass, Fail, Unverified };
std::string to_string(ClaimStatus s);

struct ClaimRecord {
    std::string claim_id;
    std::string topic;
    int criterion = 0;  // acceptance criterion number, 1..12
    std::string expected;
    std::string computed;
    ClaimStatus status = ClaimStatus::Fail;
};

/// Fields a0..d3 as "p/q" strings (integers are accepted as JSON numbers),
/// optional delta defaulting to 1.
QuarticCoefficients parse_input_json(const nlohmann::json& j);
QuarticCoefficients parse_input(const std::string& path);
/// The frozen reference sample used when no input file is given.
QuarticCoefficients reference_sample();

std::vector<ClaimRecord> lattice_claims();
std::vector<ClaimRecord> discform_claims(int threads);
std::vector<ClaimRecord> isometry_claims();
std::vector<ClaimRecord> quartic_claims(const QuarticCoefficients& c, int threads);
/// Randomized invariant checks, 100 instances each, fixed seeds.
std::vector<ClaimRecord> property_claims();

/// Claims of the chosen subcommand, sorted by claim_id.
std::vector<ClaimRecord> run_report(const RunConfig& cfg);

/// Worker count: the explicit value, else TETRAQUARTIC_JOBS, else 0 (runtime default).
int resolve_jobs(const std::optional<int>& explicit_jobs);

bool all_pass(const std::vector<ClaimRecord>& claims);
nlohmann::json to_json(const std::vector<ClaimRecord>& claims, const std::optional<QuarticCoefficients>& input);
std::string render_text(const std::vector<ClaimRecord>& claims, const std::optional<QuarticCoefficients>& input);

/// Computed IDs missing from the manifest and, when `complete`, manifest IDs
/// that were not computed. Empty when the two agree.
std::vector<std::string> manifest_mismatch(const std::vector<ClaimRecord>& claims, const nlohmann::json& manifest,
                                           bool complete);

}  // namespace tq

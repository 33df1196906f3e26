#include "tq/cli/claims.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Exact verification report for tetrahedral quartic K3 surfaces"};
    app.fallthrough();
    app.require_subcommand(1);

    tq::RunConfig cfg;
    std::string input, format = "text", manifest = std::string(TQ_DATA_DIR) + "/claims_manifest.json";
    int jobs = 0;
    app.add_option("--input", input, "coefficient file (JSON, fields a0..d3 as \"p/q\" strings)");
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    auto* jobs_opt = app.add_option("--jobs", jobs, "worker threads (falls back to TETRAQUARTIC_JOBS)")
                         ->check(CLI::NonNegativeNumber);
    app.add_option("--manifest", manifest, "claim manifest to check IDs against");

    const std::pair<const char*, tq::Subcommand> subs[] = {{"lattice", tq::Subcommand::Lattice},
                                                            {"discform", tq::Subcommand::Discform},
                                                            {"isometry", tq::Subcommand::Isometry},
                                                            {"quartic", tq::Subcommand::Quartic},
                                                            {"report", tq::Subcommand::Report}};
    for (const auto& [name, sub] : subs) {
        auto s = sub;
        app.add_subcommand(name, std::string("run the ") + name + " claims")->callback([&cfg, s] { cfg.subcommand = s; });
    }
    CLI11_PARSE(app, argc, argv);

    if (!input.empty())
        cfg.input_path = input;
    if (*jobs_opt)
        cfg.parallelism = jobs;
    cfg.output_format = format == "json" ? tq::OutputFormat::Json : tq::OutputFormat::Text;

    try {
        std::optional<tq::QuarticCoefficients> coeffs;
        if (cfg.subcommand == tq::Subcommand::Quartic || cfg.subcommand == tq::Subcommand::Report)
            coeffs = cfg.input_path ? tq::parse_input(*cfg.input_path) : tq::reference_sample();
        auto claims = tq::run_report(cfg);

        bool manifest_ok = true;
        std::ifstream mf(manifest);
        if (mf) {
            auto missing = tq::manifest_mismatch(claims, nlohmann::json::parse(mf),
                                                 cfg.subcommand == tq::Subcommand::Report);
            for (const auto& id : missing)
                std::cerr << "claim id not in both report and manifest: " << id << '\n';
            manifest_ok = missing.empty();
        } else {
            std::cerr << "warning: manifest " << manifest << " not found, ids unchecked\n";
        }

        if (cfg.output_format == tq::OutputFormat::Json)
            std::cout << tq::to_json(claims, coeffs).dump(2) << '\n';
        else
            std::cout << tq::render_text(claims, coeffs);
        return tq::all_pass(claims) && manifest_ok ? 0 : 1;
    } catch (const tq::InputParseError& e) {
        std::cerr << "input error";
        if (!e.field.empty())
            std::cerr << " (field " << e.field << ")";
        std::cerr << ": " << e.what() << '\n';
        return 2;
    } catch (const tq::NonRational& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    }
}

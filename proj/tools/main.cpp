#include "abelaut/error.hpp"
#include "abelaut/report/run.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

int exit_code_for(const abelaut::Error& e) {
    using abelaut::ErrorKind;
    switch (e.kind()) {
        case ErrorKind::parse_error:
        case ErrorKind::domain_error:
        case ErrorKind::invalid_conductor:
        case ErrorKind::unsupported_degree:
        case ErrorKind::bad_reduction:
        case ErrorKind::invalid_complex_structure:
        case ErrorKind::arity_mismatch:
            return 2;
        default:
            return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the degree-p surface and the abelian-variety torsor constructions"};
    app.set_version_flag("--version", abelaut::kToolVersion);
    app.require_subcommand(1);

    abelaut::RunConfig config;
    std::string lambda_text = "1";
    std::string emit = "text";
    std::vector<std::uint32_t> q_list;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--emit", emit, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--seed", config.seed, "Seed for the randomized checks");
        sub->add_flag("--timing", config.timing, "Include wall-clock timing in the report");
    };
    auto add_surface = [&](CLI::App* sub) {
        sub->add_option("--p", config.p, "Prime degree (>= 7)");
        sub->add_option("--lambda", lambda_text, "Deformation parameter (rational)");
        sub->add_option("--q", q_list, "Reduction prime for the smoothness certificate (repeatable)");
    };

    auto* surface = app.add_subcommand("verify-surface", "Smoothness, automorphism group and freeness of the surface");
    add_surface(surface);
    add_common(surface);

    auto* torus = app.add_subcommand("verify-torus", "Endomorphisms, automorphisms and fixed points of a lattice torus");
    torus->add_option("--input", config.input_path, "Torus or decomposition JSON")->required();
    torus->add_option("--p", config.p, "Prime for condition (*) when a decomposition is given");
    torus->add_option("--entry-bound", config.entry_bound, "Entry bound for automorphism enumeration");
    add_common(torus);

    auto* construction = app.add_subcommand("verify-construction", "Torsor datum, descent and rigidity of candidates");
    construction->add_option("--input", config.input_path, "Construction JSON")->required();
    construction->add_option("--candidates", config.candidates_path, "Candidate automorphisms JSON");
    construction->add_option("--p", config.p, "Prime (overridden by the input file)");
    construction->add_option("--entry-bound", config.entry_bound, "Entry bound for automorphism enumeration");
    add_common(construction);

    auto* full = app.add_subcommand("full-paper", "Every pipeline on the shipped fixtures");
    add_surface(full);
    full->add_option("--entry-bound", config.entry_bound, "Entry bound for automorphism enumeration");
    add_common(full);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (surface->parsed()) config.command = abelaut::Command::verify_surface;
    if (torus->parsed()) config.command = abelaut::Command::verify_torus;
    if (construction->parsed()) config.command = abelaut::Command::verify_construction;
    if (full->parsed()) config.command = abelaut::Command::full_paper;
    config.emit = emit == "json" ? abelaut::EmitFormat::json : abelaut::EmitFormat::text;

    try {
        config.lambda_given = surface->count("--lambda") + full->count("--lambda") > 0;
        try {
            config.lambda = abelaut::Rational::parse(lambda_text);
        } catch (const abelaut::Error& e) {
            std::cerr << "error: --lambda: " << e.what() << "\n";
            return 2;
        }
        config.q_list = q_list;
        const auto report = abelaut::run(config);
        std::cout << abelaut::render_report(report, config.emit);
        return report.passed ? 0 : 1;
    } catch (const abelaut::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

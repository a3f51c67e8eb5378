#pragma once

#include "abelaut/report/json_io.hpp"
#include "abelaut/scalars/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace abelaut {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "abelaut-report/1";
inline constexpr std::uint64_t kDefaultSeed = 20240611;

enum class Command { verify_surface, verify_torus, verify_construction, full_paper };
enum class EmitFormat { text, json };

std::string to_string(Command c);

struct RunConfig {
    Command command = Command::full_paper;
    unsigned p = 7;
    Rational lambda = Rational(1);
    bool lambda_given = false;
    std::vector<std::uint32_t> q_list;
    std::string input_path;
    std::string candidates_path;
    std::uint64_t seed = kDefaultSeed;
    EmitFormat emit = EmitFormat::text;
    bool timing = false;
    int entry_bound = 3;
};

struct VerificationReport {
    bool passed = false;
    Json body;  // schema, config echo, per-check results
};

// Throws Error / ParseError for configuration and input problems.
VerificationReport run(const RunConfig& config);

std::string render_report(const VerificationReport& report, EmitFormat format);

// Pipelines, usable on their own.
Json surface_section(const RunConfig& config, bool& passed);
Json lemma_section(unsigned p, std::uint64_t seed, bool& passed);
Json torus_section(const SystemInput& system, unsigned p, int entry_bound, bool& passed);
Json construction_section(const SystemInput& system, unsigned p, std::optional<std::vector<FiberAutomorphism>> candidates,
                          int entry_bound, bool& passed);

}  // namespace abelaut

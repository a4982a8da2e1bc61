#pragma once

#include <string>

#include "semispace/mtsi.hpp"
#include "semispace/twsi.hpp"

namespace semispace::report {

enum class Format { Csv, Json, Svg };

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct RunConfig {
    std::size_t atoms = 0;         // 0 = infer from the actual state
    std::string actual = "xy";     // complete conjunctive state
    Format format = Format::Csv;
    RayScheme ray_scheme = RayScheme::Ratio;
};

struct Context {
    Universe universe;
    World actual;
};

// Parses the actual state, derives the atom order from its literal order
// and the world from the literal polarities.
Context make_context(const RunConfig& cfg);

// One row per message: id, canonical formula, worlds-true count,
// true-atom count. CSV or JSON.
std::string cmd_table(const RunConfig& cfg);

// CONT, TSSI and MTSI assessments of one formula side by side. TSSI
// partiality (NotConjunctive / NotTrueAtActual) is reported as a field.
std::string cmd_assess(const RunConfig& cfg, const std::string& formula_text);

// All placements, as CSV, JSON, or an SVG quarter-disc scatter.
std::string cmd_space(const RunConfig& cfg);

// TSSI criteria plus the MTSI verification. Returns 0 when the TSSI
// violations are exactly {M3, M4} and MTSI passes everything, else 1.
int cmd_verify(const RunConfig& cfg, std::string& out);

std::string cmd_bcp_demo(const RunConfig& cfg);

std::string cmd_guards_demo();

// Exit codes shared with the CLI.
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

}  // namespace semispace::report

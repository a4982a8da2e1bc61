#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semispace/rational.hpp"
#include "semispace/tssi.hpp"
#include "semispace/worlds.hpp"

namespace semispace {

class OutOfSphere : public std::runtime_error {
public:
    OutOfSphere() : std::runtime_error("placement lies outside the unit sphere") {}
};

class DegenerateProfile : public std::runtime_error {
public:
    DegenerateProfile() : std::runtime_error("literal profile with t = f = 0 has no angle") {}
};

// How literal profiles map to rays between the true and false axes.
// Ratio is normative: q = f/(t+f). Paper reproduces the uniform
// ray-spacing pi/(4n-2); it relabels the rays only, so it can move the
// split between Phi_u and Phi_m but never r or Phi_i.
enum class RayScheme { Ratio, Paper };

// Position of one message in the quarter-disc measure space.
struct MtsiPlacement {
    long long k = 0;           // raw world-count difference, kept even under the extreme rule
    long long m = 0;
    bool extreme = false;      // tautology/contradiction: r forced to 1
    Rational r;                // radius k/m, or 1 for extremes
    Rational q;                // angle fraction, theta = q * pi/2
    Rational phi_i;            // 1 - r^2, always exact
    std::optional<Rational> phi_u_exact;  // present when cos^2(q*pi/2) is exact
    std::optional<Rational> phi_m_exact;
    double theta_t = 0.0;      // r * cos(q*pi/2)
    double theta_f = 0.0;      // r * sin(q*pi/2)
    double phi_u = 0.0;        // theta_t^2
    double phi_m = 0.0;        // r^2 - phi_u, keeps the partition exact
    double phi_i_approx = 0.0;
};

struct RadiusResult {
    long long k = 0;
    Rational r;
    bool extreme = false;
};

// k = |trueWorlds| - 1 when the infon is true at w, else the count of
// false worlds minus 1; tautology and contradiction are forced to r = 1.
RadiusResult radius(const Message& msg, World w, const Universe& u);

Rational angle(const LiteralProfile& profile, RayScheme scheme, std::size_t n_atoms);

MtsiPlacement place(const Message& msg, World w, const Universe& u,
                    RayScheme scheme = RayScheme::Ratio);

double metric_informativeness(const MtsiPlacement& p);

// cos^2(q * pi/2) as an exact rational, for the q values where one exists.
std::optional<Rational> exact_cos_squared(const Rational& q);

struct MirrorReport {
    MtsiPlacement placement;
    MtsiPlacement complement_placement;
    bool informativeness_equal = false;
    bool angles_mirrored = false;  // q(not sigma) = 1 - q(sigma)
};

MirrorReport mirror_check(const Message& msg, World w, const Universe& u);

// Exhaustive verification over all 2^m messages (n <= 4):
//  M1: only w's minterm and its complement reach Phi_i = 1
//  M2/M3: exactly the tautology and contradiction reach Phi_i = 0
//  M4/M5: every other message has 0 < Phi_u + Phi_m < 1
//  E: Phi_i + Phi_u + Phi_m = 1 for every message
//  MIRROR: Phi_i equal across every complement pair
std::vector<CriterionReport> verify_mtsi(const Universe& u, World w,
                                         ExecutionPolicy policy = ExecutionPolicy::Parallel);

// Same checks with the extreme rule switched off; documents why the rule
// exists (the tautology would keep Phi_i = 7/16 for n = 2).
std::vector<CriterionReport> verify_mtsi_without_extreme_rule(const Universe& u, World w);

// Placements for all enumerated messages, in enumeration order.
std::vector<MtsiPlacement> place_all(const std::vector<Message>& messages, World w,
                                     const Universe& u, RayScheme scheme,
                                     ExecutionPolicy policy = ExecutionPolicy::Parallel);

// The two-guards scenario: a truth-teller (identity) and a liar
// (negation) over "the money is behind Door 1".
struct GuardsCase {
    bool identified_scenario = false;
    int money_door = 0;   // 1 or 2
    int asked_guard = 0;  // 1 = liar, 2 = truth-teller
    int reported_door = 0;
    int chosen_door = 0;
    bool success = false;
};

struct GuardsDemo {
    std::vector<GuardsCase> cases;  // all 8
    int successes = 0;
};

GuardsDemo guards_demo();

}  // namespace semispace

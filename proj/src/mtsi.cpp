#include "semispace/mtsi.hpp"

#include <cmath>
#include <map>

namespace semispace {

namespace {

const double kPi = 3.14159265358979323846;

MtsiPlacement place_impl(const Message& msg, World w, const Universe& u, RayScheme scheme,
                         bool extreme_rule) {
    const std::size_t count = msg.true_worlds.count();
    MtsiPlacement p;
    p.m = static_cast<long long>(u.m);

    if (count == 0 || count == u.m) {
        p.k = p.m - 1;  // raw difference, as in the paper's worked example
        p.extreme = extreme_rule;
        p.r = extreme_rule ? Rational(1) : Rational(p.k, p.m);
    } else if (msg.true_worlds.test(w.index)) {
        p.k = static_cast<long long>(count) - 1;
        p.r = Rational(p.k, p.m);
    } else {
        p.k = static_cast<long long>(u.m - count) - 1;
        p.r = Rational(p.k, p.m);
    }

    p.q = angle(literal_profile(msg, w, u), scheme, u.n);
    p.phi_i = Rational(1) - p.r * p.r;

    const double r = to_double(p.r);
    const double theta = to_double(p.q) * kPi / 2;
    p.theta_t = r * std::cos(theta);
    p.theta_f = r * std::sin(theta);

    const Rational r2 = p.r * p.r;
    if (auto c2 = exact_cos_squared(p.q)) {
        p.phi_u_exact = r2 * *c2;
        p.phi_m_exact = r2 * (Rational(1) - *c2);
        p.phi_u = to_double(*p.phi_u_exact);
        p.phi_m = to_double(*p.phi_m_exact);
    } else {
        p.phi_u = p.theta_t * p.theta_t;
        p.phi_m = to_double(r2) - p.phi_u;
    }
    p.phi_i_approx = to_double(p.phi_i);
    return p;
}

std::vector<CriterionReport> verify_impl(const Universe& u, World w, bool extreme_rule,
                                         ExecutionPolicy policy) {
    if (u.n > Universe::kEnumerateCap)
        throw UniverseTooLarge(u.n, Universe::kEnumerateCap);

    std::vector<Message> messages = enumerate_messages(u, policy);
    std::vector<MtsiPlacement> placements(messages.size());
#pragma omp parallel for schedule(dynamic, 256) if (policy == ExecutionPolicy::Parallel)
    for (std::int64_t i = 0; i < std::int64_t(messages.size()); ++i)
        placements[i] = place_impl(messages[i], w, u, RayScheme::Ratio, extreme_rule);

    std::map<std::uint64_t, std::size_t> by_mask;
    for (std::size_t i = 0; i < messages.size(); ++i)
        by_mask[messages[i].true_worlds.low_bits()] = i;

    auto label = [&](std::size_t i) { return render(*messages[i].source); };

    std::vector<CriterionReport> reports;

    // Only w's minterm and its complement are maximally informative.
    {
        CriterionReport r{"M1", true, {}};
        for (std::size_t i = 0; i < messages.size(); ++i) {
            std::size_t count = messages[i].true_worlds.count();
            bool is_minterm = count == 1 && messages[i].true_worlds.test(w.index);
            bool is_minterm_complement = count == u.m - 1 && !messages[i].true_worlds.test(w.index);
            bool maximal = placements[i].phi_i == Rational(1);
            if (maximal != (is_minterm || is_minterm_complement))
                r.witnesses.push_back({label(i), placements[i].phi_i});
        }
        r.satisfied = r.witnesses.empty();
        reports.push_back(std::move(r));
    }

    // Exactly the tautology and the contradiction sit at zero informativeness.
    {
        CriterionReport r{"M2/M3", true, {}};
        for (std::size_t i = 0; i < messages.size(); ++i) {
            bool is_extreme = messages[i].is_contradiction() || messages[i].is_tautology();
            bool zero = placements[i].phi_i == Rational(0);
            if (is_extreme != zero)
                r.witnesses.push_back({label(i), placements[i].phi_i});
        }
        r.satisfied = r.witnesses.empty();
        reports.push_back(std::move(r));
    }

    // Every message other than the four special ones has 0 < Phi_u + Phi_m < 1.
    {
        CriterionReport r{"M4/M5", true, {}};
        for (std::size_t i = 0; i < messages.size(); ++i) {
            if (placements[i].phi_i == Rational(0) || placements[i].phi_i == Rational(1))
                continue;
            Rational resultant = placements[i].r * placements[i].r;
            if (!(resultant > Rational(0) && resultant < Rational(1)))
                r.witnesses.push_back({label(i), resultant});
        }
        r.satisfied = r.witnesses.empty();
        reports.push_back(std::move(r));
    }

    // The measures partition unity, exactly.
    {
        CriterionReport r{"E", true, {}};
        for (std::size_t i = 0; i < messages.size(); ++i) {
            const MtsiPlacement& p = placements[i];
            if (p.phi_i + p.r * p.r != Rational(1))
                r.witnesses.push_back({label(i), p.phi_i + p.r * p.r});
            if (p.phi_u_exact &&
                p.phi_i + *p.phi_u_exact + *p.phi_m_exact != Rational(1))
                r.witnesses.push_back({label(i), p.phi_i + *p.phi_u_exact + *p.phi_m_exact});
        }
        r.satisfied = r.witnesses.empty();
        reports.push_back(std::move(r));
    }

    // Contradictories are equally informative.
    {
        CriterionReport r{"MIRROR", true, {}};
        for (std::size_t i = 0; i < messages.size(); ++i) {
            std::size_t j = by_mask.at(messages[i].true_worlds.complement().low_bits());
            if (placements[i].phi_i != placements[j].phi_i)
                r.witnesses.push_back({label(i), placements[i].phi_i});
        }
        r.satisfied = r.witnesses.empty();
        reports.push_back(std::move(r));
    }

    return reports;
}

}  // namespace

RadiusResult radius(const Message& msg, World w, const Universe& u) {
    MtsiPlacement p = place_impl(msg, w, u, RayScheme::Ratio, true);
    return RadiusResult{p.k, p.r, p.extreme};
}

Rational angle(const LiteralProfile& profile, RayScheme scheme, std::size_t n_atoms) {
    if (profile.t == 0 && profile.f == 0)
        throw DegenerateProfile();
    if (scheme == RayScheme::Paper) {
        // Uniform rays of width pi/(4n-2): ray index = false-literal count.
        Rational q(static_cast<long long>(profile.f), static_cast<long long>(2 * n_atoms - 1));
        return q > Rational(1) ? Rational(1) : q;
    }
    if (profile.f == 0)
        return Rational(0);
    if (profile.t == 0)
        return Rational(1);
    return Rational(static_cast<long long>(profile.f),
                    static_cast<long long>(profile.t + profile.f));
}

std::optional<Rational> exact_cos_squared(const Rational& q) {
    if (q == Rational(0))
        return Rational(1);
    if (q == Rational(1, 3))
        return Rational(3, 4);
    if (q == Rational(1, 2))
        return Rational(1, 2);
    if (q == Rational(2, 3))
        return Rational(1, 4);
    if (q == Rational(1))
        return Rational(0);
    return std::nullopt;
}

MtsiPlacement place(const Message& msg, World w, const Universe& u, RayScheme scheme) {
    return place_impl(msg, w, u, scheme, true);
}

double metric_informativeness(const MtsiPlacement& p) {
    if (p.r > Rational(1))
        throw OutOfSphere();
    return std::sqrt(to_double(p.phi_i));
}

MirrorReport mirror_check(const Message& msg, World w, const Universe& u) {
    Message complement;
    complement.true_worlds = msg.true_worlds.complement();
    complement.source = canonical_formula(complement, u);

    MirrorReport report;
    report.placement = place(msg, w, u);
    report.complement_placement = place(complement, w, u);
    report.informativeness_equal = report.placement.phi_i == report.complement_placement.phi_i;
    report.angles_mirrored =
        report.complement_placement.q == Rational(1) - report.placement.q;
    return report;
}

std::vector<CriterionReport> verify_mtsi(const Universe& u, World w, ExecutionPolicy policy) {
    return verify_impl(u, w, true, policy);
}

std::vector<CriterionReport> verify_mtsi_without_extreme_rule(const Universe& u, World w) {
    return verify_impl(u, w, false, ExecutionPolicy::Serial);
}

std::vector<MtsiPlacement> place_all(const std::vector<Message>& messages, World w,
                                     const Universe& u, RayScheme scheme,
                                     ExecutionPolicy policy) {
    std::vector<MtsiPlacement> out(messages.size());
#pragma omp parallel for schedule(dynamic, 256) if (policy == ExecutionPolicy::Parallel)
    for (std::int64_t i = 0; i < std::int64_t(messages.size()); ++i)
        out[i] = place(messages[i], w, u, scheme);
    return out;
}

GuardsDemo guards_demo() {
    auto other = [](int door) { return door == 1 ? 2 : 1; };

    GuardsDemo demo;
    for (bool identified : {true, false}) {
        for (int money : {1, 2}) {
            for (int asked : {1, 2}) {  // 1 = liar, 2 = truth-teller
                GuardsCase c;
                c.identified_scenario = identified;
                c.money_door = money;
                c.asked_guard = asked;
                if (identified) {
                    // "Which door should I choose?" The liar negates the answer.
                    c.reported_door = asked == 2 ? money : other(money);
                    c.chosen_door = asked == 2 ? c.reported_door : other(c.reported_door);
                } else {
                    // "What would the other guard say?" One negation always
                    // ends up in the chain, so both guards report the same
                    // wrong door and the visitor picks the other one.
                    int truthful_answer = money;
                    c.reported_door = asked == 2 ? other(truthful_answer)   // liar's answer, relayed honestly
                                                 : other(truthful_answer);  // honest answer, relayed negated
                    c.chosen_door = other(c.reported_door);
                }
                c.success = c.chosen_door == money;
                demo.successes += c.success;
                demo.cases.push_back(c);
            }
        }
    }
    return demo;
}

}  // namespace semispace

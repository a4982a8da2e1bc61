#include "semispace/report.hpp"

#include <set>
#include <sstream>

#include "json.hpp"

namespace semispace::report {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void collect_state_literals(const FormulaPtr& f,
                            std::vector<std::pair<std::string, bool>>& out) {
    switch (f->kind) {
        case Formula::Kind::Atom:
            out.emplace_back(f->name, true);
            return;
        case Formula::Kind::Not:
            if (f->lhs->kind != Formula::Kind::Atom)
                throw ConfigError("actual state must be a conjunction of literals");
            out.emplace_back(f->lhs->name, false);
            return;
        case Formula::Kind::And:
            collect_state_literals(f->lhs, out);
            collect_state_literals(f->rhs, out);
            return;
        case Formula::Kind::Or:
            throw ConfigError("actual state must be a conjunction of literals");
    }
}

std::string ray_scheme_name(RayScheme scheme) {
    return scheme == RayScheme::Ratio ? "ratio" : "paper";
}

std::string opt_rational_or_decimal(const std::optional<Rational>& exact, double approx) {
    return exact ? to_string(*exact) : to_decimal(approx);
}

ordered_json placement_to_json(const MtsiPlacement& p) {
    ordered_json j;
    j["k"] = p.k;
    j["m"] = p.m;
    j["extreme"] = p.extreme;
    j["r"] = to_string(p.r);
    j["q"] = to_string(p.q);
    j["thetaT"] = to_decimal(p.theta_t);
    j["thetaF"] = to_decimal(p.theta_f);
    j["phiU"] = opt_rational_or_decimal(p.phi_u_exact, p.phi_u);
    j["phiM"] = opt_rational_or_decimal(p.phi_m_exact, p.phi_m);
    j["phiI"] = to_string(p.phi_i);
    j["iota"] = to_decimal(metric_informativeness(p));
    return j;
}

std::string criteria_lines(const std::string& prefix,
                           const std::vector<CriterionReport>& reports,
                           std::size_t witness_cap = 3) {
    std::ostringstream out;
    for (const CriterionReport& r : reports) {
        out << prefix << ' ' << r.id << ": " << (r.satisfied ? "satisfied" : "violated");
        if (!r.satisfied) {
            out << " (" << r.witnesses.size() << " witnesses";
            for (std::size_t i = 0; i < r.witnesses.size() && i < witness_cap; ++i)
                out << "; " << r.witnesses[i].state << " -> " << to_string(r.witnesses[i].value);
            if (r.witnesses.size() > witness_cap)
                out << "; ...";
            out << ')';
        }
        out << '\n';
    }
    return out.str();
}

struct SpaceData {
    std::vector<Message> messages;
    std::vector<MtsiPlacement> placements;
};

SpaceData build_space(const Context& ctx, RayScheme scheme) {
    SpaceData data;
    data.messages = enumerate_messages(ctx.universe);
    data.placements = place_all(data.messages, ctx.actual, ctx.universe, scheme);
    return data;
}

std::string space_csv(const SpaceData& data) {
    std::ostringstream out;
    out << "id,formula,bitmask,k,m,r,q,thetaT,thetaF,phiU,phiM,phiI\n";
    for (std::size_t i = 0; i < data.messages.size(); ++i) {
        const MtsiPlacement& p = data.placements[i];
        out << 'M' << i << ',' << render(*data.messages[i].source) << ','
            << data.messages[i].true_worlds.to_hex() << ',' << p.k << ',' << p.m << ','
            << to_string(p.r) << ',' << to_string(p.q) << ',' << to_decimal(p.theta_t) << ','
            << to_decimal(p.theta_f) << ',' << opt_rational_or_decimal(p.phi_u_exact, p.phi_u)
            << ',' << opt_rational_or_decimal(p.phi_m_exact, p.phi_m) << ','
            << to_string(p.phi_i) << '\n';
    }
    return out.str();
}

std::string space_json(const SpaceData& data) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < data.messages.size(); ++i) {
        ordered_json row;
        row["id"] = "M" + std::to_string(i);
        row["formula"] = render(*data.messages[i].source);
        row["bitmask"] = data.messages[i].true_worlds.to_hex();
        row.update(placement_to_json(data.placements[i]));
        rows.push_back(std::move(row));
    }
    return rows.dump(2) + "\n";
}

std::string space_svg(const SpaceData& data, const Universe& u) {
    const double x0 = 60, y0 = 740, scale = 680;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\">\n";
    out << "  <rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
    // axes
    out << "  <line x1=\"60\" y1=\"740\" x2=\"760\" y2=\"740\" stroke=\"black\"/>\n";
    out << "  <line x1=\"60\" y1=\"740\" x2=\"60\" y2=\"40\" stroke=\"black\"/>\n";
    out << "  <text x=\"720\" y=\"770\" font-size=\"18\">theta_T</text>\n";
    out << "  <text x=\"20\" y=\"50\" font-size=\"18\">theta_F</text>\n";
    // unit quarter-circle
    out << "  <path d=\"M " << to_decimal(x0 + scale) << " " << to_decimal(y0) << " A "
        << to_decimal(scale) << " " << to_decimal(scale) << " 0 0 0 " << to_decimal(x0) << " "
        << to_decimal(y0 - scale) << "\" fill=\"none\" stroke=\"gray\"/>\n";
    // 45 degree mirror line
    out << "  <line x1=\"60\" y1=\"740\" x2=\"" << to_decimal(x0 + scale * 0.7071)
        << "\" y2=\"" << to_decimal(y0 - scale * 0.7071)
        << "\" stroke=\"gray\" stroke-dasharray=\"8,6\"/>\n";
    for (std::size_t i = 0; i < data.placements.size(); ++i) {
        const MtsiPlacement& p = data.placements[i];
        double px = x0 + p.theta_t * scale;
        double py = y0 - p.theta_f * scale;
        out << "  <circle cx=\"" << to_decimal(px) << "\" cy=\"" << to_decimal(py)
            << "\" r=\"4\" fill=\"steelblue\"/>\n";
        if (u.n == 2)
            out << "  <text x=\"" << to_decimal(px + 7) << "\" y=\"" << to_decimal(py - 7)
                << "\" font-size=\"14\">M" << i << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace

Context make_context(const RunConfig& cfg) {
    FormulaPtr state;
    try {
        state = parse(cfg.actual);
    } catch (const SyntaxError& e) {
        throw ConfigError(std::string("actual state: ") + e.what());
    }

    std::vector<std::pair<std::string, bool>> literals;
    collect_state_literals(state, literals);

    std::vector<std::string> names;
    std::set<std::string> seen;
    for (const auto& [name, positive] : literals) {
        if (!seen.insert(name).second)
            throw ConfigError("actual state mentions atom '" + name + "' twice");
        names.push_back(name);
    }
    if (cfg.atoms != 0 && cfg.atoms != names.size())
        throw ConfigError("--atoms says " + std::to_string(cfg.atoms) + " but the actual state has " +
                          std::to_string(names.size()) + " atoms");

    Context ctx;
    try {
        ctx.universe = build_universe(names);
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    std::uint32_t index = 0;
    for (std::size_t j = 0; j < literals.size(); ++j)
        if (literals[j].second)
            index |= 1u << (ctx.universe.n - 1 - j);
    ctx.actual = World{index};
    return ctx;
}

std::string cmd_table(const RunConfig& cfg) {
    Context ctx = make_context(cfg);
    std::vector<Message> messages = enumerate_messages(ctx.universe);

    if (cfg.format == Format::Json) {
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < messages.size(); ++i) {
            LiteralProfile profile = literal_profile(messages[i], ctx.actual, ctx.universe);
            rows.push_back({{"id", "M" + std::to_string(i)},
                            {"formula", render(*messages[i].source)},
                            {"worlds_true", messages[i].true_worlds.count()},
                            {"true_atoms", profile.t}});
        }
        return rows.dump(2) + "\n";
    }
    if (cfg.format != Format::Csv)
        throw ConfigError("table supports csv or json output");

    std::ostringstream out;
    out << "id,formula,worlds_true,true_atoms\n";
    for (std::size_t i = 0; i < messages.size(); ++i) {
        LiteralProfile profile = literal_profile(messages[i], ctx.actual, ctx.universe);
        out << 'M' << i << ',' << render(*messages[i].source) << ','
            << messages[i].true_worlds.count() << ',' << profile.t << '\n';
    }
    return out.str();
}

std::string cmd_assess(const RunConfig& cfg, const std::string& formula_text) {
    Context ctx = make_context(cfg);
    FormulaPtr f;
    try {
        f = parse(formula_text);
    } catch (const SyntaxError& e) {
        throw ConfigError(std::string("formula: ") + e.what());
    }
    Message msg;
    try {
        msg = interpret(f, ctx.universe);
    } catch (const UnknownAtom& e) {
        throw ConfigError(e.what());
    }

    ordered_json j;
    j["formula"] = render(f);
    j["bitmask"] = msg.true_worlds.to_hex();
    j["rayScheme"] = ray_scheme_name(cfg.ray_scheme);

    ContentAssessment content = assess_content(msg, ctx.universe);
    j["twsi"] = {{"prior", to_string(content.prior)}, {"cont", to_string(content.content)}};

    ordered_json jt;
    try {
        TssiAssessment a = inaccuracy(f, ctx.actual, ctx.universe);
        jt["inaccuracy"] = {{"l", a.length},
                            {"e", a.erroneous},
                            {"theta", to_string(a.discrepancy)},
                            {"iota", to_string(a.informativeness)}};
    } catch (const NotConjunctive&) {
        jt["inaccuracy"] = {{"undefined", "NotConjunctive"}};
    }
    try {
        TssiAssessment a = vacuity(msg, ctx.actual, ctx.universe);
        jt["vacuity"] = {{"l", a.length},
                         {"waysTrue", a.ways_true},
                         {"theta", to_string(a.discrepancy)},
                         {"iota", to_string(a.informativeness)}};
    } catch (const NotTrueAtActual&) {
        jt["vacuity"] = {{"undefined", "NotTrueAtActual"}};
    }
    j["tssi"] = std::move(jt);

    j["mtsi"] = placement_to_json(place(msg, ctx.actual, ctx.universe, cfg.ray_scheme));

    if (cfg.format == Format::Csv) {
        std::ostringstream out;
        out << "key,value\n";
        auto flat = j.flatten();
        for (auto it = flat.begin(); it != flat.end(); ++it) {
            std::string key = it.key().substr(1);
            for (char& c : key)
                if (c == '/')
                    c = '.';
            out << key << ',' << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
        }
        return out.str();
    }
    if (cfg.format != Format::Json)
        throw ConfigError("assess supports csv or json output");
    return j.dump(2) + "\n";
}

std::string cmd_space(const RunConfig& cfg) {
    Context ctx = make_context(cfg);
    SpaceData data = build_space(ctx, cfg.ray_scheme);
    switch (cfg.format) {
        case Format::Csv: return space_csv(data);
        case Format::Json: return space_json(data);
        case Format::Svg: return space_svg(data, ctx.universe);
    }
    throw ConfigError("unknown format");
}

int cmd_verify(const RunConfig& cfg, std::string& out) {
    Context ctx = make_context(cfg);
    std::ostringstream text;
    bool ok = true;

    std::vector<CriterionReport> tssi_reports = check_criteria(ctx.universe, ctx.actual);
    text << criteria_lines("TSSI", tssi_reports);
    // The paper's expected outcome: exactly M3 and M4 are violated.
    for (const CriterionReport& r : tssi_reports) {
        bool expect_violated = r.id == "M3" || r.id == "M4";
        if (r.satisfied == expect_violated)
            ok = false;
    }

    if (ctx.universe.n <= Universe::kEnumerateCap) {
        std::vector<CriterionReport> mtsi_reports = verify_mtsi(ctx.universe, ctx.actual);
        text << criteria_lines("MTSI", mtsi_reports);
        for (const CriterionReport& r : mtsi_reports)
            if (!r.satisfied)
                ok = false;
    } else {
        text << "MTSI: skipped (needs n <= " << Universe::kEnumerateCap << ")\n";
    }

    text << (ok ? "verify: expected pattern matched\n" : "verify: MISMATCH\n");
    out = text.str();
    return ok ? kExitOk : kExitCheckFailed;
}

std::string cmd_bcp_demo(const RunConfig& cfg) {
    Context ctx = make_context(cfg);
    BcpWitness witness = bcp_witness(ctx.universe);

    std::ostringstream out;
    out << "Bar-Hillel--Carnap paradox demonstration\n";
    out << "universe: " << ctx.universe.n << " atoms, " << ctx.universe.m << " worlds, "
        << witness.ranking.size() << " messages\n\n";
    out << "content ranking (descending):\n";
    for (const BcpRow& row : witness.ranking)
        out << "  M" << row.message_id << "  " << row.formula << "  cont=" << to_string(row.content)
            << "  prior=" << to_string(row.prior) << '\n';
    out << "\nmaximum CONT = " << to_string(witness.max_content) << " attained by:";
    for (std::size_t id : witness.maximal_ids)
        out << " M" << id;
    out << "\nthe contradiction is content-maximal: "
        << (witness.contradiction_is_maximal ? "yes" : "NO") << '\n';
    out << "a message no receiver can accept outranks every contingent truth; "
           "this is the paradox MTSI dissolves (see verify/assess).\n";
    return out.str();
}

std::string cmd_guards_demo() {
    GuardsDemo demo = guards_demo();
    std::ostringstream out;
    out << "Two doors, two guards: one always lies, one always tells the truth.\n\n";
    for (const GuardsCase& c : demo.cases) {
        out << (c.identified_scenario ? "[identified]  " : "[unidentified]")
            << " money=Door " << c.money_door << ", asked guard " << c.asked_guard
            << (c.asked_guard == 1 ? " (liar)" : " (truth-teller)") << ": answer \"Door "
            << c.reported_door << "\", choice \"Door " << c.chosen_door << "\" -> "
            << (c.success ? "money" : "DEMISE") << '\n';
    }
    out << '\n' << demo.successes << '/' << demo.cases.size() << " cases choose the money door.\n";
    out << "Either guard leaves the visitor equally well informed: contradictory "
           "messages carry the same informativeness once a reliable decoding exists.\n";
    return out.str();
}

}  // namespace semispace::report

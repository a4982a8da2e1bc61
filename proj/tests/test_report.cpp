#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "semispace/report.hpp"

using namespace semispace;
using namespace semispace::report;
using nlohmann::json;

namespace {

RunConfig cfg_n2() {
    RunConfig cfg;
    cfg.atoms = 2;
    cfg.actual = "xy";
    return cfg;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ','))
            fields.push_back(field);
        rows.push_back(std::move(fields));
    }
    return rows;
}

}  // namespace

TEST_CASE("context building") {
    Context ctx = make_context(cfg_n2());
    CHECK(ctx.universe.n == 2);
    CHECK(ctx.actual.index == 3);

    RunConfig primed = cfg_n2();
    primed.actual = "xy'";
    CHECK(make_context(primed).actual.index == 2);

    RunConfig bad = cfg_n2();
    bad.actual = "x + y";
    CHECK_THROWS_AS(make_context(bad), ConfigError);
    bad.actual = "xx";
    CHECK_THROWS_AS(make_context(bad), ConfigError);
    bad.actual = "x";
    CHECK_THROWS_AS(make_context(bad), ConfigError);  // --atoms 2 vs 1 atom
    bad.actual = "((";
    CHECK_THROWS_AS(make_context(bad), ConfigError);
}

TEST_CASE("table matches the golden file and is deterministic") {
    std::string table = cmd_table(cfg_n2());
    CHECK(table == read_file(std::string(GOLDEN_DIR) + "/table_n2.csv"));
    CHECK(table == cmd_table(cfg_n2()));

    RunConfig cfg3;
    cfg3.actual = "xyz";
    CHECK(parse_csv(cmd_table(cfg3)).size() == 257);  // header + 256 rows
}

TEST_CASE("assess resolves the paradox side by side") {
    RunConfig cfg = cfg_n2();
    cfg.format = Format::Json;

    json taut = json::parse(cmd_assess(cfg, "x + x'"));
    CHECK(taut["twsi"]["cont"] == "0");
    CHECK(taut["mtsi"]["phiI"] == "0");
    CHECK(taut["tssi"]["inaccuracy"]["undefined"] == "NotConjunctive");
    CHECK(taut["tssi"]["vacuity"]["theta"] == "1");

    json bottom = json::parse(cmd_assess(cfg, "xx'"));
    CHECK(bottom["twsi"]["cont"] == "1");
    CHECK(bottom["mtsi"]["phiI"] == "0");
    CHECK(bottom["tssi"]["vacuity"]["undefined"] == "NotTrueAtActual");

    json actual = json::parse(cmd_assess(cfg, "xy"));
    CHECK(actual["mtsi"]["phiI"] == "1");
    CHECK(actual["tssi"]["inaccuracy"]["theta"] == "0");

    CHECK_THROWS_AS(cmd_assess(cfg, "x + q"), ConfigError);
    CHECK_THROWS_AS(cmd_assess(cfg, "(("), ConfigError);
}

TEST_CASE("space CSV round-trips its rational fields") {
    std::string csv = cmd_space(cfg_n2());
    auto rows = parse_csv(csv);
    REQUIRE(rows.size() == 17);
    CHECK(rows[0] == std::vector<std::string>{"id", "formula", "bitmask", "k", "m", "r", "q",
                                              "thetaT", "thetaF", "phiU", "phiM", "phiI"});
    Context ctx = make_context(cfg_n2());
    std::vector<Message> messages = enumerate_messages(ctx.universe);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        const Message& msg = messages[i - 1];
        CHECK(row[1] == render(*msg.source));
        CHECK(WorldSet::from_hex(row[2], 4) == msg.true_worlds);
        MtsiPlacement p = place(msg, ctx.actual, ctx.universe);
        CHECK(std::stoll(row[3]) == p.k);
        CHECK(parse_rational(row[5]) == p.r);
        CHECK(parse_rational(row[6]) == p.q);
        CHECK(parse_rational(row[11]) == p.phi_i);
        if (p.phi_u_exact) {
            CHECK(parse_rational(row[9]) == *p.phi_u_exact);
            CHECK(parse_rational(row[10]) == *p.phi_m_exact);
        }
    }
    // M1 (the actual state xy) sits at the origin
    CHECK(rows[2][0] == "M1");
    CHECK(rows[2][5] == "0");
    CHECK(rows[2][11] == "1");
}

TEST_CASE("ray scheme changes only the Phi_u/Phi_m split") {
    RunConfig ratio = cfg_n2();
    RunConfig paper = cfg_n2();
    paper.ray_scheme = RayScheme::Paper;
    auto a = parse_csv(cmd_space(ratio));
    auto b = parse_csv(cmd_space(paper));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 1; i < a.size(); ++i) {
        CHECK(a[i][5] == b[i][5]);    // r
        CHECK(a[i][11] == b[i][11]);  // phiI
    }
}

TEST_CASE("space SVG is self-contained") {
    RunConfig cfg = cfg_n2();
    cfg.format = Format::Svg;
    std::string svg = cmd_space(cfg);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);  // the 45 degree line
    CHECK(svg.find(">M15<") != std::string::npos);             // labels for n = 2
}

TEST_CASE("verify exit codes") {
    std::string out;
    CHECK(cmd_verify(cfg_n2(), out) == kExitOk);
    CHECK(out.find("TSSI M3: violated") != std::string::npos);
    CHECK(out.find("TSSI M4: violated") != std::string::npos);
    CHECK(out.find("MTSI M1: satisfied") != std::string::npos);

    RunConfig six;
    six.actual = "abcdef";
    CHECK(cmd_verify(six, out) == kExitOk);
    CHECK(out.find("MTSI: skipped") != std::string::npos);

    RunConfig paper_scheme = cfg_n2();
    paper_scheme.ray_scheme = RayScheme::Paper;
    CHECK(cmd_verify(paper_scheme, out) == kExitOk);  // Phi_i untouched by the labeling
}

TEST_CASE("demo transcripts") {
    std::string bcp = cmd_bcp_demo(cfg_n2());
    CHECK(bcp.find("the contradiction is content-maximal: yes") != std::string::npos);
    CHECK(bcp.find("maximum CONT = 1") != std::string::npos);

    std::string guards = cmd_guards_demo();
    CHECK(guards.find("8/8") != std::string::npos);
    CHECK(guards.find("answer \"Door 2\", choice \"Door 1\"") != std::string::npos);
}

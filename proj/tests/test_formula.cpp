#include <random>

#include "doctest.h"
#include "semispace/formula.hpp"

using namespace semispace;

TEST_CASE("parse digital notation") {
    FormulaPtr f = parse("xy");
    REQUIRE(f->kind == Formula::Kind::And);
    CHECK(f->lhs->name == "x");
    CHECK(f->rhs->name == "y");

    FormulaPtr g = parse("x + x'");
    REQUIRE(g->kind == Formula::Kind::Or);
    CHECK(g->lhs->name == "x");
    REQUIRE(g->rhs->kind == Formula::Kind::Not);
    CHECK(g->rhs->lhs->name == "x");

    CHECK(structurally_equal(parse("x.y"), parse("xy")));
    CHECK(structurally_equal(parse("  x y "), parse("xy")));
    CHECK(structurally_equal(parse("(x+y)'"), make_not(parse("x + y"))));
    // juxtaposition binds tighter than '+'
    CHECK(structurally_equal(parse("xy + z"), make_or(parse("xy"), make_atom("z"))));
    // multi-character atoms for wide universes
    FormulaPtr wide = parse("a1a2");
    REQUIRE(wide->kind == Formula::Kind::And);
    CHECK(wide->lhs->name == "a1");
    CHECK(wide->rhs->name == "a2");
}

TEST_CASE("parse errors carry offsets") {
    try {
        parse("((x");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.offset == 3);
    }
    try {
        parse("");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.offset == 0);
        CHECK(e.expected.find("empty") != std::string::npos);
    }
    CHECK_THROWS_AS(parse("x +"), SyntaxError);
    CHECK_THROWS_AS(parse("x y)"), SyntaxError);
    CHECK_THROWS_AS(parse("'x"), SyntaxError);
    CHECK_THROWS_AS(parse("X"), SyntaxError);
}

TEST_CASE("render with minimal parentheses") {
    CHECK(render(make_and(make_atom("x"), make_not(make_atom("y")))) == "xy'");
    CHECK(render(make_or(parse("xy"), parse("x'y'"))) == "xy + x'y'");
    CHECK(render(make_atom("x")) == "x");
    CHECK(render(parse("(x + y)z")) == "(x + y)z");
    CHECK(render(make_not(parse("x + y"))) == "(x + y)'");
    // structure-preserving association
    CHECK(render(make_and(make_atom("x"), parse("yz"))) == "x(yz)");
    CHECK(render(make_or(make_atom("x"), parse("y + z"))) == "x + (y + z)");
}

TEST_CASE("evaluate") {
    CHECK(evaluate(parse("xy"), {{"x", true}, {"y", true}}));
    CHECK_FALSE(evaluate(parse("xx'"), {{"x", true}}));
    CHECK_FALSE(evaluate(parse("xx'"), {{"x", false}}));
    CHECK_FALSE(evaluate(parse("x + y'"), {{"x", false}, {"y", true}}));
    try {
        evaluate(parse("xy"), {{"x", true}});
        FAIL("expected UnboundAtom");
    } catch (const UnboundAtom& e) {
        CHECK(e.name == "y");
    }
}

TEST_CASE("negate to negation-normal form") {
    CHECK(render(negate(parse("xy"))) == "x' + y'");
    CHECK(render(negate(parse("x'"))) == "x");
    CHECK(render(negate(parse("x + y'"))) == "x'y");
    CHECK(is_nnf(negate(parse("((x + y')z)'"))));
}

namespace {

FormulaPtr random_formula(std::mt19937& rng, int depth) {
    static const std::vector<std::string> names = {"x", "y", "z", "a1"};
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 3);
    switch (pick(rng)) {
        case 1: return make_not(random_formula(rng, depth - 1));
        case 2: return make_and(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
        case 3: return make_or(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
        default: return make_atom(names[std::uniform_int_distribution<std::size_t>(0, 3)(rng)]);
    }
}

}  // namespace

TEST_CASE("property: parse(render(f)) == f") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        FormulaPtr f = random_formula(rng, 5);
        CAPTURE(render(f));
        CHECK(structurally_equal(parse(render(f)), f));
    }
}

TEST_CASE("property: negate is a semantic involution") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        FormulaPtr f = random_formula(rng, 4);
        std::set<std::string> atom_set = atoms(f);
        std::vector<std::string> names(atom_set.begin(), atom_set.end());
        FormulaPtr neg = negate(f);
        for (std::uint32_t bits = 0; bits < (1u << names.size()); ++bits) {
            Assignment a;
            for (std::size_t j = 0; j < names.size(); ++j)
                a[names[j]] = (bits >> j) & 1u;
            CHECK(evaluate(neg, a) == !evaluate(f, a));
            CHECK(evaluate(negate(neg), a) == evaluate(f, a));
        }
    }
}

TEST_CASE("property: parser is total on arbitrary bytes") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> len(0, 1024);
    std::uniform_int_distribution<int> byte(0, 255);
    std::uniform_int_distribution<int> nice(0, 9);
    const std::string alphabet = "xy'()+. \t1";
    for (int trial = 0; trial < 300; ++trial) {
        std::string text;
        int length = len(rng);
        bool from_alphabet = trial % 2 == 0;
        for (int i = 0; i < length; ++i)
            text += from_alphabet ? alphabet[nice(rng)] : static_cast<char>(byte(rng));
        try {
            FormulaPtr f = parse(text);
            CHECK(f != nullptr);
        } catch (const SyntaxError&) {
            // fine: the contract is Formula or SyntaxError, nothing else
        }
    }
}

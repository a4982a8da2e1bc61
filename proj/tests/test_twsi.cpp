#include "doctest.h"
#include "semispace/twsi.hpp"

using namespace semispace;

TEST_CASE("prior probability and content") {
    Universe u = build_universe({"x", "y"});
    CHECK(prior_probability(interpret(parse("x"), u), u) == Rational(1, 2));
    CHECK(prior_probability(interpret(parse("x + x'"), u), u) == Rational(1));
    CHECK(prior_probability(interpret(parse("xy"), u), u) == Rational(1, 4));

    CHECK(cont(interpret(parse("xx'"), u), u) == Rational(1));
    CHECK(cont(interpret(parse("x + x'"), u), u) == Rational(0));
    CHECK(cont(interpret(parse("x"), u), u) == Rational(1, 2));
}

TEST_CASE("the contradiction is content-maximal for n = 1, 2, 3") {
    for (std::size_t n : {1u, 2u, 3u}) {
        std::vector<std::string> names;
        for (std::size_t j = 0; j < n; ++j)
            names.push_back("a" + std::to_string(j + 1));
        BcpWitness witness = bcp_witness(build_universe(names));
        CHECK(witness.max_content == Rational(1));
        CHECK(witness.contradiction_is_maximal);
        // ... and uniquely so
        CHECK(witness.maximal_ids.size() == 1);
    }
}

TEST_CASE("CONT laws over all messages (n <= 3)") {
    Universe u = build_universe({"x", "y", "z"});
    std::vector<Message> messages = enumerate_messages(u);
    for (const Message& msg : messages) {
        Message comp;
        comp.true_worlds = msg.true_worlds.complement();
        CHECK(cont(msg, u) + cont(comp, u) == Rational(1));
    }
    // antitone in |trueWorlds|: enumeration is ordered by count, so CONT
    // must be non-increasing along it
    for (std::size_t i = 1; i < messages.size(); ++i)
        CHECK(cont(messages[i], u) <= cont(messages[i - 1], u));
    // ... and strictly smaller for a strict superset
    Message narrower = interpret(parse("xy"), u);
    Message wider = interpret(parse("xy + xz"), u);
    CHECK(cont(narrower, u) > cont(wider, u));
}

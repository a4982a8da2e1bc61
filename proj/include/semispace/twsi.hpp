#pragma once

#include <vector>

#include "semispace/rational.hpp"
#include "semispace/worlds.hpp"

namespace semispace {

// Bar-Hillel/Carnap content: CONT(p) = 1 - P(p) with P the uniform
// measure over worlds.
struct ContentAssessment {
    Rational prior;
    Rational content;
};

Rational prior_probability(const Message& msg, const Universe& u);
Rational cont(const Message& msg, const Universe& u);
ContentAssessment assess_content(const Message& msg, const Universe& u);

struct BcpRow {
    std::size_t message_id = 0;
    std::string formula;
    std::string bitmask;
    Rational prior;
    Rational content;
};

// Content ranking over all messages. The maximal set contains the
// contradiction: the paradox this module demonstrates.
struct BcpWitness {
    std::vector<BcpRow> ranking;          // descending content
    std::vector<std::size_t> maximal_ids; // message ids attaining max content
    Rational max_content;
    bool contradiction_is_maximal = false;
};

BcpWitness bcp_witness(const Universe& u);

}  // namespace semispace

#include "semispace/twsi.hpp"

#include <algorithm>

namespace semispace {

Rational prior_probability(const Message& msg, const Universe& u) {
    return Rational(static_cast<long long>(msg.true_worlds.count()),
                    static_cast<long long>(u.m));
}

Rational cont(const Message& msg, const Universe& u) {
    return Rational(1) - prior_probability(msg, u);
}

ContentAssessment assess_content(const Message& msg, const Universe& u) {
    Rational p = prior_probability(msg, u);
    return ContentAssessment{p, Rational(1) - p};
}

BcpWitness bcp_witness(const Universe& u) {
    std::vector<Message> messages = enumerate_messages(u);

    BcpWitness witness;
    witness.max_content = Rational(0);
    for (std::size_t id = 0; id < messages.size(); ++id) {
        const Message& msg = messages[id];
        Rational p = prior_probability(msg, u);
        witness.ranking.push_back(BcpRow{id, render(*msg.source), msg.true_worlds.to_hex(), p,
                                         Rational(1) - p});
    }
    std::stable_sort(witness.ranking.begin(), witness.ranking.end(),
                     [](const BcpRow& a, const BcpRow& b) { return a.content > b.content; });

    witness.max_content = witness.ranking.front().content;
    for (const BcpRow& row : witness.ranking) {
        if (row.content != witness.max_content)
            break;
        witness.maximal_ids.push_back(row.message_id);
        if (messages[row.message_id].is_contradiction())
            witness.contradiction_is_maximal = true;
    }
    return witness;
}

}  // namespace semispace

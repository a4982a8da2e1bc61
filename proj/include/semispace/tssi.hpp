#pragma once

#include <string>
#include <vector>

#include "semispace/rational.hpp"
#include "semispace/worlds.hpp"

namespace semispace {

class NotConjunctive : public std::runtime_error {
public:
    NotConjunctive()
        : std::runtime_error("inaccuracy is defined only for conjunctions of literals") {}
};

class NotTrueAtActual : public std::runtime_error {
public:
    NotTrueAtActual()
        : std::runtime_error("vacuity applies only to infons true at the actual world") {}
};

class OutOfRange : public std::runtime_error {
public:
    explicit OutOfRange(const std::string& what) : std::runtime_error(what) {}
};

// Floridi-style assessment of one infon: signed discrepancy from the
// actual state and the quadratic informativeness 1 - theta^2.
struct TssiAssessment {
    long long length = 0;     // l, conjunct count (inaccuracy) / atom count (vacuity)
    long long erroneous = 0;  // e, false conjuncts (inaccuracy side)
    long long ways_true = 0;  // n of the vacuity ratio n/s^l
    Rational discrepancy;     // theta in [-1, +1]
    Rational informativeness; // iota = 1 - theta^2
};

// theta = -e/l over the conjuncts of a literal conjunction.
TssiAssessment inaccuracy(const FormulaPtr& state, World w, const Universe& u);

// theta = |trueWorlds| / s^l for an infon true at w.
TssiAssessment vacuity(const Message& msg, World w, const Universe& u);

Rational tssi_informativeness(const Rational& discrepancy);

// Integral of 1 - theta^2 over [a, b].
Rational tssi_quantity(const Rational& a, const Rational& b);

struct CriterionWitness {
    std::string state;
    Rational value;
};

struct CriterionReport {
    std::string id;  // M1..M5, E1..E4, E6
    bool satisfied = true;
    std::vector<CriterionWitness> witnesses;
};

// Checks M.1-M.5 over all 2^n conjunctive states and all length-n
// contradictory conjunctions (one complementary literal pair), plus
// E.1-E.4 and E.6 on the informativeness curve. The paper's own result:
// M.3 and M.4 come back violated, everything else holds.
std::vector<CriterionReport> check_criteria(const Universe& u, World w);

// All length-n conjunctions containing exactly one complementary literal
// pair; realizes every true-conjunct count in 1..n-1.
std::vector<FormulaPtr> contradiction_family(const Universe& u);

struct DiscontinuityDemo {
    FormulaPtr state;              // one false conjunct, length 6
    FormulaPtr abstracted;         // the same, one conjunct widened to a disjunction
    Rational inaccuracy_value;     // -1/6
    Rational vacuity_value;        // +3/64
    bool sign_jump = false;        // crossed zero without attaining it
};

// The worked jump from -0.167 to +0.047: a single disjunctive
// abstraction flips the discrepancy across zero. Requires n = 6.
DiscontinuityDemo discontinuity_demo(const Universe& u, World w);

}  // namespace semispace

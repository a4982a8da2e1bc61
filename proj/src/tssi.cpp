#include "semispace/tssi.hpp"

namespace semispace {

namespace {

// Flatten a conjunction of literals into (atom index, positive) pairs.
// Throws NotConjunctive on anything else.
void collect_conjuncts(const FormulaPtr& f, const Universe& u,
                       std::vector<std::pair<std::size_t, bool>>& out) {
    switch (f->kind) {
        case Formula::Kind::Atom:
            out.emplace_back(u.atom_index(f->name), true);
            return;
        case Formula::Kind::Not:
            if (f->lhs->kind != Formula::Kind::Atom)
                throw NotConjunctive();
            out.emplace_back(u.atom_index(f->lhs->name), false);
            return;
        case Formula::Kind::And:
            collect_conjuncts(f->lhs, u, out);
            collect_conjuncts(f->rhs, u, out);
            return;
        case Formula::Kind::Or:
            throw NotConjunctive();
    }
}

FormulaPtr literal_of(const Universe& u, std::size_t atom_idx, bool positive) {
    FormulaPtr a = make_atom(u.atoms[atom_idx]);
    return positive ? a : make_not(a);
}

// Conjunction of n literals, one per atom, polarity from the sign bits
// (bit j = atom j positive).
FormulaPtr state_formula(const Universe& u, std::uint32_t sign_bits) {
    FormulaPtr f = literal_of(u, 0, sign_bits & 1u);
    for (std::size_t j = 1; j < u.n; ++j)
        f = make_and(std::move(f), literal_of(u, j, (sign_bits >> j) & 1u));
    return f;
}

}  // namespace

TssiAssessment inaccuracy(const FormulaPtr& state, World w, const Universe& u) {
    std::vector<std::pair<std::size_t, bool>> conjuncts;
    collect_conjuncts(state, u, conjuncts);

    TssiAssessment out;
    out.length = static_cast<long long>(conjuncts.size());
    for (const auto& [atom_idx, positive] : conjuncts)
        if (w.atom_true(u, atom_idx) != positive)
            ++out.erroneous;
    out.discrepancy = Rational(-out.erroneous, out.length);
    out.informativeness = tssi_informativeness(out.discrepancy);
    return out;
}

TssiAssessment vacuity(const Message& msg, World w, const Universe& u) {
    if (!msg.true_worlds.test(w.index))
        throw NotTrueAtActual();

    TssiAssessment out;
    out.length = static_cast<long long>(u.n);
    out.ways_true = static_cast<long long>(msg.true_worlds.count());
    out.discrepancy = Rational(out.ways_true, static_cast<long long>(u.m));
    out.informativeness = tssi_informativeness(out.discrepancy);
    return out;
}

Rational tssi_informativeness(const Rational& discrepancy) {
    if (discrepancy < Rational(-1) || discrepancy > Rational(1))
        throw OutOfRange("discrepancy " + to_string(discrepancy) + " outside [-1, 1]");
    return Rational(1) - discrepancy * discrepancy;
}

Rational tssi_quantity(const Rational& a, const Rational& b) {
    if (a < Rational(-1) || b > Rational(1) || a > b)
        throw OutOfRange("integration bounds [" + to_string(a) + ", " + to_string(b) +
                         "] outside -1 <= a <= b <= 1");
    auto antiderivative = [](const Rational& t) { return t - t * t * t / 3; };
    return antiderivative(b) - antiderivative(a);
}

std::vector<FormulaPtr> contradiction_family(const Universe& u) {
    std::vector<FormulaPtr> out;
    if (u.n < 2)
        return out;
    const std::uint32_t sub_states = 1u << (u.n - 2);
    for (std::size_t paired = 0; paired < u.n; ++paired) {
        for (std::size_t dropped = 0; dropped < u.n; ++dropped) {
            if (dropped == paired)
                continue;
            for (std::uint32_t signs = 0; signs < sub_states; ++signs) {
                // Literals in atom order; the paired atom appears with both
                // polarities, the dropped atom not at all.
                FormulaPtr f;
                std::uint32_t sign_cursor = signs;
                for (std::size_t j = 0; j < u.n; ++j) {
                    if (j == dropped)
                        continue;
                    if (j == paired) {
                        FormulaPtr pair =
                            make_and(literal_of(u, j, true), literal_of(u, j, false));
                        f = f ? make_and(std::move(f), std::move(pair)) : std::move(pair);
                    } else {
                        FormulaPtr lit = literal_of(u, j, sign_cursor & 1u);
                        sign_cursor >>= 1;
                        f = f ? make_and(std::move(f), std::move(lit)) : std::move(lit);
                    }
                }
                out.push_back(std::move(f));
            }
        }
    }
    return out;
}

std::vector<CriterionReport> check_criteria(const Universe& u, World w) {
    constexpr std::size_t kCriteriaCap = 6;
    if (u.n > kCriteriaCap)
        throw UniverseTooLarge(u.n, kCriteriaCap);

    std::vector<CriterionReport> reports;

    // M.1: the true state has zero discrepancy.
    {
        CriterionReport r{"M1", true, {}};
        TssiAssessment a = inaccuracy(minterm_formula(u, w), w, u);
        if (a.discrepancy != Rational(0))
            r = {"M1", false, {{render(minterm_formula(u, w)), a.discrepancy}}};
        reports.push_back(std::move(r));
    }

    // M.2: the tautology attains the maximum (vacuity +1).
    {
        CriterionReport r{"M2", true, {}};
        Message top = interpret(make_or(make_atom(u.atoms[0]), make_not(make_atom(u.atoms[0]))), u);
        TssiAssessment a = vacuity(top, w, u);
        if (a.discrepancy != Rational(1))
            r = {"M2", false, {{render(*top.source), a.discrepancy}}};
        reports.push_back(std::move(r));
    }

    // M.3: contradictions should attain -1; by construction they never do.
    {
        CriterionReport r{"M3", true, {}};
        for (const FormulaPtr& f : contradiction_family(u)) {
            TssiAssessment a = inaccuracy(f, w, u);
            if (a.discrepancy != Rational(-1))
                r.witnesses.push_back({render(f), a.discrepancy});
        }
        r.satisfied = r.witnesses.empty();
        reports.push_back(std::move(r));
    }

    // M.4: contingently false states should lie strictly inside (-1, 0);
    // the all-false state lands exactly on -1.
    {
        CriterionReport r{"M4", true, {}};
        for (std::uint32_t signs = 0; signs < u.m; ++signs) {
            FormulaPtr f = state_formula(u, signs);
            TssiAssessment a = inaccuracy(f, w, u);
            if (a.discrepancy == Rational(0))
                continue;  // the true state, covered by M.1
            if (!(a.discrepancy > Rational(-1) && a.discrepancy < Rational(0)))
                r.witnesses.push_back({render(f), a.discrepancy});
        }
        r.satisfied = r.witnesses.empty();
        reports.push_back(std::move(r));
    }

    // M.5: contingently true infons lie strictly inside (0, +1). Every
    // realizable vacuity is k/m for k in 1..m-1.
    {
        CriterionReport r{"M5", true, {}};
        for (std::size_t k = 1; k < u.m; ++k) {
            Rational theta(static_cast<long long>(k), static_cast<long long>(u.m));
            if (!(theta > Rational(0) && theta < Rational(1)))
                r.witnesses.push_back({"vacuity " + std::to_string(k) + "/" + std::to_string(u.m),
                                       theta});
        }
        r.satisfied = r.witnesses.empty();
        reports.push_back(std::move(r));
    }

    // Curve conditions on iota(theta) = 1 - theta^2, sampled on a rational grid.
    const long long grid = 12;
    std::vector<Rational> samples;
    for (long long i = -grid; i <= grid; ++i)
        samples.emplace_back(i, grid);

    {
        CriterionReport r{"E1", true, {}};
        if (tssi_informativeness(Rational(0)) != Rational(1))
            r = {"E1", false, {{"theta = 0", tssi_informativeness(Rational(0))}}};
        reports.push_back(std::move(r));
    }
    {
        // Proper integral over the whole interval.
        CriterionReport r{"E2", true, {}};
        Rational q = tssi_quantity(Rational(-1), Rational(1));
        if (q != Rational(4, 3))
            r = {"E2", false, {{"integral over [-1, 1]", q}}};
        reports.push_back(std::move(r));
    }
    {
        CriterionReport r{"E3", true, {}};
        for (const Rational& t : {Rational(-1), Rational(1)})
            if (tssi_informativeness(t) != Rational(0))
                r.witnesses.push_back({"theta = " + to_string(t), tssi_informativeness(t)});
        r.satisfied = r.witnesses.empty();
        reports.push_back(std::move(r));
    }
    {
        CriterionReport r{"E4", true, {}};
        for (const Rational& t : samples) {
            Rational iota = tssi_informativeness(t);
            if (iota < Rational(0) || iota > Rational(1))
                r.witnesses.push_back({"theta = " + to_string(t), iota});
        }
        r.satisfied = r.witnesses.empty();
        reports.push_back(std::move(r));
    }
    {
        // E.6: the finite-difference slope at step h is exactly -2*theta - h,
        // so the marginal function is the linear -2*theta.
        CriterionReport r{"E6", true, {}};
        const Rational h(1, 64);
        for (const Rational& t : samples) {
            if (t + h > Rational(1))
                continue;
            Rational slope = (tssi_informativeness(t + h) - tssi_informativeness(t)) / h;
            if (slope != Rational(-2) * t - h)
                r.witnesses.push_back({"theta = " + to_string(t), slope});
        }
        r.satisfied = r.witnesses.empty();
        reports.push_back(std::move(r));
    }

    return reports;
}

DiscontinuityDemo discontinuity_demo(const Universe& u, World w) {
    if (u.n != 6)
        throw std::invalid_argument("the worked discontinuity example needs a 6-atom universe");

    // The state agreeing with w except on the first atom.
    FormulaPtr wrong = literal_of(u, 0, !w.atom_true(u, 0));
    FormulaPtr state = wrong;
    for (std::size_t j = 1; j < u.n; ++j)
        state = make_and(std::move(state), literal_of(u, j, w.atom_true(u, j)));

    // Widen the false conjunct into a disjunction with a true literal.
    FormulaPtr abstracted = make_or(wrong, literal_of(u, 1, w.atom_true(u, 1)));
    for (std::size_t j = 2; j < u.n; ++j)
        abstracted = make_and(std::move(abstracted), literal_of(u, j, w.atom_true(u, j)));

    DiscontinuityDemo demo;
    demo.state = state;
    demo.abstracted = abstracted;
    demo.inaccuracy_value = inaccuracy(state, w, u).discrepancy;
    demo.vacuity_value = vacuity(interpret(abstracted, u), w, u).discrepancy;
    demo.sign_jump = demo.inaccuracy_value < Rational(0) && demo.vacuity_value > Rational(0);
    return demo;
}

}  // namespace semispace

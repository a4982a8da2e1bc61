#include "semispace/worlds.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace semispace {

namespace {

bool valid_atom_name(const std::string& name) {
    if (name.empty() || name[0] < 'a' || name[0] > 'z')
        return false;
    for (std::size_t i = 1; i < name.size(); ++i)
        if (name[i] < '0' || name[i] > '9')
            return false;
    return true;
}

// Atom-indexed truth bits of a world: bit j = atom j true.
std::uint32_t atom_bits(const Universe& u, std::uint32_t world_index) {
    std::uint32_t bits = 0;
    for (std::size_t j = 0; j < u.n; ++j)
        if ((world_index >> (u.n - 1 - j)) & 1u)
            bits |= 1u << j;
    return bits;
}

bool evaluate_bits(const FormulaPtr& f, const Universe& u, std::uint32_t bits) {
    switch (f->kind) {
        case Formula::Kind::Atom:
            return (bits >> u.atom_index(f->name)) & 1u;
        case Formula::Kind::Not:
            return !evaluate_bits(f->lhs, u, bits);
        case Formula::Kind::And:
            return evaluate_bits(f->lhs, u, bits) && evaluate_bits(f->rhs, u, bits);
        case Formula::Kind::Or:
            return evaluate_bits(f->lhs, u, bits) || evaluate_bits(f->rhs, u, bits);
    }
    return false;
}

FormulaPtr literal(const Universe& u, std::size_t atom_idx, bool positive) {
    FormulaPtr a = make_atom(u.atoms[atom_idx]);
    return positive ? a : make_not(a);
}

// Term ordering key: per atom, 0 = positive literal, 1 = negative, 2 = absent.
std::vector<int> term_key(const Implicant& imp, std::size_t n) {
    std::vector<int> key(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (!((imp.care >> j) & 1u))
            key[j] = 2;
        else
            key[j] = ((imp.values >> j) & 1u) ? 0 : 1;
    }
    return key;
}

}  // namespace

std::size_t Universe::atom_index(const std::string& name) const {
    for (std::size_t j = 0; j < atoms.size(); ++j)
        if (atoms[j] == name)
            return j;
    throw UnknownAtom(name);
}

Universe build_universe(const std::vector<std::string>& atom_names) {
    if (atom_names.empty())
        throw EmptyUniverse();
    if (atom_names.size() > Universe::kInterpretCap)
        throw UniverseTooLarge(atom_names.size(), Universe::kInterpretCap);
    std::set<std::string> seen;
    for (const auto& name : atom_names) {
        if (!valid_atom_name(name))
            throw std::invalid_argument("invalid atom name '" + name + "'");
        if (!seen.insert(name).second)
            throw DuplicateAtom(name);
    }
    Universe u;
    u.atoms = atom_names;
    u.n = atom_names.size();
    u.m = std::size_t(1) << u.n;
    return u;
}

Assignment World::assignment(const Universe& u) const {
    Assignment a;
    for (std::size_t j = 0; j < u.n; ++j)
        a[u.atoms[j]] = atom_true(u, j);
    return a;
}

World world_from_index(const Universe& u, std::uint32_t index) {
    if (index >= u.m)
        throw std::out_of_range("world index " + std::to_string(index) + " out of range");
    return World{index};
}

FormulaPtr minterm_formula(const Universe& u, World w) {
    FormulaPtr f = literal(u, 0, w.atom_true(u, 0));
    for (std::size_t j = 1; j < u.n; ++j)
        f = make_and(std::move(f), literal(u, j, w.atom_true(u, j)));
    return f;
}

std::size_t WorldSet::count() const {
    std::size_t total = 0;
    for (std::uint64_t word : bits_)
        total += std::popcount(word);
    return total;
}

WorldSet WorldSet::complement() const {
    WorldSet out(m_);
    for (std::size_t w = 0; w < bits_.size(); ++w)
        out.bits_[w] = ~bits_[w];
    // mask tail bits beyond m
    std::size_t tail = m_ % 64;
    if (tail != 0)
        out.bits_.back() &= (std::uint64_t(1) << tail) - 1;
    return out;
}

std::string WorldSet::to_hex() const {
    std::size_t nibbles = (m_ + 3) / 4;
    std::string out(nibbles, '0');
    static const char digits[] = "0123456789abcdef";
    for (std::size_t k = 0; k < nibbles; ++k) {
        std::size_t shift = 4 * (nibbles - 1 - k);
        unsigned nibble = (bits_[shift / 64] >> (shift % 64)) & 0xfu;
        out[k] = digits[nibble];
    }
    return out;
}

WorldSet WorldSet::from_hex(const std::string& hex, std::size_t m) {
    WorldSet out(m);
    std::size_t nibbles = (m + 3) / 4;
    if (hex.size() != nibbles)
        throw std::invalid_argument("bitmask '" + hex + "' has wrong length for m=" + std::to_string(m));
    for (std::size_t k = 0; k < nibbles; ++k) {
        char c = hex[k];
        unsigned v;
        if (c >= '0' && c <= '9')
            v = c - '0';
        else if (c >= 'a' && c <= 'f')
            v = c - 'a' + 10;
        else
            throw std::invalid_argument(std::string("bad hex digit '") + c + "'");
        std::size_t shift = 4 * (nibbles - 1 - k);
        out.bits_[shift / 64] |= std::uint64_t(v) << (shift % 64);
    }
    return out;
}

Message interpret(const FormulaPtr& f, const Universe& u) {
    for (const auto& name : atoms(f))
        u.atom_index(name);  // throws UnknownAtom
    Message msg;
    msg.true_worlds = WorldSet(u.m);
    for (std::uint32_t i = 0; i < u.m; ++i)
        if (evaluate_bits(f, u, atom_bits(u, i)))
            msg.true_worlds.set(i);
    msg.source = f;
    return msg;
}

std::vector<Implicant> prime_implicants(const Message& msg, const Universe& u) {
    const std::uint32_t full = (u.n == 32) ? ~0u : ((1u << u.n) - 1);
    std::vector<Implicant> current;
    for (std::uint32_t i = 0; i < u.m; ++i)
        if (msg.true_worlds.test(i))
            current.push_back(Implicant{full, atom_bits(u, i)});

    auto less = [](const Implicant& a, const Implicant& b) {
        return a.care != b.care ? a.care < b.care : a.values < b.values;
    };

    std::vector<Implicant> primes;
    while (!current.empty()) {
        std::sort(current.begin(), current.end(), less);
        current.erase(std::unique(current.begin(), current.end()), current.end());
        std::vector<bool> combined(current.size(), false);
        std::vector<Implicant> next;
        for (std::size_t a = 0; a < current.size(); ++a) {
            for (std::size_t b = a + 1; b < current.size(); ++b) {
                if (current[a].care != current[b].care)
                    continue;
                std::uint32_t diff = current[a].values ^ current[b].values;
                if (std::popcount(diff) != 1)
                    continue;
                std::uint32_t care = current[a].care & ~diff;
                next.push_back(Implicant{care, current[a].values & care});
                combined[a] = combined[b] = true;
            }
        }
        for (std::size_t a = 0; a < current.size(); ++a)
            if (!combined[a])
                primes.push_back(current[a]);
        current = std::move(next);
    }
    std::sort(primes.begin(), primes.end(), less);
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

FormulaPtr canonical_formula(const Message& msg, const Universe& u) {
    if (msg.is_contradiction())
        return make_and(literal(u, 0, true), literal(u, 0, false));
    if (msg.is_tautology())
        return make_or(literal(u, 0, true), literal(u, 0, false));

    std::vector<Implicant> primes = prime_implicants(msg, u);
    std::sort(primes.begin(), primes.end(), [&](const Implicant& a, const Implicant& b) {
        return term_key(a, u.n) < term_key(b, u.n);
    });

    FormulaPtr result;
    for (const Implicant& imp : primes) {
        FormulaPtr term;
        for (std::size_t j = 0; j < u.n; ++j) {
            if (!((imp.care >> j) & 1u))
                continue;
            FormulaPtr lit = literal(u, j, (imp.values >> j) & 1u);
            term = term ? make_and(std::move(term), std::move(lit)) : std::move(lit);
        }
        result = result ? make_or(std::move(result), std::move(term)) : std::move(term);
    }
    return result;
}

std::vector<Message> enumerate_messages(const Universe& u, ExecutionPolicy policy) {
    if (u.n > Universe::kEnumerateCap)
        throw UniverseTooLarge(u.n, Universe::kEnumerateCap);

    const std::uint64_t total = std::uint64_t(1) << u.m;
    std::vector<std::uint64_t> masks(total);
    for (std::uint64_t mask = 0; mask < total; ++mask)
        masks[mask] = mask;
    std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a > b;
    });

    std::vector<Message> out(total);
    auto build = [&](std::int64_t idx) {
        Message msg;
        msg.true_worlds = WorldSet(u.m);
        for (std::size_t i = 0; i < u.m; ++i)
            if ((masks[idx] >> i) & 1u)
                msg.true_worlds.set(i);
        msg.source = canonical_formula(msg, u);
        out[idx] = std::move(msg);
    };

    if (policy == ExecutionPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic, 256)
        for (std::int64_t idx = 0; idx < std::int64_t(total); ++idx)
            build(idx);
    } else {
        for (std::int64_t idx = 0; idx < std::int64_t(total); ++idx)
            build(idx);
    }
    return out;
}

LiteralProfile literal_profile(const Message& msg, World w, const Universe& u) {
    FormulaPtr f;
    if (msg.source && is_nnf(*msg.source))
        f = *msg.source;
    else
        f = canonical_formula(msg, u);

    std::set<std::pair<std::string, bool>> literals;
    auto walk = [&](auto&& self, const FormulaPtr& node) -> void {
        switch (node->kind) {
            case Formula::Kind::Atom:
                literals.insert({node->name, true});
                break;
            case Formula::Kind::Not:
                literals.insert({node->lhs->name, false});
                break;
            case Formula::Kind::And:
            case Formula::Kind::Or:
                self(self, node->lhs);
                self(self, node->rhs);
                break;
        }
    };
    walk(walk, f);

    LiteralProfile profile;
    for (const auto& [name, positive] : literals) {
        bool holds = w.atom_true(u, u.atom_index(name)) == positive;
        (holds ? profile.t : profile.f)++;
    }
    return profile;
}

}  // namespace semispace

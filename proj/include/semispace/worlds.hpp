#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "semispace/formula.hpp"

namespace semispace {

class DuplicateAtom : public std::runtime_error {
public:
    explicit DuplicateAtom(const std::string& name)
        : std::runtime_error("duplicate atom '" + name + "'"), name(name) {}
    std::string name;
};

class EmptyUniverse : public std::runtime_error {
public:
    EmptyUniverse() : std::runtime_error("a universe needs at least one atom") {}
};

class UnknownAtom : public std::runtime_error {
public:
    explicit UnknownAtom(const std::string& name)
        : std::runtime_error("atom '" + name + "' is not in the universe"), name(name) {}
    std::string name;
};

class UniverseTooLarge : public std::runtime_error {
public:
    UniverseTooLarge(std::size_t n, std::size_t cap)
        : std::runtime_error("universe of " + std::to_string(n) + " atoms exceeds the cap of " +
                             std::to_string(cap)),
          n(n),
          cap(cap) {}
    std::size_t n;
    std::size_t cap;
};

// Ordered atom list; m = 2^n worlds, two truth values per atom.
struct Universe {
    std::vector<std::string> atoms;
    std::size_t n = 0;
    std::size_t m = 0;

    static constexpr std::size_t kInterpretCap = 16;   // m up to 65536 worlds
    static constexpr std::size_t kEnumerateCap = 4;    // 2^(2^4) = 65536 messages

    std::size_t atom_index(const std::string& name) const;
};

Universe build_universe(const std::vector<std::string>& atom_names);

// A complete state of affairs. Atom j of the universe is true in world i
// iff binary digit (n-1-j) of i is 1; the first atom is the most
// significant digit, so world m-1 is the all-true state.
struct World {
    std::uint32_t index = 0;

    bool atom_true(const Universe& u, std::size_t atom_idx) const {
        return (index >> (u.n - 1 - atom_idx)) & 1u;
    }

    Assignment assignment(const Universe& u) const;
};

World world_from_index(const Universe& u, std::uint32_t index);

// The complete conjunctive state true exactly at w.
FormulaPtr minterm_formula(const Universe& u, World w);

// Subset of world indices, fixed size m.
class WorldSet {
public:
    WorldSet() = default;
    explicit WorldSet(std::size_t m) : m_(m), bits_((m + 63) / 64, 0) {}

    std::size_t size() const { return m_; }
    bool test(std::size_t i) const { return (bits_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i) { bits_[i / 64] |= std::uint64_t(1) << (i % 64); }
    std::size_t count() const;
    WorldSet complement() const;

    bool operator==(const WorldSet& other) const = default;

    // Hexadecimal bitmask, most-significant world = highest index.
    std::string to_hex() const;
    static WorldSet from_hex(const std::string& hex, std::size_t m);

    // Low 64 bits; only meaningful when m <= 64.
    std::uint64_t low_bits() const { return bits_.empty() ? 0 : bits_[0]; }

private:
    std::size_t m_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct Message {
    WorldSet true_worlds;
    std::optional<FormulaPtr> source;

    bool is_contradiction() const { return true_worlds.count() == 0; }
    bool is_tautology() const { return true_worlds.count() == true_worlds.size(); }
};

Message interpret(const FormulaPtr& f, const Universe& u);

// An implicant: a conjunction of literals. Bit j of care selects atom j,
// bit j of values gives its polarity. care == 0 is the empty implicant.
struct Implicant {
    std::uint32_t care = 0;
    std::uint32_t values = 0;

    bool operator==(const Implicant&) const = default;
    bool covers(std::uint32_t world_bits) const { return (world_bits & care) == (values & care); }
};

// Complete set of prime implicants (Blake canonical form) by
// Quine-McCluskey merging. Empty for the contradiction; the empty
// implicant alone for the tautology.
std::vector<Implicant> prime_implicants(const Message& msg, const Universe& u);

// Disjunction of all prime implicants with deterministic literal and term
// ordering (by atom index, positive before negative). The contradiction
// and tautology map to "a a'" and "a + a'" over the first atom.
FormulaPtr canonical_formula(const Message& msg, const Universe& u);

enum class ExecutionPolicy { Serial, Parallel };

// All 2^m messages with canonical source formulas, ordered by ascending
// true-world count, then descending bitmask (the Table 1 order).
std::vector<Message> enumerate_messages(const Universe& u,
                                        ExecutionPolicy policy = ExecutionPolicy::Parallel);

// Distinct literals of the message's formula split by truth at w.
struct LiteralProfile {
    std::size_t t = 0;  // literals satisfied at w
    std::size_t f = 0;  // literals falsified at w
};

LiteralProfile literal_profile(const Message& msg, World w, const Universe& u);

}  // namespace semispace

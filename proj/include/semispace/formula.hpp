#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>

namespace semispace {

// Propositional formulas in digital (sum-of-products) notation:
// prime = negation, juxtaposition or '.' = conjunction, '+' = disjunction.
struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    enum class Kind { Atom, Not, And, Or };

    Kind kind;
    std::string name;  // Atom only
    FormulaPtr lhs;    // Not operand, And/Or left
    FormulaPtr rhs;    // And/Or right
};

FormulaPtr make_atom(std::string name);
FormulaPtr make_not(FormulaPtr operand);
FormulaPtr make_and(FormulaPtr left, FormulaPtr right);
FormulaPtr make_or(FormulaPtr left, FormulaPtr right);

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b);

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::size_t offset, const std::string& expected)
        : std::runtime_error("syntax error at offset " + std::to_string(offset) +
                             ": expected " + expected),
          offset(offset),
          expected(expected) {}

    std::size_t offset;
    std::string expected;
};

class UnboundAtom : public std::runtime_error {
public:
    explicit UnboundAtom(const std::string& name)
        : std::runtime_error("atom '" + name + "' is not bound"), name(name) {}

    std::string name;
};

// Grammar: expr = term *("+" term) ; term = factor *(["."] factor) ;
// factor = (atom / "(" expr ")") *"'" ; atom = [a-z][0-9]*.
FormulaPtr parse(const std::string& text);

// Minimal parenthesization; parse(render(f)) is structurally equal to f.
std::string render(const FormulaPtr& f);

using Assignment = std::map<std::string, bool>;

bool evaluate(const FormulaPtr& f, const Assignment& assignment);

// Negation-normal form of the negation: De Morgan pushed to literals,
// double negations cancelled.
FormulaPtr negate(const FormulaPtr& f);

// Is f already in negation-normal form (Not only over atoms)?
bool is_nnf(const FormulaPtr& f);

std::set<std::string> atoms(const FormulaPtr& f);

}  // namespace semispace

#include "semispace/formula.hpp"

#include <cctype>

namespace semispace {

FormulaPtr make_atom(std::string name) {
    return std::make_shared<const Formula>(Formula{Formula::Kind::Atom, std::move(name), nullptr, nullptr});
}

FormulaPtr make_not(FormulaPtr operand) {
    return std::make_shared<const Formula>(Formula{Formula::Kind::Not, {}, std::move(operand), nullptr});
}

FormulaPtr make_and(FormulaPtr left, FormulaPtr right) {
    return std::make_shared<const Formula>(Formula{Formula::Kind::And, {}, std::move(left), std::move(right)});
}

FormulaPtr make_or(FormulaPtr left, FormulaPtr right) {
    return std::make_shared<const Formula>(Formula{Formula::Kind::Or, {}, std::move(left), std::move(right)});
}

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b)
        return true;
    if (!a || !b || a->kind != b->kind)
        return false;
    switch (a->kind) {
        case Formula::Kind::Atom:
            return a->name == b->name;
        case Formula::Kind::Not:
            return structurally_equal(a->lhs, b->lhs);
        case Formula::Kind::And:
        case Formula::Kind::Or:
            return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
    }
    return false;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    FormulaPtr run() {
        skip_ws();
        if (pos_ == text_.size())
            throw SyntaxError(0, "a formula (input is empty)");
        FormulaPtr f = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw SyntaxError(pos_, "end of input or an operator");
        return f;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_factor_start() const {
        if (pos_ >= text_.size())
            return false;
        char c = text_[pos_];
        return c == '(' || (c >= 'a' && c <= 'z');
    }

    FormulaPtr expr() {
        FormulaPtr left = term();
        skip_ws();
        while (pos_ < text_.size() && text_[pos_] == '+') {
            ++pos_;
            skip_ws();
            left = make_or(std::move(left), term());
            skip_ws();
        }
        return left;
    }

    FormulaPtr term() {
        FormulaPtr left = factor();
        for (;;) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '.') {
                ++pos_;
                skip_ws();
                left = make_and(std::move(left), factor());
            } else if (at_factor_start()) {
                left = make_and(std::move(left), factor());
            } else {
                return left;
            }
        }
    }

    FormulaPtr factor() {
        skip_ws();
        if (pos_ >= text_.size())
            throw SyntaxError(pos_, "an atom or '('");
        FormulaPtr f;
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            f = expr();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw SyntaxError(pos_, "')'");
            ++pos_;
        } else if (c >= 'a' && c <= 'z') {
            std::size_t start = pos_++;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            f = make_atom(text_.substr(start, pos_ - start));
        } else {
            throw SyntaxError(pos_, "an atom or '('");
        }
        skip_ws();
        while (pos_ < text_.size() && text_[pos_] == '\'') {
            ++pos_;
            f = make_not(std::move(f));
            skip_ws();
        }
        return f;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

// Precedence levels for rendering: Or = 1, And = 2, Not/Atom = 3.
int precedence(const FormulaPtr& f) {
    switch (f->kind) {
        case Formula::Kind::Or: return 1;
        case Formula::Kind::And: return 2;
        default: return 3;
    }
}

void render_into(const FormulaPtr& f, std::string& out) {
    switch (f->kind) {
        case Formula::Kind::Atom:
            out += f->name;
            break;
        case Formula::Kind::Not:
            if (f->lhs->kind == Formula::Kind::Atom) {
                render_into(f->lhs, out);
            } else {
                out += '(';
                render_into(f->lhs, out);
                out += ')';
            }
            out += '\'';
            break;
        case Formula::Kind::And: {
            // Left child needs parens below And precedence; the right child
            // also when it is an And, so left associativity survives reparsing.
            if (precedence(f->lhs) < 2) {
                out += '(';
                render_into(f->lhs, out);
                out += ')';
            } else {
                render_into(f->lhs, out);
            }
            if (precedence(f->rhs) <= 2) {
                out += '(';
                render_into(f->rhs, out);
                out += ')';
            } else {
                render_into(f->rhs, out);
            }
            break;
        }
        case Formula::Kind::Or: {
            render_into(f->lhs, out);
            out += " + ";
            if (f->rhs->kind == Formula::Kind::Or) {
                out += '(';
                render_into(f->rhs, out);
                out += ')';
            } else {
                render_into(f->rhs, out);
            }
            break;
        }
    }
}

FormulaPtr to_nnf(const FormulaPtr& f, bool negated) {
    switch (f->kind) {
        case Formula::Kind::Atom:
            return negated ? make_not(f) : f;
        case Formula::Kind::Not:
            return to_nnf(f->lhs, !negated);
        case Formula::Kind::And:
            if (negated)
                return make_or(to_nnf(f->lhs, true), to_nnf(f->rhs, true));
            return make_and(to_nnf(f->lhs, false), to_nnf(f->rhs, false));
        case Formula::Kind::Or:
            if (negated)
                return make_and(to_nnf(f->lhs, true), to_nnf(f->rhs, true));
            return make_or(to_nnf(f->lhs, false), to_nnf(f->rhs, false));
    }
    return f;
}

}  // namespace

FormulaPtr parse(const std::string& text) {
    return Parser(text).run();
}

std::string render(const FormulaPtr& f) {
    std::string out;
    render_into(f, out);
    return out;
}

bool evaluate(const FormulaPtr& f, const Assignment& assignment) {
    switch (f->kind) {
        case Formula::Kind::Atom: {
            auto it = assignment.find(f->name);
            if (it == assignment.end())
                throw UnboundAtom(f->name);
            return it->second;
        }
        case Formula::Kind::Not:
            return !evaluate(f->lhs, assignment);
        case Formula::Kind::And:
            return evaluate(f->lhs, assignment) && evaluate(f->rhs, assignment);
        case Formula::Kind::Or:
            return evaluate(f->lhs, assignment) || evaluate(f->rhs, assignment);
    }
    return false;
}

FormulaPtr negate(const FormulaPtr& f) {
    return to_nnf(f, true);
}

bool is_nnf(const FormulaPtr& f) {
    switch (f->kind) {
        case Formula::Kind::Atom:
            return true;
        case Formula::Kind::Not:
            return f->lhs->kind == Formula::Kind::Atom;
        case Formula::Kind::And:
        case Formula::Kind::Or:
            return is_nnf(f->lhs) && is_nnf(f->rhs);
    }
    return false;
}

std::set<std::string> atoms(const FormulaPtr& f) {
    std::set<std::string> out;
    auto walk = [&](auto&& self, const FormulaPtr& node) -> void {
        switch (node->kind) {
            case Formula::Kind::Atom:
                out.insert(node->name);
                break;
            case Formula::Kind::Not:
                self(self, node->lhs);
                break;
            case Formula::Kind::And:
            case Formula::Kind::Or:
                self(self, node->lhs);
                self(self, node->rhs);
                break;
        }
    };
    walk(walk, f);
    return out;
}

}  // namespace semispace

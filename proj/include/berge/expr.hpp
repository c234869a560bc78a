#ifndef BERGE_EXPR_HPP
#define BERGE_EXPR_HPP

#include <cctype>
#include <cmath>
#include <charconv>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "berge/errors.hpp"
#include "berge/game.hpp"

namespace berge {

/// A parsed polynomial in the variables s1..sn with operators + - * ^,
/// parentheses, unary minus and real literals. Evaluation is pure.
class polynomial_expr {
    struct node;
    using node_ptr = std::shared_ptr<const node>;
    struct node {
        enum class op { constant, variable, add, sub, mul, neg, pow } kind;
        double value = 0.0;       // constant
        std::size_t index = 0;    // variable
        int exponent = 0;         // pow
        node_ptr lhs, rhs;
    };

public:
    /// Parses `text` with variables s1..s<n_vars>. Throws parse_error with a
    /// character position on malformed input.
    static polynomial_expr parse(std::string_view text, std::size_t n_vars) {
        parser p{text, 0, n_vars};
        node_ptr root = p.parse_expr();
        p.skip_ws();
        if (p.pos != text.size())
            throw parse_error("unexpected character '" + std::string(1, text[p.pos]) +
                              "' at position " + std::to_string(p.pos + 1));
        polynomial_expr e;
        e.root_ = std::move(root);
        return e;
    }

    double eval(const strategy_profile& s) const { return eval_node(*root_, s); }

private:
    polynomial_expr() = default;

    static double eval_node(const node& nd, const strategy_profile& s) {
        switch (nd.kind) {
            case node::op::constant: return nd.value;
            case node::op::variable: return s[nd.index];
            case node::op::add: return eval_node(*nd.lhs, s) + eval_node(*nd.rhs, s);
            case node::op::sub: return eval_node(*nd.lhs, s) - eval_node(*nd.rhs, s);
            case node::op::mul: return eval_node(*nd.lhs, s) * eval_node(*nd.rhs, s);
            case node::op::neg: return -eval_node(*nd.lhs, s);
            case node::op::pow: {
                double base = eval_node(*nd.lhs, s);
                double out = 1.0;
                for (int k = 0; k < nd.exponent; ++k) out *= base;
                return out;
            }
        }
        return 0.0;
    }

    struct parser {
        std::string_view text;
        std::size_t pos;
        std::size_t n_vars;

        void skip_ws() {
            while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
        }
        bool peek(char c) {
            skip_ws();
            return pos < text.size() && text[pos] == c;
        }
        bool consume(char c) {
            if (!peek(c)) return false;
            ++pos;
            return true;
        }
        [[noreturn]] void fail(const std::string& what) {
            throw parse_error(what + " at position " + std::to_string(pos + 1));
        }

        node_ptr parse_expr() {
            node_ptr lhs = parse_term();
            for (;;) {
                if (consume('+')) {
                    auto nd = std::make_shared<node>();
                    nd->kind = node::op::add;
                    nd->lhs = std::move(lhs);
                    nd->rhs = parse_term();
                    lhs = std::move(nd);
                } else if (consume('-')) {
                    auto nd = std::make_shared<node>();
                    nd->kind = node::op::sub;
                    nd->lhs = std::move(lhs);
                    nd->rhs = parse_term();
                    lhs = std::move(nd);
                } else {
                    return lhs;
                }
            }
        }

        node_ptr parse_term() {
            node_ptr lhs = parse_unary();
            while (consume('*')) {
                auto nd = std::make_shared<node>();
                nd->kind = node::op::mul;
                nd->lhs = std::move(lhs);
                nd->rhs = parse_unary();
                lhs = std::move(nd);
            }
            return lhs;
        }

        node_ptr parse_unary() {
            if (consume('-')) {
                auto nd = std::make_shared<node>();
                nd->kind = node::op::neg;
                nd->lhs = parse_unary();
                return nd;
            }
            return parse_power();
        }

        node_ptr parse_power() {
            node_ptr base = parse_atom();
            if (!consume('^')) return base;
            skip_ws();
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (pos == start) fail("expected integer exponent");
            int exp = 0;
            std::from_chars(text.data() + start, text.data() + pos, exp);
            auto nd = std::make_shared<node>();
            nd->kind = node::op::pow;
            nd->exponent = exp;
            nd->lhs = std::move(base);
            return nd;
        }

        node_ptr parse_atom() {
            skip_ws();
            if (pos >= text.size()) fail("unexpected end of expression");
            if (consume('(')) {
                node_ptr inner = parse_expr();
                if (!consume(')')) fail("expected ')'");
                return inner;
            }
            const char c = text[pos];
            if (c == 's') {
                std::size_t start = ++pos;
                while (pos < text.size() &&
                       std::isdigit(static_cast<unsigned char>(text[pos])))
                    ++pos;
                if (pos == start) fail("expected variable index after 's'");
                std::size_t idx = 0;
                std::from_chars(text.data() + start, text.data() + pos, idx);
                if (idx < 1 || idx > n_vars)
                    fail("variable s" + std::to_string(idx) + " out of range (1.." +
                         std::to_string(n_vars) + ")");
                auto nd = std::make_shared<node>();
                nd->kind = node::op::variable;
                nd->index = idx - 1;
                return nd;
            }
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                std::size_t start = pos;
                while (pos < text.size() &&
                       (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                        text[pos] == '.'))
                    ++pos;
                if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
                    std::size_t mark = pos++;
                    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
                    if (pos < text.size() &&
                        std::isdigit(static_cast<unsigned char>(text[pos]))) {
                        while (pos < text.size() &&
                               std::isdigit(static_cast<unsigned char>(text[pos])))
                            ++pos;
                    } else {
                        pos = mark;  // not an exponent suffix
                    }
                }
                double value = 0.0;
                const auto res =
                    std::from_chars(text.data() + start, text.data() + pos, value);
                if (res.ec != std::errc{} || res.ptr != text.data() + pos) {
                    pos = start;
                    fail("malformed number");
                }
                auto nd = std::make_shared<node>();
                nd->kind = node::op::constant;
                nd->value = value;
                return nd;
            }
            fail(std::string("unexpected character '") + c + "'");
        }
    };

    node_ptr root_;
};

}  // namespace berge

#endif  // BERGE_EXPR_HPP

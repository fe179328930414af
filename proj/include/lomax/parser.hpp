#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lomax/expr.hpp"
#include "lomax/lincomb.hpp"

namespace lomax {

// Recursive-descent parser for the expression language
//
//   expr     := sum
//   sum      := ["+"|"-"] prod (("+"|"-") prod)*
//   prod     := rational "*" atom | rational | atom
//   atom     := var | "(" expr ")" | "max" "(" expr ("," expr)* ")"
//             | "min" "(" expr ("," expr)* ")"
//   var      := "x" index                 (1 <= index <= n)
//   rational := integer | integer "/" positive-integer | decimal
//
// Whitespace is insignificant. Products are rational-literal times
// expression only; anything nonlinear is a parse error.
namespace parser_detail {

class Parser {
public:
    Parser(std::string_view text, int n) : text_(text), n_(n) {
        if (n_ < 1) throw Error("dimension must be at least 1");
    }

    ExprPtr run() {
        ExprPtr e = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }

    bool lookahead_digit() {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
    }

    ExprPtr parse_sum() {
        std::vector<ExprPtr> parts;
        bool negate = false;
        if (consume('-'))
            negate = true;
        else
            consume('+');
        parts.push_back(signed_part(parse_prod(), negate));
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            parts.push_back(signed_part(parse_prod(), c == '-'));
        }
        if (parts.size() == 1) return parts.front();
        return make_sum(std::move(parts));
    }

    static ExprPtr signed_part(ExprPtr e, bool negate) {
        return negate ? make_scale(Rational(-1), std::move(e)) : std::move(e);
    }

    ExprPtr parse_prod() {
        if (lookahead_digit()) {
            Rational c = parse_rational();
            if (consume('*')) return make_scale(c, parse_atom());
            return make_affine(AffineFunc(std::vector<Rational>(n_, Rational(0)), c));
        }
        return parse_atom();
    }

    ExprPtr parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_sum();
            expect(')');
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word = parse_word();
            if (word == "max" || word == "min") {
                expect('(');
                std::vector<ExprPtr> args;
                args.push_back(parse_sum());
                while (consume(',')) args.push_back(parse_sum());
                expect(')');
                return word == "max" ? make_max(std::move(args)) : make_min(std::move(args));
            }
            if (word.size() > 1 && word.front() == 'x') {
                std::string_view digits(word.data() + 1, word.size() - 1);
                bool numeric = !digits.empty();
                for (char d : digits)
                    if (!std::isdigit(static_cast<unsigned char>(d))) numeric = false;
                if (numeric) {
                    long idx = std::stol(std::string(digits));
                    if (idx < 1 || idx > n_)
                        fail("variable x" + std::string(digits) + " out of range for dimension " +
                             std::to_string(n_));
                    return make_affine(AffineFunc::coordinate(n_, static_cast<int>(idx - 1)));
                }
            }
            fail("unknown identifier '" + word + "'");
        }
        fail("expected a variable, number, parenthesis, max or min");
    }

    std::string parse_word() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string scan_digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Rational parse_rational() {
        skip_ws();
        std::string ipart = scan_digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            std::string fpart = scan_digits();
            if (fpart.empty()) fail("malformed decimal literal");
            return literal(ipart + "." + fpart);
        }
        if (ipart.empty()) fail("expected a number");
        std::size_t save = pos_;
        if (consume('/')) {
            skip_ws();
            std::string den = scan_digits();
            if (den.empty())
                pos_ = save;  // not a rational literal; leave '/' for the caller to reject
            else
                return literal(ipart + "/" + den);
        }
        return literal(ipart);
    }

    Rational literal(const std::string& text) const {
        try {
            return rational_from_string(text);
        } catch (const Error& e) {
            throw ParseError(e.what(), pos_);
        }
    }

    std::string_view text_;
    int n_;
    std::size_t pos_ = 0;
};

}  // namespace parser_detail

inline ExprPtr parse(std::string_view text, int n) {
    return parser_detail::Parser(text, n).run();
}

// --- pretty printing -------------------------------------------------------

inline std::string format(const AffineFunc& f) {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < f.n(); ++i) {
        const Rational& c = f.gradient[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational a = abs(c);
        if (first) {
            if (sign(c) < 0) out << "-";
            first = false;
        } else {
            out << (sign(c) < 0 ? " - " : " + ");
        }
        if (a != 1) out << to_string(a) << "*";
        out << "x" << (i + 1);
    }
    if (f.constant != 0 || first) {
        if (first)
            out << (sign(f.constant) < 0 ? "-" : "") << to_string(abs(f.constant));
        else
            out << (sign(f.constant) < 0 ? " - " : " + ") << to_string(abs(f.constant));
    }
    return out.str();
}

inline std::string format(const MaxTerm& t) {
    std::ostringstream out;
    out << "max(";
    bool first = true;
    for (const auto& f : t.constituents()) {
        if (!first) out << ", ";
        out << format(f);
        first = false;
    }
    out << ")";
    return out.str();
}

inline std::string format(const ExprNode& e) {
    switch (e.kind) {
        case ExprNode::Kind::Affine:
            return format(e.affine);
        case ExprNode::Kind::Max:
        case ExprNode::Kind::Min: {
            std::ostringstream out;
            out << (e.kind == ExprNode::Kind::Max ? "max(" : "min(");
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i) out << ", ";
                out << format(*e.children[i]);
            }
            out << ")";
            return out.str();
        }
        case ExprNode::Kind::Sum: {
            std::ostringstream out;
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                std::string part = format(*e.children[i]);
                if (i == 0) {
                    out << part;
                } else if (!part.empty() && part.front() == '-') {
                    out << " - " << part.substr(1);
                } else {
                    out << " + " << part;
                }
            }
            return out.str();
        }
        case ExprNode::Kind::Scale: {
            const ExprNode& child = *e.children.front();
            bool atom = child.kind == ExprNode::Kind::Max || child.kind == ExprNode::Kind::Min;
            std::ostringstream out;
            if (e.scale == -1)
                out << "-";
            else
                out << to_string(e.scale) << "*";
            if (atom)
                out << format(child);
            else
                out << "(" << format(child) << ")";
            return out.str();
        }
    }
    throw InternalError("format: unknown node kind");
}

inline std::string format(const LinComb& c) {
    if (c.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& lt : c.terms()) {
        Rational a = abs(lt.coeff);
        if (first) {
            if (sign(lt.coeff) < 0) out << "- ";
            first = false;
        } else {
            out << (sign(lt.coeff) < 0 ? " - " : " + ");
        }
        if (a != 1) out << to_string(a) << "*";
        out << format(lt.term);
    }
    return out.str();
}

}  // namespace lomax

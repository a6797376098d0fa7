// Text grammar for differential polynomials and system files.
//
//   poly   := term (('+'|'-') term)*
//   term   := element ('*' element)*
//   element:= coeff | factor
//   factor := ident ['_' nat] ['^' nat]        (x_2 = second derivative of x)
//   coeff  := int | int '/' int | '(' tpoly ')' ['/' '(' tpoly ')']
//
// where tpoly is an integer polynomial in t. System files start with a
// header `vars: <ident list>; order: <l>;` (optionally `consts: <ident
// list>;`) followed by one polynomial per line.

#ifndef DIFFVOL_PARSE_HPP
#define DIFFVOL_PARSE_HPP

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "diffpoly.hpp"

namespace diffvol {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what),
          pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

class PolyParser {
public:
    PolyParser(const std::string& text, const JetLayout& layout)
        : text_(text), layout_(layout) {}

    DiffPolynomial parse() {
        DiffPolynomial p = parse_poly();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    DiffPolynomial parse_poly() {
        skip_ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            if (take() == '-') sign = -1;
        }
        DiffPolynomial p = parse_term();
        if (sign < 0) p = -p;
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            take();
            DiffPolynomial t = parse_term();
            p = (c == '+') ? p + t : p - t;
        }
        return p;
    }

    DiffPolynomial parse_term() {
        DiffPolynomial p = parse_element();
        while (true) {
            skip_ws();
            if (peek() != '*') break;
            take();
            p = p * parse_element();
        }
        return p;
    }

    DiffPolynomial parse_element() {
        skip_ws();
        char c = peek();
        if (c == '(' || std::isdigit(static_cast<unsigned char>(c)))
            return DiffPolynomial::constant(layout_, parse_coeff());
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_factor();
        fail("expected coefficient or variable");
    }

    DiffPolynomial parse_factor() {
        std::size_t start = pos_;
        std::string name = parse_ident();
        int order = 0;
        if (peek() == '_') {
            take();
            order = static_cast<int>(parse_nat());
        }
        DiffPolynomial base(layout_);
        int vi = layout_.var_index(name);
        if (vi >= 0) {
            if (order > layout_.l())
                throw ParseError(start, "jet order " + std::to_string(order) +
                                            " of '" + name + "' exceeds layout order " +
                                            std::to_string(layout_.l()));
            base = DiffPolynomial::variable(layout_, vi, order);
        } else {
            int ci = layout_.const_index(name);
            if (ci < 0) throw ParseError(start, "unknown variable '" + name + "'");
            if (order > 0)
                throw ParseError(start, "constant '" + name + "' has no derivatives");
            base = DiffPolynomial::opaque_constant(layout_, ci);
        }
        if (peek() == '^') {
            take();
            return base.pow(static_cast<unsigned>(parse_nat()));
        }
        return base;
    }

    Rational parse_coeff() {
        skip_ws();
        if (peek() == '(') {
            ZPoly num = parse_paren_tpoly();
            skip_ws();
            if (peek() == '/') {
                take();
                skip_ws();
                if (peek() != '(') fail("expected '(' after '/'");
                ZPoly den = parse_paren_tpoly();
                if (den.is_zero()) fail("zero denominator");
                return Rational(num, den);
            }
            return Rational(num);
        }
        Int num = parse_int();
        if (peek() == '/') {
            take();
            skip_ws();
            Int den = parse_int();
            if (den == 0) fail("zero denominator");
            return Rational(ZPoly(num), ZPoly(den));
        }
        return Rational(ZPoly(num));
    }

    ZPoly parse_paren_tpoly() {
        take();  // '('
        ZPoly p = parse_tpoly();
        skip_ws();
        if (peek() != ')') fail("expected ')'");
        take();
        return p;
    }

    // integer polynomial in t: tterm (('+'|'-') tterm)*
    ZPoly parse_tpoly() {
        skip_ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            if (take() == '-') sign = -1;
        }
        ZPoly p = parse_tterm();
        if (sign < 0) p = -p;
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            take();
            ZPoly t = parse_tterm();
            p = (c == '+') ? p + t : p - t;
        }
        return p;
    }

    // tterm := int ['*' tvar] | tvar ;  tvar := 't' ['^' nat]
    ZPoly parse_tterm() {
        skip_ws();
        Int c(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = parse_int();
            have_coeff = true;
            skip_ws();
            if (peek() == '*') {
                take();
                skip_ws();
            } else if (peek() != 't') {
                return ZPoly(c);
            }
        }
        if (peek() != 't') {
            if (have_coeff) return ZPoly(c);
            fail("expected integer or 't'");
        }
        take();
        unsigned long e = 1;
        if (peek() == '^') {
            take();
            e = parse_nat();
        }
        std::vector<Int> coef(e + 1);
        coef[e] = c;
        return ZPoly(std::move(coef));
    }

    std::string parse_ident() {
        skip_ws();
        if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected identifier");
        std::string s;
        while (std::isalnum(static_cast<unsigned char>(peek()))) s += take();
        return s;
    }

    unsigned long parse_nat() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected number");
        std::string s;
        while (std::isdigit(static_cast<unsigned char>(peek()))) s += take();
        return std::stoul(s);
    }

    Int parse_int() {
        skip_ws();
        std::string s;
        if (peek() == '-') s += take();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        while (std::isdigit(static_cast<unsigned char>(peek()))) s += take();
        return Int(s);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    const std::string& text_;
    const JetLayout& layout_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline DiffPolynomial parse_poly(const std::string& text, const JetLayout& layout) {
    return detail::PolyParser(text, layout).parse();
}

/// Text form that re-parses to an equal polynomial; terms in descending
/// lexicographic exponent order.
inline std::string to_text(const DiffPolynomial& p) {
    if (p.is_zero()) return "0";
    const JetLayout& L = p.layout();
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Rational coeff = c;
        std::string sep = out.empty() ? "" : "+";
        // fold the sign of plain numeric coefficients into the separator
        if (coeff.is_constant() && coeff.as_number() < 0) {
            sep = "-";
            coeff = -coeff;
        }
        std::vector<std::string> factors;
        for (int i = 0; i < L.width(); ++i) {
            if (e[i] == 0) continue;
            std::string f = L.coord_name(i);
            if (e[i] > 1) f += "^" + std::to_string(e[i]);
            factors.push_back(std::move(f));
        }
        std::string cs = coeff.str();
        std::string term;
        if (factors.empty()) {
            term = cs;
        } else {
            if (cs != "1") term = cs + "*";
            for (std::size_t i = 0; i < factors.size(); ++i)
                term += (i ? "*" : "") + factors[i];
        }
        out += sep + term;
    }
    return out;
}

/// A parsed system file: layout plus one polynomial per non-empty line.
struct PolySystem {
    JetLayout layout;
    std::vector<DiffPolynomial> polys;
};

inline PolySystem parse_system(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> vars, consts;
    int order = -1;
    std::vector<std::string> body;
    bool in_header = true;
    // header: `vars: ...;` / `order: <l>;` / optional `consts: ...;`
    while (std::getline(in, line)) {
        std::istringstream probe(line);
        std::string first;
        probe >> first;
        if (in_header && (first == "vars:" || first == "consts:" || first == "order:")) {
            // one or more `key: items` statements, ';'-separated, on one line
            std::istringstream stmts(line);
            std::string stmt;
            while (std::getline(stmts, stmt, ';')) {
                std::istringstream ls(stmt);
                std::string key;
                ls >> key;
                if (key.empty()) continue;
                std::vector<std::string> toks;
                std::string tok;
                while (ls >> tok) {
                    while (!tok.empty() && tok.back() == ',') tok.pop_back();
                    if (!tok.empty()) toks.push_back(tok);
                }
                if (key == "vars:") vars = toks;
                else if (key == "consts:") consts = toks;
                else if (key == "order:") {
                    if (toks.size() != 1) throw ParseError(0, "bad order header");
                    order = std::stoi(toks[0]);
                } else
                    throw ParseError(0, "unknown header key '" + key + "'");
            }
        } else {
            in_header = false;
            std::size_t a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos || line[a] == '#') continue;
            body.push_back(line);
        }
    }
    if (vars.empty()) throw ParseError(0, "missing vars header");
    if (order < 0) throw ParseError(0, "missing order header");
    PolySystem sys{JetLayout(static_cast<int>(vars.size()), order, vars, consts), {}};
    for (const std::string& b : body) sys.polys.push_back(parse_poly(b, sys.layout));
    return sys;
}

}  // namespace diffvol

#endif

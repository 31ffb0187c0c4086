#pragma once

// A small expression language for naming knots:
//
//   expr      := term ('#' term)*
//   term      := '-' term | int '*' term
//              | 'mirror(' expr ')' | 'rev(' expr ')'
//              | 'cable(' int ';' expr ')'
//              | 'sat(' int ',' int ';' expr ';' expr ')'
//              | generator | '(' expr ')'
//   generator := 'unknot' | 'trefoil' | 'ltrefoil' | 'fig8' | 'twist(' int ')'
//
// '#' is left-associative and binds loosest; whitespace is insignificant.
// Parsing validates generator and satellite parameters, so an expression
// that parses always evaluates.

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "metrics.hpp"

namespace concordia::knotdsl {

struct Span {
    size_t begin = 0;  // byte offsets into the source
    size_t end = 0;
    size_t line = 1;
    size_t col = 1;
};

enum class ExprKind { generator, sum, neg, mirror, rev, times, cable, sat };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    ExprKind kind = ExprKind::generator;
    Span span;
    std::string gen_name;    // generator only
    long long gen_param = 0; // twist parameter
    long long n = 0;         // times factor, cable winding, or sat winding
    long long gw = 0;        // sat geometric winding
    std::vector<ExprPtr> kids;
};

struct ParseError : std::domain_error {
    size_t line;
    size_t col;
    ParseError(size_t l, size_t c, const std::string& msg)
        : std::domain_error("line " + std::to_string(l) + ", col " + std::to_string(c) + ": " +
                            msg),
          line(l),
          col(c) {}
};

namespace detail {

struct Token {
    enum Type { ident, integer, hash, minus, star, lparen, rparen, semi, comma, end };
    Type type = end;
    std::string text;
    long long value = 0;
    size_t pos = 0;
    size_t line = 1;
    size_t col = 1;
};

inline const char* token_name(Token::Type t) {
    switch (t) {
        case Token::ident: return "name";
        case Token::integer: return "integer";
        case Token::hash: return "'#'";
        case Token::minus: return "'-'";
        case Token::star: return "'*'";
        case Token::lparen: return "'('";
        case Token::rparen: return "')'";
        case Token::semi: return "';'";
        case Token::comma: return "','";
        default: return "end of input";
    }
}

inline std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    size_t i = 0, line = 1, col = 1;
    auto bump = [&](size_t k) {
        for (size_t t = 0; t < k; ++t) {
            if (src[i + t] == '\n') { ++line; col = 1; }
            else ++col;
        }
        i += k;
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') { bump(1); continue; }
        Token t;
        t.pos = i;
        t.line = line;
        t.col = col;
        if (c == '#') { t.type = Token::hash; t.text = "#"; bump(1); }
        else if (c == '-') { t.type = Token::minus; t.text = "-"; bump(1); }
        else if (c == '*') { t.type = Token::star; t.text = "*"; bump(1); }
        else if (c == '(') { t.type = Token::lparen; t.text = "("; bump(1); }
        else if (c == ')') { t.type = Token::rparen; t.text = ")"; bump(1); }
        else if (c == ';') { t.type = Token::semi; t.text = ";"; bump(1); }
        else if (c == ',') { t.type = Token::comma; t.text = ","; bump(1); }
        else if (c >= '0' && c <= '9') {
            size_t j = i;
            while (j < src.size() && src[j] >= '0' && src[j] <= '9') ++j;
            t.type = Token::integer;
            t.text = src.substr(i, j - i);
            try {
                t.value = std::stoll(t.text);
            } catch (const std::exception&) {
                throw ParseError(line, col, "integer literal out of range");
            }
            bump(j - i);
        } else if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
            size_t j = i;
            while (j < src.size() &&
                   ((src[j] >= 'a' && src[j] <= 'z') || (src[j] >= 'A' && src[j] <= 'Z') ||
                    (src[j] >= '0' && src[j] <= '9') || src[j] == '_'))
                ++j;
            t.type = Token::ident;
            t.text = src.substr(i, j - i);
            bump(j - i);
        } else {
            throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
        out.push_back(std::move(t));
    }
    Token e;
    e.type = Token::end;
    e.pos = src.size();
    e.line = line;
    e.col = col;
    out.push_back(e);
    return out;
}

class Parser {
  public:
    explicit Parser(const std::string& src) : toks_(tokenize(src)) {}

    ExprPtr run() {
        ExprPtr e = parse_expr();
        if (peek().type != Token::end)
            fail("expected '#' or end of input, found " + found());
        return e;
    }

  private:
    std::vector<Token> toks_;
    size_t at_ = 0;

    const Token& peek() const { return toks_[at_]; }
    Token take() { return toks_[at_++]; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(peek().line, peek().col, msg);
    }
    std::string found() const {
        const Token& t = peek();
        if (t.type == Token::end) return "end of input";
        return "'" + t.text + "'";
    }
    Token expect(Token::Type ty) {
        if (peek().type != ty)
            fail(std::string("expected ") + token_name(ty) + ", found " + found());
        return take();
    }

    long long parse_int() {
        bool negative = false;
        if (peek().type == Token::minus) { take(); negative = true; }
        Token t = expect(Token::integer);
        return negative ? -t.value : t.value;
    }

    ExprPtr parse_expr() {
        ExprPtr left = parse_term();
        while (peek().type == Token::hash) {
            take();
            ExprPtr right = parse_term();
            auto node = std::make_shared<Expr>();
            node->kind = ExprKind::sum;
            node->span = {left->span.begin, right->span.end, left->span.line, left->span.col};
            node->kids = {left, right};
            left = node;
        }
        return left;
    }

    ExprPtr parse_term() {
        const Token& t = peek();
        if (t.type == Token::minus) {
            Token m = take();
            ExprPtr inner = parse_term();
            auto node = std::make_shared<Expr>();
            node->kind = ExprKind::neg;
            node->span = {m.pos, inner->span.end, m.line, m.col};
            node->kids = {inner};
            return node;
        }
        if (t.type == Token::integer) {
            Token f = take();
            expect(Token::star);
            ExprPtr inner = parse_term();
            auto node = std::make_shared<Expr>();
            node->kind = ExprKind::times;
            node->span = {f.pos, inner->span.end, f.line, f.col};
            node->n = f.value;
            node->kids = {inner};
            return node;
        }
        if (t.type == Token::lparen) {
            take();
            ExprPtr inner = parse_expr();
            expect(Token::rparen);
            return inner;
        }
        if (t.type == Token::ident) {
            Token name = take();
            if (name.text == "mirror" || name.text == "rev") {
                expect(Token::lparen);
                ExprPtr inner = parse_expr();
                Token close = expect(Token::rparen);
                auto node = std::make_shared<Expr>();
                node->kind = (name.text == "mirror") ? ExprKind::mirror : ExprKind::rev;
                node->span = {name.pos, close.pos + 1, name.line, name.col};
                node->kids = {inner};
                return node;
            }
            if (name.text == "cable") {
                expect(Token::lparen);
                long long n = parse_int();
                expect(Token::semi);
                ExprPtr inner = parse_expr();
                Token close = expect(Token::rparen);
                auto node = std::make_shared<Expr>();
                node->kind = ExprKind::cable;
                node->span = {name.pos, close.pos + 1, name.line, name.col};
                node->n = n;
                node->kids = {inner};
                return node;
            }
            if (name.text == "sat") {
                expect(Token::lparen);
                long long w = parse_int();
                expect(Token::comma);
                long long gw = parse_int();
                expect(Token::semi);
                ExprPtr pattern = parse_expr();
                expect(Token::semi);
                ExprPtr companion = parse_expr();
                Token close = expect(Token::rparen);
                if (gw < 0 || gw < std::llabs(w))
                    throw ParseError(name.line, name.col,
                                     "satellite needs geometric winding >= |winding|");
                if ((gw - w) % 2 != 0)
                    throw ParseError(name.line, name.col,
                                     "satellite windings must agree mod 2");
                auto node = std::make_shared<Expr>();
                node->kind = ExprKind::sat;
                node->span = {name.pos, close.pos + 1, name.line, name.col};
                node->n = w;
                node->gw = gw;
                node->kids = {pattern, companion};
                return node;
            }
            if (name.text == "twist") {
                expect(Token::lparen);
                long long k = parse_int();
                Token close = expect(Token::rparen);
                if (k < 1)
                    throw ParseError(name.line, name.col, "twist parameter must be >= 1");
                auto node = std::make_shared<Expr>();
                node->kind = ExprKind::generator;
                node->span = {name.pos, close.pos + 1, name.line, name.col};
                node->gen_name = "twist";
                node->gen_param = k;
                return node;
            }
            if (name.text == "unknot" || name.text == "trefoil" || name.text == "ltrefoil" ||
                name.text == "fig8") {
                auto node = std::make_shared<Expr>();
                node->kind = ExprKind::generator;
                node->span = {name.pos, name.pos + name.text.size(), name.line, name.col};
                node->gen_name = name.text;
                return node;
            }
            throw ParseError(name.line, name.col, "unknown name '" + name.text + "'");
        }
        fail("expected a knot expression, found " + found());
    }
};

}  // namespace detail

inline ExprPtr parse(const std::string& src) { return detail::Parser(src).run(); }

// canonical form: parse(print(e)) reproduces the tree exactly
inline std::string print(const Expr& e) {
    auto wrap_sum = [](const ExprPtr& kid) {
        std::string s = print(*kid);
        return (kid->kind == ExprKind::sum) ? "(" + s + ")" : s;
    };
    switch (e.kind) {
        case ExprKind::generator:
            return (e.gen_name == "twist") ? "twist(" + std::to_string(e.gen_param) + ")"
                                           : e.gen_name;
        case ExprKind::sum:
            // left association is implicit, a right-leaning child keeps parens
            return print(*e.kids[0]) + " # " + wrap_sum(e.kids[1]);
        case ExprKind::neg:
            return "-" + wrap_sum(e.kids[0]);
        case ExprKind::mirror:
            return "mirror(" + print(*e.kids[0]) + ")";
        case ExprKind::rev:
            return "rev(" + print(*e.kids[0]) + ")";
        case ExprKind::times:
            return std::to_string(e.n) + "*" + wrap_sum(e.kids[0]);
        case ExprKind::cable:
            return "cable(" + std::to_string(e.n) + "; " + print(*e.kids[0]) + ")";
        case ExprKind::sat:
            return "sat(" + std::to_string(e.n) + ", " + std::to_string(e.gw) + "; " +
                   print(*e.kids[0]) + "; " + print(*e.kids[1]) + ")";
    }
    throw std::logic_error("unreachable expression kind");
}

inline KnotValue eval(const Expr& e) {
    KnotValue out;
    switch (e.kind) {
        case ExprKind::generator: {
            if (e.gen_name == "unknot") out = knot_from_matrix(unknot_matrix(), "unknot");
            else if (e.gen_name == "trefoil") out = knot_from_matrix(trefoil_matrix(), "trefoil");
            else if (e.gen_name == "ltrefoil")
                out = knot_from_matrix(left_trefoil_matrix(), "ltrefoil");
            else if (e.gen_name == "fig8") out = knot_from_matrix(figure_eight_matrix(), "fig8");
            else if (e.gen_name == "twist")
                out = knot_from_matrix(twist_matrix(e.gen_param), "twist");
            else throw std::logic_error("unknown generator in evaluated tree");
            break;
        }
        case ExprKind::sum:
            out = knot_connected_sum(eval(*e.kids[0]), eval(*e.kids[1]));
            break;
        case ExprKind::neg:
            out = knot_dualize(eval(*e.kids[0]));
            break;
        case ExprKind::mirror:
            out = knot_mirror(eval(*e.kids[0]));
            break;
        case ExprKind::rev:
            out = knot_reverse(eval(*e.kids[0]));
            break;
        case ExprKind::times:
            out = knot_multiple(e.n, eval(*e.kids[0]));
            break;
        case ExprKind::cable:
            out = apply(make_cable_operator(e.n), eval(*e.kids[0]));
            break;
        case ExprKind::sat: {
            KnotValue pattern = eval(*e.kids[0]);
            std::string plabel = pattern.label;
            out = apply(make_satellite_operator(e.n, e.gw, std::move(pattern), plabel),
                        eval(*e.kids[1]));
            break;
        }
    }
    out.label = print(e);
    return out;
}

inline KnotValue eval_string(const std::string& src) { return eval(*parse(src)); }

inline ordered_json ast_to_json(const Expr& e) {
    ordered_json j;
    switch (e.kind) {
        case ExprKind::generator: j["kind"] = "generator"; break;
        case ExprKind::sum: j["kind"] = "sum"; break;
        case ExprKind::neg: j["kind"] = "neg"; break;
        case ExprKind::mirror: j["kind"] = "mirror"; break;
        case ExprKind::rev: j["kind"] = "rev"; break;
        case ExprKind::times: j["kind"] = "times"; break;
        case ExprKind::cable: j["kind"] = "cable"; break;
        case ExprKind::sat: j["kind"] = "sat"; break;
    }
    j["span"] = {{"begin", e.span.begin}, {"end", e.span.end}, {"line", e.span.line},
                 {"col", e.span.col}};
    if (e.kind == ExprKind::generator) {
        j["name"] = e.gen_name;
        if (e.gen_name == "twist") j["param"] = e.gen_param;
    }
    if (e.kind == ExprKind::times || e.kind == ExprKind::cable) j["n"] = e.n;
    if (e.kind == ExprKind::sat) {
        j["w"] = e.n;
        j["gw"] = e.gw;
    }
    if (!e.kids.empty()) {
        ordered_json kids = ordered_json::array();
        for (const auto& k : e.kids) kids.push_back(ast_to_json(*k));
        j["kids"] = std::move(kids);
    }
    return j;
}

}  // namespace concordia::knotdsl

#include "bc/parser.hpp"

#include <cctype>
#include <vector>

namespace bc {

namespace {

struct Token {
    enum Kind { Number, Ident, Op, LParen, RParen, Comma, End } kind;
    std::string text;
    size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Number, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Token::Ident, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        switch (c) {
            case '+': case '-': case '*': case '/': case '^':
                out.push_back({Token::Op, std::string(1, c), i});
                break;
            case '(': out.push_back({Token::LParen, "(", i}); break;
            case ')': out.push_back({Token::RParen, ")", i}); break;
            case ',': out.push_back({Token::Comma, ",", i}); break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        ++i;
    }
    out.push_back({Token::End, "", s.size()});
    return out;
}

class Parser {
  public:
    Parser(std::vector<Token> toks, const ParseOptions& opts)
        : toks_(std::move(toks)), opts_(opts) {}

    Expr run() {
        Expr e = parse_sum();
        expect(Token::End, "end of input");
        return e;
    }

  private:
    std::vector<Token> toks_;
    const ParseOptions& opts_;
    size_t idx_ = 0;

    const Token& cur() const { return toks_[idx_]; }
    void advance() { ++idx_; }
    bool is_op(const char* o) const { return cur().kind == Token::Op && cur().text == o; }
    void expect(Token::Kind k, const char* what) {
        if (cur().kind != k)
            throw ParseError(std::string("expected ") + what, cur().pos);
        advance();
    }

    Expr parse_sum() {
        std::vector<Expr> terms;
        bool neg = false;
        if (is_op("-")) { neg = true; advance(); }
        else if (is_op("+")) advance();
        Expr t = parse_product();
        terms.push_back(neg ? make_neg(t) : t);
        while (is_op("+") || is_op("-")) {
            bool minus = cur().text == "-";
            advance();
            Expr u = parse_product();
            terms.push_back(minus ? make_neg(u) : u);
        }
        return make_add(std::move(terms));
    }

    Expr parse_product() {
        std::vector<Expr> factors;
        factors.push_back(parse_unary());
        while (is_op("*") || is_op("/")) {
            bool div = cur().text == "/";
            advance();
            Expr u = parse_unary();
            if (div && u->kind == ExprKind::Const && !u->value.is_zero() &&
                factors.back()->kind == ExprKind::Const) {
                // Rational literals like 1/2 stay a single constant so that
                // unparse round-trips.
                factors.back() = make_div(factors.back(), u);
            } else {
                factors.push_back(div ? make_pow(u, Rat(-1)) : u);
            }
        }
        return make_mul(std::move(factors));
    }

    Expr parse_unary() {
        if (is_op("-")) {
            advance();
            return make_neg(parse_unary());
        }
        if (is_op("+")) {
            advance();
            return parse_unary();
        }
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_atom();
        if (!is_op("^")) return base;
        advance();
        Rat e = parse_exponent();
        return make_pow(std::move(base), std::move(e));
    }

    // Exponents must be exact rationals: n, -n, (p/q) or atom^(p/q)...
    // with right associativity resolved by multiplying exponents is not
    // supported; nested ^ in exponents is rejected.
    Rat parse_exponent() {
        bool neg = false;
        bool parens = false;
        if (cur().kind == Token::LParen) { parens = true; advance(); }
        if (is_op("-")) { neg = true; advance(); }
        if (cur().kind != Token::Number)
            throw ParseError("expected rational exponent", cur().pos);
        Int numv(cur().text);
        advance();
        Int denv(1);
        if (parens && is_op("/")) {
            advance();
            if (cur().kind != Token::Number)
                throw ParseError("expected exponent denominator", cur().pos);
            denv = Int(cur().text);
            advance();
        }
        if (parens) expect(Token::RParen, "')'");
        Rat r(numv, denv);
        return neg ? Rat(-r) : r;
    }

    Expr parse_atom() {
        const Token& t = cur();
        switch (t.kind) {
            case Token::Number: {
                Int v(t.text);
                advance();
                return make_const(GaussRat(Rat(v)));
            }
            case Token::LParen: {
                advance();
                Expr e = parse_sum();
                expect(Token::RParen, "')'");
                return e;
            }
            case Token::Ident: {
                std::string name = t.text;
                advance();
                if (cur().kind == Token::LParen) return parse_call(name, t.pos);
                if (name == "i" || name == "I")
                    return make_const(GaussRat(Rat(0), Rat(1)));
                if (opts_.parameters.count(name)) return make_param(name);
                if (name == opts_.variable) return make_var(name);
                throw ParseError("unknown identifier '" + name +
                                     "' (not the variable or a declared parameter)",
                                 t.pos);
            }
            default:
                throw ParseError("unexpected token '" + t.text + "'", t.pos);
        }
    }

    Expr parse_call(const std::string& name, size_t pos) {
        expect(Token::LParen, "'('");
        std::vector<Expr> args;
        args.push_back(parse_sum());
        while (cur().kind == Token::Comma) {
            advance();
            args.push_back(parse_sum());
        }
        expect(Token::RParen, "')'");
        if (name == "sqrt") {
            if (args.size() != 1) throw ParseError("sqrt takes one argument", pos);
            return make_pow(args[0], Rat(1, 2));
        }
        auto fn = FunctionRegistry::instance().find(name);
        if (!fn) throw ParseError("unknown function '" + name + "'", pos);
        size_t expected = static_cast<size_t>(fn->param_slots) + 1;
        if (args.size() != expected)
            throw ParseError("function '" + name + "' expects " +
                                 std::to_string(expected) + " argument(s)",
                             pos);
        Expr main_arg = args.back();
        args.pop_back();
        return make_apply(*fn, std::move(main_arg), std::move(args));
    }
};

}  // namespace

Expr parse(const std::string& text, const ParseOptions& opts) {
    Parser p(tokenize(text), opts);
    return p.run();
}

}  // namespace bc

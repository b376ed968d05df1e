#include "jetvar/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace jetvar {

namespace {

constexpr int max_exponent = 64;

struct Token {
    enum class Kind { number, ident, plus, minus, star, caret, slash, lparen, rparen, end };
    Kind kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            out.push_back({Token::Kind::number, std::string(src.substr(start, i - start)), start});
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < src.size() &&
                   (std::isalpha(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                ++i;
            out.push_back({Token::Kind::ident, std::string(src.substr(start, i - start)), start});
        } else {
            Token::Kind kind;
            switch (c) {
                case '+': kind = Token::Kind::plus; break;
                case '-': kind = Token::Kind::minus; break;
                case '*': kind = Token::Kind::star; break;
                case '^': kind = Token::Kind::caret; break;
                case '/': kind = Token::Kind::slash; break;
                case '(': kind = Token::Kind::lparen; break;
                case ')': kind = Token::Kind::rparen; break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'", start);
            }
            out.push_back({kind, std::string(1, c), start});
            ++i;
        }
    }
    out.push_back({Token::Kind::end, "", src.size()});
    return out;
}

class Parser {
public:
    Parser(std::string_view src, const ParseContext& ctx) : tokens_(lex(src)), ctx_(ctx) {}

    JetExpr run() {
        JetExpr e = parse_expr();
        if (peek().kind != Token::Kind::end)
            throw ParseError("unexpected trailing input", peek().pos);
        return e;
    }

private:
    const Token& peek() const { return tokens_[cursor_]; }
    Token advance() { return tokens_[cursor_++]; }
    bool accept(Token::Kind kind) {
        if (peek().kind != kind) return false;
        ++cursor_;
        return true;
    }

    JetExpr parse_expr() {
        bool negate = accept(Token::Kind::minus);
        JetExpr e = parse_term();
        if (negate) e = -e;
        for (;;) {
            if (accept(Token::Kind::plus))
                e += parse_term();
            else if (accept(Token::Kind::minus))
                e -= parse_term();
            else
                return e;
        }
    }

    JetExpr parse_term() {
        JetExpr e = parse_factor();
        while (accept(Token::Kind::star)) e = e * parse_factor();
        return e;
    }

    JetExpr parse_factor() {
        JetExpr e = parse_atom();
        if (accept(Token::Kind::caret)) {
            const Token& t = peek();
            if (t.kind != Token::Kind::number) throw ParseError("expected natural exponent", t.pos);
            advance();
            if (t.text.size() > 2 || std::stoi(t.text) > max_exponent)
                throw ParseError("exponent too large", t.pos);
            e = pow(e, std::stoi(t.text));
        }
        return e;
    }

    JetExpr parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::number: {
                advance();
                Integer num(t.text);
                if (accept(Token::Kind::slash)) {
                    const Token& d = peek();
                    if (d.kind != Token::Kind::number)
                        throw ParseError("expected denominator", d.pos);
                    advance();
                    Integer den(d.text);
                    if (den == 0) throw ParseError("zero denominator", d.pos);
                    return JetExpr(Rational(num, den));
                }
                return JetExpr(Rational(num));
            }
            case Token::Kind::ident: {
                advance();
                return resolve(t);
            }
            case Token::Kind::lparen: {
                advance();
                JetExpr e = parse_expr();
                if (!accept(Token::Kind::rparen)) throw ParseError("expected ')'", peek().pos);
                return e;
            }
            default:
                throw ParseError("expected expression", t.pos);
        }
    }

    JetExpr resolve(const Token& t) {
        const BundleSignature& sig = ctx_.signature;
        const std::string& name = t.text;

        auto underscore = name.find('_');
        std::string head = name.substr(0, underscore);
        std::string letters =
            underscore == std::string::npos ? std::string() : name.substr(underscore + 1);
        if (head.empty() || letters.find('_') != std::string::npos || (underscore != std::string::npos && letters.empty()))
            throw ParseError("malformed identifier '" + name + "'", t.pos);

        bool odd = false;
        int field = sig.find_field(head);
        if (field < 0 && head.size() > 1 && head[0] == BundleSignature::odd_prefix) {
            field = sig.find_field(head.substr(1));
            odd = field >= 0;
        }

        if (field < 0) {
            if (underscore != std::string::npos)
                throw ParseError("unknown identifier '" + name + "'", t.pos);
            int coord = sig.find_coord(head);
            if (coord >= 0) return JetExpr::coordinate(coord);
            if (head == BundleSignature::time_name) {
                if (!sig.extended())
                    throw ParseError("'t' is only available on the extended signature", t.pos);
                return JetExpr::time();
            }
            throw ParseError("unknown identifier '" + name + "'", t.pos);
        }

        if (odd && !ctx_.allow_odd)
            throw ParseError("odd variable '" + name + "' used outside a forms subcommand", t.pos);

        MultiIndex spatial;
        int time_order = 0;
        for (char c : letters) {
            std::string letter(1, c);
            if (letter == BundleSignature::time_name) {
                if (!sig.extended())
                    throw ParseError("'t' derivative on a non-extended signature", t.pos);
                ++time_order;
                continue;
            }
            int coord = sig.find_coord(letter);
            if (coord < 0)
                throw ParseError("unknown derivative letter '" + letter + "' in '" + name + "'", t.pos);
            spatial = spatial.with_added(coord);
        }
        if (spatial.order() + time_order > ctx_.max_order)
            throw ParseError("jet order of '" + name + "' exceeds --max-order", t.pos);

        return odd ? JetExpr::odd(field, spatial, time_order)
                   : JetExpr::jet(field, spatial, time_order);
    }

    std::vector<Token> tokens_;
    std::size_t cursor_ = 0;
    const ParseContext& ctx_;
};

std::string variable_name(const EvenVariable& v, const BundleSignature& sig);

std::string jet_name(const JetVariable& v, const BundleSignature& sig) {
    std::string out = sig.field_name(v.field);
    if (v.total_order() > 0) {
        out += '_';
        out += print_multi_index(v.spatial, sig);
        out.append(v.time_order, 't');
    }
    return out;
}

std::string variable_name(const EvenVariable& v, const BundleSignature& sig) {
    switch (v.kind()) {
        case EvenVariable::Kind::coordinate: return sig.coord_name(v.coord_index());
        case EvenVariable::Kind::time: return BundleSignature::time_name;
        case EvenVariable::Kind::parameter: return "tau";
        case EvenVariable::Kind::jet: return jet_name(v.jet_var(), sig);
    }
    return {};
}

std::string render_monomial(const Monomial& m, const BundleSignature& sig) {
    std::string out;
    auto append = [&out](const std::string& piece) {
        if (!out.empty()) out += '*';
        out += piece;
    };
    for (const auto& [v, exp] : m.even()) {
        std::string piece = variable_name(v, sig);
        if (exp > 1) piece += '^' + std::to_string(exp);
        append(piece);
    }
    for (const auto& g : m.odd()) append('d' + jet_name(g.var, sig));
    return out;
}

}  // namespace

JetExpr parse(std::string_view src, const ParseContext& ctx) {
    return Parser(src, ctx).run();
}

std::string print_multi_index(const MultiIndex& b, const BundleSignature& sig) {
    std::string out;
    for (int a : b.entries()) out += sig.coord_name(a);
    return out;
}

std::string print(const JetExpr& e, const BundleSignature& sig) {
    if (e.is_zero()) return "0";
    std::string out;
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        bool negative = c < 0;
        Rational magnitude = negative ? Rational(-c) : c;
        std::string body = render_monomial(m, sig);
        std::string piece;
        if (body.empty())
            piece = to_string(magnitude);
        else if (magnitude == 1)
            piece = body;
        else
            piece = to_string(magnitude) + '*' + body;
        if (out.empty())
            out = (negative ? "-" : "") + piece;
        else
            out += (negative ? " - " : " + ") + piece;
    }
    return out;
}

}  // namespace jetvar

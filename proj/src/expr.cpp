#include "abelnc/expr.hpp"

#include <cctype>
#include <limits>

namespace cli {

namespace {

enum class TokKind { Name, Int, Plus, Minus, Star, Dot, Caret, LParen, RParen, End };

struct Token {
    TokKind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token tok = current_;
        advance();
        return tok;
    }

private:
    void advance() {
        while (off_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[off_])))
            ++off_;
        const std::size_t start = off_;
        if (off_ >= text_.size()) {
            current_ = Token{TokKind::End, "", start};
            return;
        }
        const char ch = text_[off_];
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            while (off_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[off_])) || text_[off_] == '_'))
                ++off_;
            current_ = Token{TokKind::Name, std::string(text_.substr(start, off_ - start)), start};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            while (off_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[off_])))
                ++off_;
            current_ = Token{TokKind::Int, std::string(text_.substr(start, off_ - start)), start};
            return;
        }
        ++off_;
        switch (ch) {
        case '+': current_ = Token{TokKind::Plus, "+", start}; return;
        case '-': current_ = Token{TokKind::Minus, "-", start}; return;
        case '*': current_ = Token{TokKind::Star, "*", start}; return;
        case '.': current_ = Token{TokKind::Dot, ".", start}; return;
        case '^': current_ = Token{TokKind::Caret, "^", start}; return;
        case '(': current_ = Token{TokKind::LParen, "(", start}; return;
        case ')': current_ = Token{TokKind::RParen, ")", start}; return;
        default: throw ParseError(std::string("unexpected character '") + ch + "'", start);
        }
    }

    std::string_view text_;
    std::size_t off_ = 0;
    Token current_{TokKind::End, "", 0};
};

class Parser {
public:
    Parser(std::string_view text, const freealg::RingSpec& ring) : lex_(text), ring_(ring) {}

    Expr parse() {
        Expr root = expression();
        const Token& tail = lex_.peek();
        if (tail.kind != TokKind::End)
            throw ParseError("unexpected token '" + tail.text + "'", tail.pos);
        return root;
    }

private:
    static Expr binary(Expr::Kind kind, Expr lhs, Expr rhs, std::size_t pos) {
        Expr node;
        node.kind = kind;
        node.pos = pos;
        node.children.push_back(std::move(lhs));
        node.children.push_back(std::move(rhs));
        return node;
    }

    Expr expression() {
        Expr lhs;
        if (lex_.peek().kind == TokKind::Minus) {
            const Token minus = lex_.take();
            Expr zero;
            zero.kind = Expr::Kind::Literal;
            zero.literal = 0;
            zero.pos = minus.pos;
            lhs = binary(Expr::Kind::Difference, std::move(zero), term(), minus.pos);
        } else {
            lhs = term();
        }
        while (lex_.peek().kind == TokKind::Plus || lex_.peek().kind == TokKind::Minus) {
            const Token op = lex_.take();
            const Expr::Kind kind =
                op.kind == TokKind::Plus ? Expr::Kind::Sum : Expr::Kind::Difference;
            lhs = binary(kind, std::move(lhs), term(), op.pos);
        }
        return lhs;
    }

    Expr term() {
        Expr lhs = factor();
        while (lex_.peek().kind == TokKind::Star || lex_.peek().kind == TokKind::Dot) {
            const Token op = lex_.take();
            lhs = binary(Expr::Kind::Product, std::move(lhs), factor(), op.pos);
        }
        return lhs;
    }

    Expr factor() {
        Expr base = atom();
        if (lex_.peek().kind != TokKind::Caret)
            return base;
        const Token caret = lex_.take();
        const Token& exp = lex_.peek();
        if (exp.kind == TokKind::Minus)
            throw ParseError("negative exponent", exp.pos);
        if (exp.kind != TokKind::Int)
            throw ParseError("expected integer exponent after '^'", exp.pos);
        const Token digits = lex_.take();
        unsigned long long value = 0;
        for (char ch : digits.text) {
            value = value * 10 + static_cast<unsigned>(ch - '0');
            if (value > std::numeric_limits<std::uint32_t>::max())
                throw ParseError("exponent too large", digits.pos);
        }
        Expr node;
        node.kind = Expr::Kind::Power;
        node.exponent = static_cast<std::uint32_t>(value);
        node.pos = caret.pos;
        node.children.push_back(std::move(base));
        return node;
    }

    Expr atom() {
        const Token tok = lex_.take();
        switch (tok.kind) {
        case TokKind::Name: {
            const auto ref = ring_.find(tok.text);
            if (!ref)
                throw ParseError("unknown variable '" + tok.text + "'", tok.pos);
            Expr node;
            node.kind = Expr::Kind::Variable;
            node.name = tok.text;
            node.var = *ref;
            node.pos = tok.pos;
            return node;
        }
        case TokKind::Int: {
            Expr node;
            node.kind = Expr::Kind::Literal;
            node.literal = freealg::Coeff(tok.text);
            node.pos = tok.pos;
            return node;
        }
        case TokKind::LParen: {
            Expr inner = expression();
            const Token close = lex_.take();
            if (close.kind != TokKind::RParen)
                throw ParseError("expected ')'", close.pos);
            return inner;
        }
        default:
            throw ParseError("expected variable, integer or '('", tok.pos);
        }
    }

    Lexer lex_;
    const freealg::RingSpec& ring_;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Expr parse_expr(std::string_view text, const freealg::RingSpec& ring) {
    return Parser(text, ring).parse();
}

freealg::Polynomial evaluate(const Expr& e, const freealg::RingPtr& ring) {
    using freealg::Polynomial;
    switch (e.kind) {
    case Expr::Kind::Literal:
        return Polynomial::constant(ring, e.literal);
    case Expr::Kind::Variable:
        return Polynomial::variable(ring, e.var);
    case Expr::Kind::Sum:
        return evaluate(e.children[0], ring) + evaluate(e.children[1], ring);
    case Expr::Kind::Difference:
        return evaluate(e.children[0], ring) - evaluate(e.children[1], ring);
    case Expr::Kind::Product:
        return evaluate(e.children[0], ring) * evaluate(e.children[1], ring);
    case Expr::Kind::Power:
        return freealg::pow(evaluate(e.children[0], ring), e.exponent);
    }
    throw std::logic_error("unreachable expression kind");
}

freealg::RingPtr parse_ring_decl(std::string_view decl) {
    std::vector<std::string> central;
    std::vector<std::string> free_vars;
    bool saw_central = false;
    bool saw_free = false;

    std::size_t section_start = 0;
    while (section_start <= decl.size()) {
        std::size_t section_end = decl.find(';', section_start);
        if (section_end == std::string_view::npos)
            section_end = decl.size();
        const std::string_view section =
            trim(decl.substr(section_start, section_end - section_start));
        if (!section.empty()) {
            const std::size_t colon = section.find(':');
            if (colon == std::string_view::npos)
                throw ParseError("ring declaration section missing ':'", section_start);
            const std::string_view key = trim(section.substr(0, colon));
            std::vector<std::string>* target = nullptr;
            if (key == "central") {
                if (saw_central)
                    throw ParseError("duplicate 'central' section", section_start);
                saw_central = true;
                target = &central;
            } else if (key == "free") {
                if (saw_free)
                    throw ParseError("duplicate 'free' section", section_start);
                saw_free = true;
                target = &free_vars;
            } else {
                throw ParseError("unknown ring section '" + std::string(key) + "'",
                                 section_start);
            }
            std::string_view rest = section.substr(colon + 1);
            std::size_t name_start = 0;
            while (name_start <= rest.size()) {
                std::size_t name_end = rest.find(',', name_start);
                if (name_end == std::string_view::npos)
                    name_end = rest.size();
                const std::string_view name = trim(rest.substr(name_start, name_end - name_start));
                if (name.empty())
                    throw ParseError("empty variable name in ring declaration", section_start);
                target->emplace_back(name);
                if (name_end == rest.size())
                    break;
                name_start = name_end + 1;
            }
        }
        if (section_end == decl.size())
            break;
        section_start = section_end + 1;
    }
    return freealg::make_ring(std::move(free_vars), std::move(central));
}

} // namespace cli

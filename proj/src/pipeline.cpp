#include "valgebra/pipeline.hpp"

#include <cctype>

#include "valgebra/conditional.hpp"

namespace valgebra {

namespace {

struct Token {
    enum Kind { name, domain, op, lparen, rparen, end } kind;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) return {Token::end, ""};
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            return {Token::lparen, "("};
        }
        if (c == ')') {
            ++pos_;
            return {Token::rparen, ")"};
        }
        if (c == '*' || c == '@' || c == '|' || c == '>') {
            ++pos_;
            return {Token::op, std::string(1, c)};
        }
        if (c == '{' || c == '[') return {Token::domain, read_bracketed(c == '{' ? '}' : ']')};
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return {Token::name, s_.substr(start, pos_ - start)};
        }
        fail(ErrorKind::parse_error, "unexpected character '" + std::string(1, c) + "'");
    }

private:
    std::string read_bracketed(char close) {
        const char open = s_[pos_];
        int depth = 0;
        std::size_t start = pos_;
        for (; pos_ < s_.size(); ++pos_) {
            if (s_[pos_] == open) ++depth;
            if (s_[pos_] == close && --depth == 0) {
                ++pos_;
                return s_.substr(start, pos_ - start);
            }
        }
        fail(ErrorKind::parse_error, "unclosed domain literal");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

class Evaluator {
public:
    Evaluator(const ModelFile& model, const std::string& text)
        : model_(model), lexer_(text), current_(lexer_.next()) {}

    DensityElement run() {
        DensityElement result = parse_expression();
        if (current_.kind != Token::end)
            fail(ErrorKind::parse_error, "trailing input '" + current_.text + "'");
        return result;
    }

private:
    void advance() { current_ = lexer_.next(); }

    DensityElement parse_expression() {
        DensityElement value = parse_operand();
        while (current_.kind == Token::op) {
            const char op = current_.text[0];
            advance();
            if (op == '@' || op == '|') {
                if (current_.kind != Token::domain)
                    fail(ErrorKind::parse_error,
                         std::string("operator '") + op + "' needs a domain literal");
                Domain d = parse_domain_text(current_.text, model_.ctx);
                advance();
                value = op == '@' ? project_element(value, d) : condition(value, d);
            } else {
                DensityElement rhs = parse_operand();
                value = op == '*' ? combine_elements(value, rhs) : compose(value, rhs);
            }
        }
        return value;
    }

    DensityElement parse_operand() {
        if (current_.kind == Token::lparen) {
            advance();
            DensityElement inner = parse_expression();
            if (current_.kind != Token::rparen) fail(ErrorKind::parse_error, "expected ')'");
            advance();
            return inner;
        }
        if (current_.kind != Token::name)
            fail(ErrorKind::parse_error, "expected a name, got '" + current_.text + "'");
        const std::string name = current_.text;
        advance();
        if (name == "unit") {
            if (current_.kind != Token::lparen) fail(ErrorKind::parse_error, "unit needs (...)");
            advance();
            if (current_.kind != Token::domain)
                fail(ErrorKind::parse_error, "unit needs a domain literal");
            Domain d = parse_domain_text(current_.text, model_.ctx);
            advance();
            if (current_.kind != Token::rparen) fail(ErrorKind::parse_error, "expected ')'");
            advance();
            return DensityElement::member(unit_valuation(model_.instance(), d));
        }
        if (const Valuation* v = model_.find_valuation(name))
            return DensityElement::member(*v);
        if (const Quotient* q = model_.find_quotient(name)) return DensityElement::formal(*q);
        fail(ErrorKind::parse_error, "unknown name '" + name + "'");
    }

    static DensityElement combine_elements(const DensityElement& a, const DensityElement& b) {
        if (a.is_member() && b.is_member())
            return DensityElement::member(combine(a.value(), b.value()));
        Quotient q = multiply(a.as_quotient(), b.as_quotient());
        if (auto v = try_reduce(q)) return DensityElement::member(std::move(*v));
        return DensityElement::formal(std::move(q));
    }

    static DensityElement condition(const DensityElement& e, const Domain& given) {
        if (!e.is_member())
            fail(ErrorKind::unsupported, "conditioning needs a member valuation");
        Quotient body = conditional(e.value(), e.value().label(), given).body;
        if (auto v = try_reduce(body)) return DensityElement::member(std::move(*v));
        return DensityElement::formal(std::move(body));
    }

    const ModelFile& model_;
    Lexer lexer_;
    Token current_;
};

} // namespace

DensityElement eval_pipeline(const ModelFile& model, const std::string& expression) {
    return Evaluator(model, expression).run();
}

std::string render_element(const DensityElement& e, bool compact) {
    if (e.is_member()) return render_valuation(e.value(), compact);
    return render_quotient(e.quotient(), compact);
}

} // namespace valgebra

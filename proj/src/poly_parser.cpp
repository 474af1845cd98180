#include "homcalc/poly_parser.hpp"

#include <cctype>

namespace homcalc {

namespace {

std::string describe(const std::vector<std::string>& expected, const std::string& found)
{
    std::string msg = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) msg += i + 1 == expected.size() ? " or " : ", ";
        msg += expected[i];
    }
    return msg + ", found " + found;
}

class Parser {
public:
    Parser(std::string_view text, const Variables& vars) : text_(text), vars_(vars) {}

    Poly parse()
    {
        Poly p = expr();
        skip_space();
        if (pos_ != text_.size()) fail({"'+'", "'-'", "'*'", "end of input"});
        return p;
    }

private:
    std::string_view text_;
    const Variables& vars_;
    std::size_t pos_ = 0;

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    [[noreturn]] void fail(std::vector<std::string> expected)
    {
        skip_space();
        std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
        throw ParseError(pos_, std::move(expected), std::move(found));
    }

    Poly expr()
    {
        Poly acc = term();
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-') return acc;
            ++pos_;
            Poly rhs = term();
            if (c == '+')
                acc += rhs;
            else
                acc -= rhs;
        }
    }

    Poly term()
    {
        Poly acc = factor();
        while (peek() == '*') {
            ++pos_;
            acc *= factor();
        }
        return acc;
    }

    Poly factor()
    {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == '+') {
            ++pos_;
            return factor();
        }
        Poly base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail({"nonnegative integer exponent"});
            std::string digits = read_digits();
            if (digits.size() > 4) throw ParseError(pos_ - digits.size(), {"exponent below 10000"}, digits);
            base = base.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    std::string read_digits()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Poly atom()
    {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num(read_digits(), 10);
            mpz_class den = 1;
            if (peek() == '/') {
                ++pos_;
                skip_space();
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    fail({"integer denominator"});
                std::size_t at = pos_;
                den = mpz_class(read_digits(), 10);
                if (den == 0) throw ParseError(at, {"nonzero denominator"}, "'0'");
            }
            Rational q(num, den);
            q.canonicalize();
            return Poly::constant(vars_, q);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string_view name = text_.substr(start, pos_ - start);
            auto index = vars_->index_of(name);
            if (!index) throw ParseError(start, {"declared variable"}, "'" + std::string(name) + "'");
            return Poly::variable(vars_, *index);
        }
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (peek() != ')') fail({"')'", "'+'", "'-'", "'*'"});
            ++pos_;
            return inner;
        }
        fail({"number", "variable", "'('", "'-'"});
    }
};

} // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, std::string found)
    : Error(describe(expected, found) + " at offset " + std::to_string(offset)),
      offset_(offset),
      expected_(std::move(expected)),
      found_(std::move(found))
{
}

Poly parse_poly(std::string_view text, const Variables& vars)
{
    return Parser(text, vars).parse();
}

} // namespace homcalc

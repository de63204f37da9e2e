#include "lnd/parse.hpp"

#include <cctype>

namespace lnd {

namespace {

class Parser {
  public:
    Parser(const std::string& text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    Polynomial expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (take() == '-');
        Polynomial acc = product();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            take();
            Polynomial rhs = product();
            acc = (c == '+') ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    Polynomial product() {
        Polynomial acc = power();
        while (true) {
            skip_ws();
            if (peek() != '*') break;
            take();
            acc = acc * power();
        }
        return acc;
    }

    Polynomial power() {
        Polynomial base = atom();
        while (true) {
            skip_ws();
            if (peek() != '^') break;
            take();
            skip_ws();
            if (peek() == '-') fail("negative exponent");
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent expected");
            base = pow(base, read_uint());
        }
        return base;
    }

    Polynomial atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            take();
            Polynomial p = expr();
            skip_ws();
            if (peek() != ')') fail("')' expected");
            take();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable_ref();
        fail(c == '\0' ? "unexpected end of input" : "unexpected character");
    }

    Polynomial rational_literal() {
        std::string num = read_digits();
        skip_ws();
        if (peek() == '/') {
            take();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("denominator expected");
            std::string den = read_digits();
            return Polynomial::constant(ring_, Rational::from_string(num + "/" + den));
        }
        return Polynomial::constant(ring_, Rational::from_string(num));
    }

    Polynomial variable_ref() {
        std::size_t start = pos_;
        std::string name;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                name.push_back(c);
                ++pos_;
            } else {
                break;
            }
        }
        auto idx = ring_->index_of(name);
        if (!idx) throw ParseError("undeclared variable '" + name + "'", start);
        return Polynomial::variable(ring_, *idx);
    }

    std::uint64_t read_uint() {
        std::string digits = read_digits();
        if (digits.size() > 9) fail("exponent too large");
        return std::stoull(digits);
    }

    std::string read_digits() {
        std::string s;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            s.push_back(text_[pos_++]);
        return s;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    const std::string& text_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse(const std::string& text, const RingPtr& ring) {
    return Parser(text, ring).run();
}

}  // namespace lnd

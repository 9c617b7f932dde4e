// Text form of polynomials in X.
//
//   sum     := ['+' | '-'] product (('+' | '-') product)*
//   product := power (['*'] power)*
//   power   := primary ['^' digits]
//   primary := digits ['/' digits] | 'X' | '(' sum ')'
//
// Whitespace is ignored everywhere. Canonical output lists descending powers
// with explicit binary signs, e.g. "X^2 - X - 1", "3/4*X + 2".

#include <cctype>
#include <sstream>
#include <string>

#include "pcf/errors.hpp"
#include "pcf/poly.hpp"

namespace pcf {

namespace {

constexpr unsigned kMaxExponent = 4096;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Poly run() {
        skip_ws();
        if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
        Poly p = sum();
        skip_ws();
        if (pos_ != text_.size()) fail_unexpected();
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    [[noreturn]] void fail_unexpected() {
        const char c = pos_ < text_.size() ? text_[pos_] : '\0';
        if (c == '\0') throw ParseError("unexpected end of input", pos_);
        if (std::isalpha(static_cast<unsigned char>(c)))
            throw ParseError(std::string("unknown variable '") + c + "', only X is allowed", pos_);
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    static bool starts_primary(char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || std::isalpha(static_cast<unsigned char>(c));
    }

    Poly sum() {
        Poly acc;
        char c = peek();
        bool negate = false;
        if (c == '+' || c == '-') {
            negate = c == '-';
            ++pos_;
        }
        Poly term = product();
        acc = negate ? -term : term;
        for (;;) {
            c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            Poly next = product();
            if (c == '+')
                acc += next;
            else
                acc -= next;
        }
        return acc;
    }

    Poly product() {
        Poly acc = power();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= power();
            } else if (starts_primary(c)) {
                acc *= power();
            } else {
                break;
            }
        }
        return acc;
    }

    Poly power() {
        Poly base = primary();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            const std::size_t start = pos_;
            const std::string digits = read_digits();
            if (digits.empty()) throw ParseError("expected exponent after '^'", start);
            if (digits.size() > 6 || std::stoul(digits) > kMaxExponent)
                throw ParseError("exponent too large", start);
            base = pow(base, static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    Poly primary() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Poly inner = sum();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (c == 'X') {
            ++pos_;
            return Poly::x();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::string num = read_digits();
            std::string den = "1";
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                const std::size_t start = pos_;
                den = read_digits();
                if (den.empty()) throw ParseError("expected denominator after '/'", start);
                if (mpz_class(den, 10) == 0) throw ParseError("zero denominator", start);
            }
            return Poly(Rational(mpz_class(num, 10), mpz_class(den, 10)));
        }
        fail_unexpected();
    }

    std::string read_digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text) { return Parser(text).run(); }

std::string Poly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (!mag.is_one()) os << mag << '*';
        os << 'X';
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

}  // namespace pcf

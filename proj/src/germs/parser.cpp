#include "germ/parser.hpp"

#include <cctype>

#include "germ/germs.hpp"

namespace germ {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    std::string digits() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected an integer");
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string identifier() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    std::size_t position() {
        skip_space();
        return pos_;
    }

    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, position()); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// integer ['/' positive-integer]
Rational read_rational(Cursor& cur) {
    mpz_class num(cur.digits(), 10);
    if (cur.accept('/')) {
        std::size_t at = cur.position();
        mpz_class den(cur.digits(), 10);
        if (den == 0) {
            throw ParseError("zero denominator", at);
        }
        return Rational(num, den);
    }
    return Rational(num);
}

template <std::size_t N>
Polynomial<N> read_polynomial(Cursor& cur, const std::array<std::string, N>& vars) {
    using Exponent = typename Polynomial<N>::Exponent;
    Polynomial<N> out;
    bool first = true;
    while (true) {
        Rational sign(1);
        if (cur.accept('-')) {
            sign = Rational(-1);
        } else if (!cur.accept('+') && !first) {
            break;
        }
        first = false;

        Rational coeff = sign;
        Exponent e{};
        do {
            char c = cur.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= read_rational(cur);
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                std::size_t at = cur.position();
                std::string name = cur.identifier();
                std::size_t idx = N;
                for (std::size_t i = 0; i < N; ++i) {
                    if (vars[i] == name) {
                        idx = i;
                    }
                }
                if (idx == N) {
                    throw ParseError("unknown variable '" + name + "'", at);
                }
                int power = 1;
                if (cur.accept('^')) {
                    std::size_t pat = cur.position();
                    std::string d = cur.digits();
                    if (d.size() > 6 || std::stoi(d) == 0) {
                        throw ParseError("exponent must be a positive integer below 10^6", pat);
                    }
                    power = std::stoi(d);
                }
                e[idx] += power;
            } else {
                cur.fail("expected a number or a variable");
            }
        } while (cur.accept('*'));
        out.add_term(e, coeff);
    }
    return out;
}

} // namespace

template <std::size_t N>
Polynomial<N> parse_polynomial(std::string_view text, const std::array<std::string, N>& vars) {
    Cursor cur(text);
    Polynomial<N> p = read_polynomial<N>(cur, vars);
    if (!cur.at_end()) {
        cur.fail("unexpected trailing input");
    }
    return p;
}

template Polynomial<2> parse_polynomial<2>(std::string_view, const std::array<std::string, 2>&);
template Polynomial<3> parse_polynomial<3>(std::string_view, const std::array<std::string, 3>&);

Poly2 parse_poly(std::string_view text, const std::array<std::string, 2>& vars) {
    return parse_polynomial<2>(text, vars);
}

DivisorGerm parse_divisor(std::string_view text, const std::array<std::string, 2>& vars) {
    Cursor cur(text);
    std::vector<Component> components;
    do {
        std::size_t at = cur.position();
        bool negative = cur.accept('-');
        Rational coeff = read_rational(cur);
        if (negative) {
            coeff = -coeff;
        }
        if (coeff.sign() <= 0) {
            throw ParseError("non-positive coefficient " + coeff.str(), at);
        }
        cur.expect('*');
        cur.expect('(');
        std::size_t poly_at = cur.position();
        Poly2 poly = read_polynomial<2>(cur, vars);
        cur.expect(')');
        if (poly.is_zero()) {
            throw ParseError("component polynomial is zero", poly_at);
        }
        if (!poly.constant_term().is_zero()) {
            throw ParseError("component does not pass through the origin", poly_at);
        }
        components.push_back(Component{coeff, std::move(poly)});
    } while (cur.accept('+'));
    if (!cur.at_end()) {
        cur.fail("unexpected trailing input");
    }
    return DivisorGerm(std::move(components));
}

} // namespace germ

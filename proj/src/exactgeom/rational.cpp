#include "germ/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "germ/errors.hpp"

namespace germ {

namespace {

bool is_decimal_integer(std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        i = 1;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!is_decimal_integer(s)) {
        throw InputError("not a decimal integer: '" + std::string(s) + "'");
    }
    if (s[0] == '+') {
        s.remove_prefix(1);
    }
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

Rational::Rational(const mpz_class& value) : value_(value) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) {
        throw DomainError("rational with zero denominator");
    }
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    mpz_class num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (den_text.empty() || den_text[0] == '-' || den_text[0] == '+') {
        throw InputError("denominator must be a positive integer: '" + std::string(text) + "'");
    }
    mpz_class den = parse_integer(den_text);
    if (den == 0) {
        throw InputError("zero denominator: '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

mpz_class Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
    if (is_zero()) {
        throw DomainError("reciprocal of zero");
    }
    return Rational(mpq_class(value_.get_den(), value_.get_num()));
}

std::int64_t Rational::to_int64() const {
    if (!is_integer()) {
        throw DomainError("value " + str() + " is not an integer");
    }
    const mpz_class& n = value_.get_num();
    if (!n.fits_slong_p()) {
        throw DomainError("integer " + str() + " does not fit in 64 bits");
    }
    return n.get_si();
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw DomainError("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) {
        return std::strong_ordering::less;
    }
    if (c > 0) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

const Rational& ExtRational::value() const {
    if (kind_ != Kind::finite) {
        throw DomainError("infinite value has no finite payload");
    }
    return value_;
}

std::string ExtRational::str() const {
    switch (kind_) {
    case Kind::neg_inf:
        return "-inf";
    case Kind::pos_inf:
        return "+inf";
    case Kind::finite:
        break;
    }
    return value_.str();
}

bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.kind_ != b.kind_) {
        return false;
    }
    return a.kind_ != ExtRational::Kind::finite || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (a.kind_ != b.kind_) {
        return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    }
    if (a.kind_ != ExtRational::Kind::finite) {
        return std::strong_ordering::equal;
    }
    return a.value_ <=> b.value_;
}

std::ostream& operator<<(std::ostream& os, const ExtRational& r) { return os << r.str(); }

} // namespace germ

std::size_t std::hash<germ::Rational>::operator()(const germ::Rational& r) const noexcept {
    std::size_t h1 = std::hash<std::string>{}(r.numerator_string());
    std::size_t h2 = std::hash<std::string>{}(r.denominator_string());
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

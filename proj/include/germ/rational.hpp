#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace germ {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper around mpq_class; it exists so that the rest of the code
/// never sees gmpxx expression templates and so that every constructor path
/// canonicalizes.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value); // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpz_class& value);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class value);

    /// Accepts "p" or "p/q" with q > 0 (optional leading sign, no spaces).
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    std::string numerator_string() const { return value_.get_num().get_str(); }
    std::string denominator_string() const { return value_.get_den().get_str(); }

    /// "p/q", or "p" when the denominator is one.
    std::string str() const { return value_.get_str(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    mpz_class floor() const;
    mpz_class ceil() const;
    /// x - floor(x), in [0, 1).
    Rational frac() const;
    Rational abs() const;
    Rational reciprocal() const;

    /// Converts an integral value to int64; throws DomainError if not integral or too large.
    std::int64_t to_int64() const;
    /// Lossy; only used for diagnostics and plotting output, never for decisions.
    double to_double() const { return value_.get_d(); }

    const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Rational extended by the two symbolic infinities.
///
/// Used for mld (may be -inf), lct membership suprema (may be +inf) and face
/// slopes (vertical ray has slope +inf). No arithmetic is defined on the
/// symbolic values; only comparison and access to the finite payload.
class ExtRational {
public:
    enum class Kind { neg_inf, finite, pos_inf };

    ExtRational() = default;
    ExtRational(Rational value) : kind_(Kind::finite), value_(std::move(value)) {} // NOLINT
    ExtRational(std::int64_t value) : ExtRational(Rational(value)) {}              // NOLINT

    static ExtRational neg_inf() { return ExtRational(Kind::neg_inf); }
    static ExtRational pos_inf() { return ExtRational(Kind::pos_inf); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }
    bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
    bool is_neg_inf() const { return kind_ == Kind::neg_inf; }

    /// Throws DomainError on an infinite value.
    const Rational& value() const;

    std::string str() const;

    friend bool operator==(const ExtRational& a, const ExtRational& b);
    friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

private:
    explicit ExtRational(Kind k) : kind_(k) {}

    Kind kind_ = Kind::finite;
    Rational value_;
};

std::ostream& operator<<(std::ostream& os, const ExtRational& r);

} // namespace germ

template <>
struct std::hash<germ::Rational> {
    std::size_t operator()(const germ::Rational& r) const noexcept;
};

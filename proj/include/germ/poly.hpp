#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "germ/errors.hpp"
#include "germ/rational.hpp"

namespace germ {

/// Sparse polynomial in N variables with exact rational coefficients.
/// Zero coefficients are never stored.
template <std::size_t N>
class Polynomial {
public:
    using Exponent = std::array<int, N>;
    using TermMap = std::map<Exponent, Rational>;

    Polynomial() = default;

    static Polynomial monomial(const Exponent& e, const Rational& c = Rational(1)) {
        Polynomial p;
        p.add_term(e, c);
        return p;
    }
    static Polynomial constant(const Rational& c) { return monomial(Exponent{}, c); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational constant_term() const { return coefficient(Exponent{}); }

    void add_term(const Exponent& e, const Rational& c) {
        for (int k : e) {
            if (k < 0) {
                throw DomainError("negative exponent");
            }
        }
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    int total_degree() const {
        int best = -1;
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (int k : e) {
                d += k;
            }
            best = std::max(best, d);
        }
        return best;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [e, c] : o.terms_) {
            add_term(e, c);
        }
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [e, c] : o.terms_) {
            add_term(e, -c);
        }
        return *this;
    }
    Polynomial& operator*=(const Rational& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) {
            v *= c;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e;
                for (std::size_t i = 0; i < N; ++i) {
                    e[i] = ea[i] + eb[i];
                }
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    Polynomial pow(int k) const {
        Polynomial out = constant(Rational(1));
        Polynomial base = *this;
        while (k > 0) {
            if (k & 1) {
                out = out * base;
            }
            k >>= 1;
            if (k > 0) {
                base = base * base;
            }
        }
        return out;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    TermMap terms_;
};

using Poly2 = Polynomial<2>;
using Poly3 = Polynomial<3>;

/// Exchanges the two variables.
Poly2 swap_variables(const Poly2& p);

/// Exact quotient p / d when d divides p, nothing otherwise. Lex division,
/// which is exact for a single divisor since {d} is a Groebner basis of (d).
bool divides_exactly(const Poly2& p, const Poly2& d, Poly2* quotient);

/// Univariate polynomial, coefficients from degree 0 upward, no trailing zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);

    const std::vector<Rational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& leading() const { return c_.back(); }
    Rational operator()(const Rational& x) const;

    UPoly derivative() const;
    UPoly monic() const;

    friend bool operator==(const UPoly&, const UPoly&) = default;

private:
    std::vector<Rational> c_;
};

/// Division with remainder; throws DomainError on a zero divisor.
void divmod(const UPoly& a, const UPoly& b, UPoly* q, UPoly* r);
/// Monic gcd (zero only if both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
bool is_squarefree(const UPoly& p);

/// Canonical text form: terms by descending total degree, then descending
/// first exponent; coefficients as p/q; explicit '*' everywhere.
template <std::size_t N>
std::string render(const Polynomial<N>& p, const std::array<std::string, N>& vars);

std::string render(const Poly2& p);

} // namespace germ

#include "series.hpp"

namespace germ::detail {

TruncatedSeries TruncatedSeries::variable(std::size_t order) {
    TruncatedSeries s(order);
    if (order > 1) {
        s.c_[1] = Rational(1);
    }
    return s;
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    TruncatedSeries s(order);
    if (order > 0) {
        s.c_[0] = Rational(1);
    }
    return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c_[i] += o.c_[i];
    }
    return *this;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    TruncatedSeries out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j < c_.size(); ++j) {
            if (!o.c_[j].is_zero()) {
                out.c_[i + j] += c_[i] * o.c_[j];
            }
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
    TruncatedSeries out = *this;
    for (auto& v : out.c_) {
        v *= c;
    }
    return out;
}

std::optional<std::size_t> TruncatedSeries::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i].is_zero()) {
            return i;
        }
    }
    return std::nullopt;
}

namespace {

std::vector<TruncatedSeries> powers(const TruncatedSeries& s, int max_power) {
    std::vector<TruncatedSeries> out;
    out.push_back(TruncatedSeries::one(s.order()));
    for (int k = 1; k <= max_power; ++k) {
        out.push_back(out.back() * s);
    }
    return out;
}

} // namespace

TruncatedSeries compose(const Poly2& f, const TruncatedSeries& x, const TruncatedSeries& y) {
    int max_x = 0;
    int max_y = 0;
    for (const auto& [e, c] : f.terms()) {
        max_x = std::max(max_x, e[0]);
        max_y = std::max(max_y, e[1]);
    }
    auto xp = powers(x, max_x);
    auto yp = powers(y, max_y);
    TruncatedSeries out(x.order());
    for (const auto& [e, c] : f.terms()) {
        out += (xp[e[0]] * yp[e[1]]).scaled(c);
    }
    return out;
}

TruncatedSeries solve_for_x(const Poly2& g, std::size_t order) {
    Rational lin = g.coefficient({1, 0});
    if (lin.is_zero()) {
        throw DomainError("curve has no linear x-term");
    }
    Poly2 rest = g - Poly2::monomial({1, 0}, lin);
    Rational inv = -lin.reciprocal();
    TruncatedSeries t = TruncatedSeries::variable(order);
    TruncatedSeries xi(order);
    for (std::size_t pass = 0; pass < order; ++pass) {
        xi = compose(rest, xi, t).scaled(inv);
    }
    return xi;
}

} // namespace germ::detail

#pragma once

#include <optional>
#include <vector>

#include "germ/poly.hpp"

namespace germ::detail {

/// Power series in t truncated at t^order (coefficients of t^0 .. t^(order-1)).
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order) : c_(order) {}

    static TruncatedSeries variable(std::size_t order);
    static TruncatedSeries one(std::size_t order);

    std::size_t order() const { return c_.size(); }
    Rational& operator[](std::size_t i) { return c_[i]; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries scaled(const Rational& c) const;

    /// Lowest index with a nonzero coefficient; nullopt if zero to this order.
    std::optional<std::size_t> valuation() const;

private:
    std::vector<Rational> c_;
};

/// f(x(t), y(t)) truncated at the series order.
TruncatedSeries compose(const Poly2& f, const TruncatedSeries& x, const TruncatedSeries& y);

/// Parametrization t -> (xi(t), t) of the smooth branch g = 0 where g has a
/// nonzero x-coefficient; fixed-point iteration gains one order per pass.
TruncatedSeries solve_for_x(const Poly2& g, std::size_t order);

} // namespace germ::detail

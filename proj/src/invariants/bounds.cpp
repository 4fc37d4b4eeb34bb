#include "germ/invariants.hpp"

namespace germ {

Rational bound_term(const Rational& epsilon, std::int64_t n) {
    if (n < 2) {
        throw InputError("bound term needs n >= 2, got " + std::to_string(n));
    }
    return (epsilon - Rational(1, n)) / Rational(n - 1);
}

BoundResult delta_bound(const Rational& epsilon) {
    if (epsilon.sign() <= 0) {
        throw InputError("epsilon must be positive, got " + epsilon.str());
    }
    // h(n) <= epsilon/(n-1) falls below epsilon^2/4 once n > 1 + 4/epsilon.
    mpz_class limit = (Rational(1) + Rational(4) / epsilon).ceil();
    std::int64_t n_max = std::max<std::int64_t>(2, Rational(limit).to_int64());
    BoundResult out{epsilon, bound_term(epsilon, 2), 2};
    for (std::int64_t n = 3; n <= n_max; ++n) {
        Rational h = bound_term(epsilon, n);
        if (out.delta < h) {
            out.delta = h;
            out.witness_n = n;
        }
    }
    return out;
}

bool bound_floor_check(const Rational& epsilon) {
    Rational floor = min(epsilon * epsilon / Rational(4), Rational(3, 2));
    return !(delta_bound(epsilon).delta < floor);
}

DirichletTrace dirichlet_k(const Rational& q, const Rational& delta) {
    if (delta.sign() <= 0 || !(delta < Rational(1))) {
        throw InputError("delta must lie in (0, 1), got " + delta.str());
    }
    DirichletTrace tr;
    tr.q = q.frac();
    tr.delta = delta;
    tr.remainders = {Rational(1), tr.q};
    tr.numerators = {0, 1};
    // r_{i-2} = b_i r_{i-1} + r_i, a_i = a_{i-2} + b_i a_{i-1}; stop at the first r_m <= delta.
    while (delta < tr.remainders.back()) {
        const Rational& r2 = tr.remainders[tr.remainders.size() - 2];
        const Rational& r1 = tr.remainders.back();
        std::int64_t b = Rational((r2 / r1).floor()).to_int64();
        Rational r = r2 - Rational(b) * r1;
        std::int64_t a = tr.numerators[tr.numerators.size() - 2] + b * tr.numerators.back();
        tr.partial_quotients.push_back(b);
        tr.remainders.push_back(std::move(r));
        tr.numerators.push_back(a);
    }
    tr.m = tr.partial_quotients.size();
    tr.k = tr.numerators.back();
    return tr;
}

} // namespace germ

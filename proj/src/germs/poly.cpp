#include "germ/poly.hpp"

#include <algorithm>

namespace germ {

Poly2 swap_variables(const Poly2& p) {
    Poly2 out;
    for (const auto& [e, c] : p.terms()) {
        out.add_term({e[1], e[0]}, c);
    }
    return out;
}

bool divides_exactly(const Poly2& p, const Poly2& d, Poly2* quotient) {
    if (d.is_zero()) {
        throw DomainError("division by the zero polynomial");
    }
    const auto& [lead_e, lead_c] = *d.terms().rbegin();
    Poly2 rest = p;
    Poly2 q;
    while (!rest.is_zero()) {
        const auto& [e, c] = *rest.terms().rbegin();
        if (e[0] < lead_e[0] || e[1] < lead_e[1]) {
            return false;
        }
        Poly2 step = Poly2::monomial({e[0] - lead_e[0], e[1] - lead_e[1]}, c / lead_c);
        q += step;
        rest -= step * d;
    }
    if (quotient != nullptr) {
        *quotient = std::move(q);
    }
    return true;
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

Rational UPoly::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

UPoly UPoly::derivative() const {
    std::vector<Rational> out;
    for (std::size_t i = 1; i < c_.size(); ++i) {
        out.push_back(c_[i] * Rational(static_cast<std::int64_t>(i)));
    }
    return UPoly(std::move(out));
}

UPoly UPoly::monic() const {
    if (c_.empty()) {
        return *this;
    }
    std::vector<Rational> out = c_;
    Rational lc = c_.back();
    for (auto& v : out) {
        v /= lc;
    }
    return UPoly(std::move(out));
}

void divmod(const UPoly& a, const UPoly& b, UPoly* q, UPoly* r) {
    if (b.is_zero()) {
        throw DomainError("polynomial division by zero");
    }
    std::vector<Rational> rem = a.coeffs();
    int db = b.degree();
    std::vector<Rational> quo(rem.size() > b.coeffs().size() ? rem.size() - b.coeffs().size() + 1 : 1);
    for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
        if (rem[k].is_zero()) {
            continue;
        }
        Rational f = rem[k] / b.leading();
        quo[k - db] = f;
        for (int i = 0; i <= db; ++i) {
            rem[k - db + i] -= f * b.coeffs()[i];
        }
    }
    if (q != nullptr) {
        *q = UPoly(std::move(quo));
    }
    if (r != nullptr) {
        *r = UPoly(std::move(rem));
    }
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a;
    UPoly y = b;
    while (!y.is_zero()) {
        UPoly r;
        divmod(x, y, nullptr, &r);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

bool is_squarefree(const UPoly& p) {
    if (p.degree() <= 0) {
        return true;
    }
    return gcd(p, p.derivative()).degree() == 0;
}

template <std::size_t N>
std::string render(const Polynomial<N>& p, const std::array<std::string, N>& vars) {
    if (p.is_zero()) {
        return "0";
    }
    using Exponent = typename Polynomial<N>::Exponent;
    std::vector<std::pair<Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
    auto degree = [](const Exponent& e) {
        int d = 0;
        for (int k : e) {
            d += k;
        }
        return d;
    };
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        int da = degree(a.first);
        int db = degree(b.first);
        if (da != db) {
            return da > db;
        }
        return a.first > b.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (first) {
            out += c.sign() < 0 ? "-" : "";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        Rational mag = c.abs();
        std::string factors;
        for (std::size_t i = 0; i < N; ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (!factors.empty()) {
                factors += "*";
            }
            factors += vars[i];
            if (e[i] > 1) {
                factors += "^" + std::to_string(e[i]);
            }
        }
        if (factors.empty()) {
            out += mag.str();
        } else if (mag == Rational(1)) {
            out += factors;
        } else {
            out += mag.str() + "*" + factors;
        }
    }
    return out;
}

template std::string render<2>(const Polynomial<2>&, const std::array<std::string, 2>&);
template std::string render<3>(const Polynomial<3>&, const std::array<std::string, 3>&);

std::string render(const Poly2& p) { return render<2>(p, {"x", "y"}); }

} // namespace germ

#include "germ/cone.hpp"

#include <numeric>

#include "germ/errors.hpp"

namespace germ {

namespace {

using wide = __int128;

wide det(const IntVec2& a, const IntVec2& b) {
    return static_cast<wide>(a.x) * b.y - static_cast<wide>(a.y) * b.x;
}

std::int64_t narrow(wide v) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw DomainError("lattice coordinate overflows 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

// floor/ceil of n/d for d > 0
wide ceil_div(wide n, wide d) {
    wide q = n / d;
    if (n % d != 0 && n > 0) {
        ++q;
    }
    return q;
}

// Returns (s, t) with s*a + t*b == gcd(a, b).
std::pair<wide, wide> bezout(wide a, wide b) {
    wide old_r = a, r = b;
    wide old_s = 1, s = 0;
    wide old_t = 0, t = 1;
    while (r != 0) {
        wide q = old_r / r;
        wide tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    return {old_s, old_t};
}

void check_generator(const IntVec2& v) {
    if (v.x < 0 || v.y < 0) {
        throw InputError("cone generator " + to_string(v) + " leaves the first quadrant");
    }
    if (v.x == 0 && v.y == 0) {
        throw InputError("cone generator must be nonzero");
    }
    if (std::gcd(v.x, v.y) != 1) {
        throw InputError("cone generator " + to_string(v) + " is not primitive");
    }
}

} // namespace

IntVec2 primitive(std::int64_t x, std::int64_t y) {
    if (x < 0 || y < 0 || (x == 0 && y == 0)) {
        throw DomainError("direction " + std::to_string(x) + "," + std::to_string(y) + " is not a nonzero first-quadrant vector");
    }
    std::int64_t g = std::gcd(x, y);
    return {x / g, y / g};
}

IntVec2 primitive(const Rational& x, const Rational& y) {
    if (x.sign() < 0 || y.sign() < 0 || (x.is_zero() && y.is_zero())) {
        throw DomainError("direction (" + x.str() + "," + y.str() + ") is not a nonzero first-quadrant vector");
    }
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), x.raw().get_den_mpz_t(), y.raw().get_den_mpz_t());
    Rational sx = x * Rational(l);
    Rational sy = y * Rational(l);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), sx.raw().get_num_mpz_t(), sy.raw().get_num_mpz_t());
    return {(sx / Rational(g)).to_int64(), (sy / Rational(g)).to_int64()};
}

Cone2::Cone2(IntVec2 a, IntVec2 b) {
    check_generator(a);
    check_generator(b);
    wide d = det(a, b);
    if (d == 0 && a != b) {
        throw InputError("cone generators are parallel but distinct");
    }
    if (d >= 0) {
        lower_ = a;
        upper_ = b;
    } else {
        lower_ = b;
        upper_ = a;
    }
}

std::vector<IntVec2> hilbert_basis(const Cone2& cone) {
    std::vector<IntVec2> out{cone.lower()};
    if (cone.is_ray()) {
        return out;
    }
    const IntVec2& v = cone.upper();
    IntVec2 h = cone.lower();
    while (h != v) {
        wide d = det(h, v);
        // p with det(h, p) = h.x*p.y - h.y*p.x = 1
        auto [s, t] = bezout(h.x, h.y);
        wide px = -t;
        wide py = s;
        wide dpv = px * v.y - py * v.x;
        wide j = ceil_div(-dpv, d);
        IntVec2 next{narrow(px + j * h.x), narrow(py + j * h.y)};
        if (det(next, v) == 0) {
            next = v;
        }
        out.push_back(next);
        h = next;
    }
    return out;
}

} // namespace germ

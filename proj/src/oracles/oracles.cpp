#include "oracles/oracles.hpp"

#include <algorithm>
#include <numeric>

namespace germ::oracle {

namespace {

std::vector<Point2> raw_support(const Poly2& p) {
    std::vector<Point2> out;
    for (const auto& [e, c] : p.terms()) {
        out.emplace_back(Rational(e[0]), Rational(e[1]));
    }
    return out;
}

using Series = std::vector<Rational>;

Series mul(const Series& a, const Series& b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    Series out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

Series power(const Series& a, int k) {
    Series out{Rational(1)};
    for (int i = 0; i < k; ++i) {
        out = mul(out, a);
    }
    return out;
}

} // namespace

Rational support_value(const DivisorGerm& b, const Rational& w1, const Rational& w2) {
    Rational total;
    for (const auto& comp : b.components()) {
        std::optional<Rational> best;
        for (const auto& [e, c] : comp.poly.terms()) {
            Rational v = w1 * Rational(e[0]) + w2 * Rational(e[1]);
            if (!best || v < *best) {
                best = v;
            }
        }
        total += comp.coeff * *best;
    }
    return total;
}

BruteMin mld(const DivisorGerm& b, int bound) {
    std::optional<BruteMin> best;
    for (int w1 = 1; w1 <= bound; ++w1) {
        for (int w2 = 1; w2 <= bound; ++w2) {
            Rational v = Rational(w1 + w2) - support_value(b, Rational(w1), Rational(w2));
            if (!best || v < best->value) {
                best = BruteMin{v, {w1, w2}};
            }
        }
    }
    return *best;
}

ScaledMin binomial_mld24(int j, int m, int n, int bound) {
    ScaledMin best{INT64_MAX, 0, 0};
    for (std::int64_t p1 = 1; p1 <= bound; ++p1) {
        for (std::int64_t p2 = 1; p2 <= bound; ++p2) {
            std::int64_t v = 24 * (p1 + p2) - j * std::min(m * p1, n * p2);
            if (v < best.value24) {
                best = {v, p1, p2};
            }
        }
    }
    return best;
}

std::vector<IntVec2> hilbert_basis(const IntVec2& a, const IntVec2& b, int bound) {
    auto det = [](const IntVec2& u, const IntVec2& v) { return u.x * v.y - u.y * v.x; };
    IntVec2 lo = det(a, b) >= 0 ? a : b;
    IntVec2 hi = det(a, b) >= 0 ? b : a;
    auto inside = [&](const IntVec2& v) {
        if (det(lo, hi) == 0) {
            return det(lo, v) == 0 && lo.x * v.x + lo.y * v.y > 0;
        }
        return det(lo, v) >= 0 && det(v, hi) >= 0;
    };
    std::vector<IntVec2> pts;
    for (std::int64_t x = 0; x <= bound; ++x) {
        for (std::int64_t y = 0; y <= bound; ++y) {
            if ((x || y) && inside({x, y})) {
                pts.push_back({x, y});
            }
        }
    }
    std::vector<IntVec2> basis;
    for (const auto& v : pts) {
        bool reducible = false;
        for (const auto& u : pts) {
            IntVec2 r{v.x - u.x, v.y - u.y};
            if ((r.x || r.y) && r.x >= 0 && r.y >= 0 && inside(r)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) {
            basis.push_back(v);
        }
    }
    std::sort(basis.begin(), basis.end(), [&](const IntVec2& u, const IntVec2& v) { return det(u, v) > 0; });
    return basis;
}

bool contains(const std::vector<Point2>& support, const Point2& p) {
    // p dominates lambda*a + (1-lambda)*b for some lambda in [0, 1]: intersect the
    // lambda-intervals cut out by the two coordinate inequalities.
    for (const auto& a : support) {
        for (const auto& b : support) {
            Rational lo(0);
            Rational hi(1);
            bool ok = true;
            for (int k = 0; k < 2 && ok; ++k) {
                const Rational& ak = k == 0 ? a.x : a.y;
                const Rational& bk = k == 0 ? b.x : b.y;
                const Rational& pk = k == 0 ? p.x : p.y;
                // lambda (ak - bk) <= pk - bk
                Rational slope = ak - bk;
                Rational rhs = pk - bk;
                if (slope.is_zero()) {
                    ok = rhs.sign() >= 0;
                } else if (slope.sign() > 0) {
                    hi = min(hi, rhs / slope);
                } else {
                    lo = max(lo, rhs / slope);
                }
            }
            if (ok && !(hi < lo)) {
                return true;
            }
        }
    }
    return false;
}

std::vector<Point2> minkowski_support(const std::vector<std::pair<Rational, std::vector<Point2>>>& parts) {
    std::vector<Point2> acc{Point2(Rational(0), Rational(0))};
    for (const auto& [c, pts] : parts) {
        std::vector<Point2> next;
        for (const auto& a : acc) {
            for (const auto& p : pts) {
                next.emplace_back(a.x + c * p.x, a.y + c * p.y);
            }
        }
        std::sort(next.begin(), next.end(), [](const Point2& u, const Point2& v) {
            return u.x < v.x || (u.x == v.x && u.y < v.y);
        });
        next.erase(std::unique(next.begin(), next.end(),
                               [](const Point2& u, const Point2& v) { return u.x == v.x && u.y == v.y; }),
                   next.end());
        acc = std::move(next);
    }
    return acc;
}

std::vector<Point2> minimal_points(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point2& u, const Point2& v) {
        return u.x < v.x || (u.x == v.x && u.y < v.y);
    });
    std::vector<Point2> out;
    for (auto& p : pts) {
        if (out.empty() || p.y < out.back().y) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

std::pair<Rational, Rational> membership_bracket(const DivisorGerm& b, const Poly2& c, int steps) {
    std::vector<std::pair<Rational, std::vector<Point2>>> parts;
    for (const auto& comp : b.components()) {
        parts.emplace_back(comp.coeff, raw_support(comp.poly));
    }
    const Point2 one(Rational(1), Rational(1));
    auto member = [&](const Rational& t) {
        auto all = parts;
        if (t.sign() > 0) {
            all.emplace_back(t, raw_support(c));
        }
        return contains(minimal_points(minkowski_support(all)), one);
    };
    Rational lo(0);
    Rational hi(4);
    while (member(hi)) {
        hi *= Rational(2);
    }
    for (int i = 0; i < steps; ++i) {
        Rational mid = (lo + hi) / Rational(2);
        (member(mid) ? lo : hi) = mid;
    }
    return {lo, hi};
}

std::pair<Rational, std::int64_t> delta(const Rational& eps, std::int64_t n_max) {
    Rational best = (eps - Rational(1, 2)) / Rational(1);
    std::int64_t arg = 2;
    for (std::int64_t n = 3; n <= n_max; ++n) {
        Rational h = (eps - Rational(1, n)) / Rational(n - 1);
        if (best < h) {
            best = h;
            arg = n;
        }
    }
    return {best, arg};
}

std::optional<std::int64_t> dirichlet_k(const Rational& q, const Rational& delta, std::int64_t k_max) {
    for (std::int64_t k = 1; k <= k_max; ++k) {
        Rational f = (Rational(k) * q).frac();
        if (!(delta < min(f, Rational(1) - f))) {
            return k;
        }
    }
    return std::nullopt;
}

std::optional<std::string> trace_violation(const DirichletTrace& tr, const Rational& q, const Rational& delta) {
    const auto& r = tr.remainders;
    const auto& a = tr.numerators;
    if (r.size() != tr.m + 2 || a.size() != tr.m + 2 || tr.partial_quotients.size() != tr.m) {
        return "trace lengths inconsistent";
    }
    if (r[0] != Rational(1) || r[1] != q.frac() || a[0] != 0 || a[1] != 1) {
        return "trace start wrong";
    }
    for (std::size_t i = 2; i < r.size(); ++i) {
        std::int64_t b = tr.partial_quotients[i - 2];
        if (b < 1 || r[i - 2] != Rational(b) * r[i - 1] + r[i] || r[i].sign() < 0 || !(r[i] < r[i - 1]) ||
            a[i] != a[i - 2] + b * a[i - 1]) {
            return "recurrence broken at step " + std::to_string(i - 1);
        }
    }
    if (delta < r.back() || !(delta < r[r.size() - 2])) {
        return std::string("stopping rule violated");
    }
    std::int64_t k_max = Rational(delta.reciprocal().ceil()).to_int64() - 1;
    if (tr.k != a.back() || tr.k < 1 || tr.k > k_max) {
        return "k = " + std::to_string(tr.k) + " outside [1, " + std::to_string(k_max) + "]";
    }
    Rational f = (Rational(tr.k) * q).frac();
    if (delta < min(f, Rational(1) - f)) {
        return std::string("k q too far from an integer");
    }
    auto smallest = dirichlet_k(q, delta, k_max);
    if (!smallest || *smallest > tr.k) {
        return std::string("exhaustive search disagrees");
    }
    return std::nullopt;
}

std::optional<int> order_on_graph(const Poly2& f, const std::vector<Rational>& phi, bool graph_over_y) {
    Series t{Rational(0), Rational(1)};
    Series total;
    for (const auto& [e, c] : f.terms()) {
        Series term = graph_over_y ? mul(power(phi, e[0]), power(t, e[1])) : mul(power(t, e[0]), power(phi, e[1]));
        if (total.size() < term.size()) {
            total.resize(term.size());
        }
        for (std::size_t i = 0; i < term.size(); ++i) {
            total[i] += c * term[i];
        }
    }
    for (std::size_t i = 0; i < total.size(); ++i) {
        if (!total[i].is_zero()) {
            return static_cast<int>(i);
        }
    }
    return std::nullopt;
}

Rational binomial_lct(const Rational& lambda, int m, int n) {
    // (n+m)/(lambda n m + t m) >= 1 iff t <= 1 + n/m - lambda n; 1/t >= 1 iff t <= 1.
    Rational t = min(Rational(1) + Rational(n, m) - lambda * Rational(n), Rational(1));
    return max(t, Rational(0));
}

} // namespace germ::oracle

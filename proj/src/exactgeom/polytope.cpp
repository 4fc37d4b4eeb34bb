#include "germ/polytope.hpp"

#include <algorithm>
#include <numeric>

#include "germ/cone.hpp"
#include "germ/errors.hpp"

namespace germ {

namespace {

// z-component of (b - a) x (c - b); positive for a left turn.
Rational turn(const Point2& a, const Point2& b, const Point2& c) {
    return (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
}

// Steepness comparison of edge vectors (dx > 0, dy < 0): sign of s(e1) - s(e2)
// where s = -dy/dx.
int compare_steepness(const Point2& from1, const Point2& to1, const Point2& from2, const Point2& to2) {
    Rational lhs = (from1.y - to1.y) * (to2.x - from2.x);
    Rational rhs = (from2.y - to2.y) * (to1.x - from1.x);
    return lhs < rhs ? -1 : (rhs < lhs ? 1 : 0);
}

bool is_reduced_chain(const std::vector<Point2>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i - 1].x < v[i].x) || !(v[i].y < v[i - 1].y)) {
            return false;
        }
    }
    for (std::size_t i = 2; i < v.size(); ++i) {
        if (turn(v[i - 2], v[i - 1], v[i]).sign() <= 0) {
            return false;
        }
    }
    return true;
}

} // namespace

Point2::Point2(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {
    if (x.sign() < 0 || y.sign() < 0) {
        throw InputError("point (" + x.str() + ", " + y.str() + ") leaves the first quadrant");
    }
}

Point2 operator+(const Point2& a, const Point2& b) { return Point2(a.x + b.x, a.y + b.y); }

std::string to_string(const Point2& p) { return "(" + p.x.str() + "," + p.y.str() + ")"; }

std::string to_string(const IntVec2& v) { return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")"; }

Weight::Weight(std::int64_t w1, std::int64_t w2) : w1_(w1), w2_(w2) {
    if (w1 <= 0 || w2 <= 0) {
        throw InputError("weight entries must be positive");
    }
    if (std::gcd(w1, w2) != 1) {
        throw InputError("weight (" + std::to_string(w1) + "," + std::to_string(w2) + ") is not primitive");
    }
}

const Point2& ExtendedVertex::point() const {
    if (kind_ != Kind::finite) {
        throw DomainError("symbolic vertex has no coordinates");
    }
    return point_;
}

std::string ExtendedVertex::str() const {
    switch (kind_) {
    case Kind::x_infinite:
        return "(+inf,0)";
    case Kind::y_infinite:
        return "(0,+inf)";
    case Kind::finite:
        break;
    }
    return to_string(point_);
}

NewtonPolytope NewtonPolytope::from_support(std::span<const Point2> support) {
    if (support.empty()) {
        throw InputError("Newton polytope of an empty support");
    }
    std::vector<Point2> pts(support.begin(), support.end());
    std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });

    // Staircase of non-dominated points.
    std::vector<Point2> stair;
    for (const auto& p : pts) {
        if (stair.empty() || p.y < stair.back().y) {
            stair.push_back(p);
        }
    }

    std::vector<Point2> chain;
    for (const auto& p : stair) {
        while (chain.size() >= 2 && turn(chain[chain.size() - 2], chain.back(), p).sign() <= 0) {
            chain.pop_back();
        }
        chain.push_back(p);
    }
    return NewtonPolytope(std::move(chain));
}

NewtonPolytope NewtonPolytope::from_vertices(std::vector<Point2> vertices) {
    if (vertices.empty()) {
        throw InputError("Newton polytope needs at least one vertex");
    }
    if (!is_reduced_chain(vertices)) {
        throw InputError("vertex list is not a reduced convex chain");
    }
    return NewtonPolytope(std::move(vertices));
}

std::string to_string(const NewtonPolytope& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += to_string(p.vertices()[i]);
    }
    return out + "]";
}

NewtonPolytope scale(const NewtonPolytope& p, const Rational& c) {
    if (c.sign() <= 0) {
        throw InputError("scale factor must be positive, got " + c.str());
    }
    std::vector<Point2> out;
    out.reserve(p.size());
    for (const auto& v : p.vertices()) {
        out.emplace_back(v.x * c, v.y * c);
    }
    return NewtonPolytope::from_vertices(std::move(out));
}

NewtonPolytope minkowski_sum(const NewtonPolytope& p, const NewtonPolytope& q) {
    // Glue the faces of both chains in order of decreasing steepness.
    const auto& a = p.vertices();
    const auto& b = q.vertices();
    std::vector<Point2> out;
    out.reserve(a.size() + b.size());
    out.push_back(a.front() + b.front());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i + 1 < a.size() || j + 1 < b.size()) {
        bool take_a = false;
        bool take_b = false;
        if (i + 1 >= a.size()) {
            take_b = true;
        } else if (j + 1 >= b.size()) {
            take_a = true;
        } else {
            int c = compare_steepness(a[i], a[i + 1], b[j], b[j + 1]);
            take_a = c >= 0;
            take_b = c <= 0;
        }
        Rational dx;
        Rational dy;
        if (take_a) {
            dx += a[i + 1].x - a[i].x;
            dy += a[i + 1].y - a[i].y;
            ++i;
        }
        if (take_b) {
            dx += b[j + 1].x - b[j].x;
            dy += b[j + 1].y - b[j].y;
            ++j;
        }
        const Point2& last = out.back();
        out.push_back(Point2(last.x + dx, last.y + dy));
    }
    return NewtonPolytope::from_vertices(std::move(out));
}

Rational support_value(const NewtonPolytope& p, const Rational& w1, const Rational& w2) {
    if (w1.sign() < 0 || w2.sign() < 0) {
        throw InputError("support direction must lie in the closed first quadrant");
    }
    if (w1.is_zero() && w2.is_zero()) {
        throw InputError("support direction must be nonzero");
    }
    const auto& v = p.vertices();
    Rational best = w1 * v.front().x + w2 * v.front().y;
    for (std::size_t i = 1; i < v.size(); ++i) {
        Rational value = w1 * v[i].x + w2 * v[i].y;
        if (value < best) {
            best = std::move(value);
        }
    }
    return best;
}

Rational support_value(const NewtonPolytope& p, const IntVec2& w) {
    return support_value(p, Rational(w.x), Rational(w.y));
}

bool contains(const NewtonPolytope& p, const Point2& point) {
    const auto& v = p.vertices();
    if (point.x < v.front().x || point.y < v.back().y) {
        return false;
    }
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        // Inner normal (q1 - q2, p2 - p1) of the compact face v[i]..v[i+1].
        Rational n1 = v[i].y - v[i + 1].y;
        Rational n2 = v[i + 1].x - v[i].x;
        if (n1 * point.x + n2 * point.y < n1 * v[i].x + n2 * v[i].y) {
            return false;
        }
    }
    return true;
}

std::vector<Face> faces(const NewtonPolytope& p) {
    const auto& v = p.vertices();
    std::vector<Face> out;
    out.reserve(v.size() + 1);
    out.push_back(Face{ExtendedVertex::y_infinite(), v.front()});
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        out.push_back(Face{v[i], v[i + 1]});
    }
    out.push_back(Face{v.back(), ExtendedVertex::x_infinite()});
    return out;
}

ExtRational slope(const Face& f) {
    if (f.is_vertical_ray()) {
        return ExtRational::pos_inf();
    }
    if (f.is_horizontal_ray()) {
        return ExtRational(Rational(0));
    }
    const Point2& l = f.left.point();
    const Point2& r = f.right.point();
    return ExtRational((l.y - r.y) / (r.x - l.x));
}

IntVec2 primitive_normal(const Face& f) {
    if (f.is_vertical_ray()) {
        return {1, 0};
    }
    if (f.is_horizontal_ray()) {
        return {0, 1};
    }
    const Point2& l = f.left.point();
    const Point2& r = f.right.point();
    return primitive(l.y - r.y, r.x - l.x);
}

FaceIntercepts face_intercepts(const Face& f) {
    if (!f.is_compact()) {
        throw DomainError("intercepts are defined only for compact faces");
    }
    const Point2& l = f.left.point();
    const Point2& r = f.right.point();
    if (l.y == r.y || l.x == r.x) {
        throw DomainError("intercepts undefined for an axis-parallel face");
    }
    Rational s = (l.y - r.y) / (r.x - l.x);
    Rational beta = l.y + s * l.x;
    return FaceIntercepts{beta / s, beta};
}

} // namespace germ

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "germ/rational.hpp"

namespace germ {

/// A point of the closed first quadrant.
struct Point2 {
    Rational x;
    Rational y;

    Point2() = default;
    Point2(Rational x_, Rational y_);

    friend bool operator==(const Point2&, const Point2&) = default;
};

Point2 operator+(const Point2& a, const Point2& b);
std::string to_string(const Point2& p);

/// Primitive integer direction in the closed first quadrant.
struct IntVec2 {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const IntVec2&, const IntVec2&) = default;
    friend auto operator<=>(const IntVec2&, const IntVec2&) = default;
};

std::string to_string(const IntVec2& v);

/// Monomial valuation weight: coprime positive integers (w1, w2).
class Weight {
public:
    Weight(std::int64_t w1, std::int64_t w2);

    std::int64_t w1() const { return w1_; }
    std::int64_t w2() const { return w2_; }
    IntVec2 vec() const { return {w1_, w2_}; }

    friend bool operator==(const Weight&, const Weight&) = default;

private:
    std::int64_t w1_;
    std::int64_t w2_;
};

/// Vertex of a face, possibly one of the symbolic points (+inf, 0) / (0, +inf).
class ExtendedVertex {
public:
    enum class Kind { finite, x_infinite, y_infinite };

    ExtendedVertex(Point2 p) : kind_(Kind::finite), point_(std::move(p)) {} // NOLINT
    static ExtendedVertex x_infinite() { return ExtendedVertex(Kind::x_infinite); }
    static ExtendedVertex y_infinite() { return ExtendedVertex(Kind::y_infinite); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }
    /// Throws DomainError for the symbolic vertices.
    const Point2& point() const;

    std::string str() const;

    friend bool operator==(const ExtendedVertex&, const ExtendedVertex&) = default;

private:
    explicit ExtendedVertex(Kind k) : kind_(k) {}

    Kind kind_;
    Point2 point_;
};

/// One-dimensional face of a Newton polytope, with its left and right vertex.
struct Face {
    ExtendedVertex left;
    ExtendedVertex right;

    bool is_compact() const { return left.is_finite() && right.is_finite(); }
    bool is_vertical_ray() const { return left.kind() == ExtendedVertex::Kind::y_infinite; }
    bool is_horizontal_ray() const { return right.kind() == ExtendedVertex::Kind::x_infinite; }

    friend bool operator==(const Face&, const Face&) = default;
};

/// Axis intercepts (alpha, 0) and (0, beta) of the line through a compact face.
struct FaceIntercepts {
    Rational alpha;
    Rational beta;
};

/// Region conv(vertices) + first quadrant, stored as its lower-left vertex chain.
///
/// The chain has x strictly increasing, y strictly decreasing and strictly
/// decreasing face steepness; no vertex lies on the segment of its neighbours.
/// Two polytopes are equal iff their chains are equal.
class NewtonPolytope {
public:
    /// Newton polytope of a finite support set; throws InputError when empty.
    static NewtonPolytope from_support(std::span<const Point2> support);
    /// Wraps an already reduced chain; throws InputError if it is not one.
    static NewtonPolytope from_vertices(std::vector<Point2> vertices);

    const std::vector<Point2>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const Point2& leftmost() const { return vertices_.front(); }
    const Point2& lowest() const { return vertices_.back(); }

    friend bool operator==(const NewtonPolytope&, const NewtonPolytope&) = default;

private:
    explicit NewtonPolytope(std::vector<Point2> v) : vertices_(std::move(v)) {}

    std::vector<Point2> vertices_;
};

std::string to_string(const NewtonPolytope& p);

NewtonPolytope scale(const NewtonPolytope& p, const Rational& c);
NewtonPolytope minkowski_sum(const NewtonPolytope& p, const NewtonPolytope& q);

/// min over the polytope of w1*x + w2*y; w must be non-negative and nonzero.
Rational support_value(const NewtonPolytope& p, const Rational& w1, const Rational& w2);
Rational support_value(const NewtonPolytope& p, const IntVec2& w);

bool contains(const NewtonPolytope& p, const Point2& point);

/// Vertical ray, compact faces left to right, horizontal ray.
std::vector<Face> faces(const NewtonPolytope& p);

/// (q1 - q2) / (p2 - p1); 0 for the horizontal ray, +inf for the vertical ray.
ExtRational slope(const Face& f);

/// Primitive inner normal: (1,0) for the vertical ray, (0,1) for the horizontal ray.
IntVec2 primitive_normal(const Face& f);

FaceIntercepts face_intercepts(const Face& f);

} // namespace germ

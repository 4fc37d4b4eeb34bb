#pragma once

#include <vector>

#include "germ/polytope.hpp"

namespace germ {

/// Cone in the closed first quadrant spanned by two primitive integer vectors.
/// The generators are stored ordered by angle from the x-axis; equal generators
/// describe a single ray.
class Cone2 {
public:
    Cone2(IntVec2 a, IntVec2 b);

    const IntVec2& lower() const { return lower_; }
    const IntVec2& upper() const { return upper_; }
    bool is_ray() const { return lower_ == upper_; }

private:
    IntVec2 lower_;
    IntVec2 upper_;
};

/// Minimal generating set of the lattice points of the cone, ordered by angle
/// from the lower generator to the upper one.
///
/// Walks the Hirzebruch-Jung subdivision: from the current ray h, the next
/// element is the lattice point at determinant one from h that is angularly
/// closest to h inside the remaining cone.
std::vector<IntVec2> hilbert_basis(const Cone2& cone);

/// gcd-normalizes a nonzero vector of the closed first quadrant.
IntVec2 primitive(std::int64_t x, std::int64_t y);

/// Smallest positive integer multiple of a rational direction, made primitive.
IntVec2 primitive(const Rational& x, const Rational& y);

} // namespace germ

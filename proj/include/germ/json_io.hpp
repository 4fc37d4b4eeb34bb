#pragma once

#include <json.hpp>

#include "germ/fibration.hpp"

namespace germ::io {

using nlohmann::json;

/// {"num": "p", "den": "q"}
json to_json(const Rational& r);
/// Finite values as to_json(Rational); {"neg_inf": true} / {"pos_inf": true} otherwise.
json to_json(const ExtRational& r);
/// {"vertices": [[[xnum, xden], [ynum, yden]], ...]} with decimal strings.
json to_json(const NewtonPolytope& p);
json to_json(const Weight& w);
json to_json(const IntVec2& w);

json to_json(const MldResult& r);
json to_json(const LctResult& r);
json to_json(const BoundResult& r);
json to_json(const DirichletTrace& t);
json to_json(const SurfaceReport& r);
json to_json(const NondegeneracyReport& r);
json to_json(const DiscriminantResult& r);
json to_json(const TheoremReport& r);
json to_json(const SweepRow& r);

Rational rational_from_json(const json& j);
NewtonPolytope polytope_from_json(const json& j);

} // namespace germ::io

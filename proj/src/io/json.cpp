#include "germ/json_io.hpp"

namespace germ::io {

namespace {

json pair(const Rational& r) { return json::array({r.numerator_string(), r.denominator_string()}); }

Rational from_pair(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
        throw InputError("rational must be a [num, den] string pair");
    }
    return Rational::parse(j[0].get<std::string>() + "/" + j[1].get<std::string>());
}

const char* kind_name(LctResult::WitnessKind k) {
    switch (k) {
    case LctResult::WitnessKind::weight:
        return "weight";
    case LctResult::WitnessKind::axis:
        return "axis";
    case LctResult::WitnessKind::cap:
        return "cap";
    }
    return "cap";
}

json face_json(const Face& f) { return json{{"left", f.left.str()}, {"right", f.right.str()}}; }

} // namespace

json to_json(const Rational& r) { return json{{"num", r.numerator_string()}, {"den", r.denominator_string()}}; }

json to_json(const ExtRational& r) {
    if (r.is_neg_inf()) {
        return json{{"neg_inf", true}};
    }
    if (r.is_pos_inf()) {
        return json{{"pos_inf", true}};
    }
    return to_json(r.value());
}

json to_json(const NewtonPolytope& p) {
    json verts = json::array();
    for (const auto& v : p.vertices()) {
        verts.push_back(json::array({pair(v.x), pair(v.y)}));
    }
    return json{{"vertices", verts}};
}

json to_json(const Weight& w) { return json::array({w.w1(), w.w2()}); }
json to_json(const IntVec2& w) { return json::array({w.x, w.y}); }

json to_json(const MldResult& r) {
    json out{{"value", to_json(r.value)}, {"attained", r.attained}};
    out["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
    if (r.certificate) {
        out["certificate"] = to_json(*r.certificate);
    }
    out["axis_values"] = json::array({to_json(r.axis_x), to_json(r.axis_y)});
    return out;
}

json to_json(const LctResult& r) {
    json out{{"membership_sup", to_json(r.membership_sup)},
             {"coefficient_cap", to_json(r.coefficient_cap)},
             {"value", to_json(r.value)},
             {"witness_kind", kind_name(r.witness_kind)},
             {"exact", r.exact}};
    out["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
    return out;
}

json to_json(const BoundResult& r) {
    return json{{"epsilon", to_json(r.epsilon)}, {"delta", to_json(r.delta)}, {"witness_n", r.witness_n}};
}

json to_json(const DirichletTrace& t) {
    json rem = json::array();
    for (const auto& r : t.remainders) {
        rem.push_back(to_json(r));
    }
    return json{{"q", to_json(t.q)},
                {"delta", to_json(t.delta)},
                {"k", t.k},
                {"m", t.m},
                {"remainders", rem},
                {"partial_quotients", t.partial_quotients},
                {"numerators", t.numerators}};
}

json to_json(const NondegeneracyReport& r) {
    json out{{"nondegenerate", r.ok()}};
    if (!r.ok()) {
        out["face"] = r.face ? face_json(*r.face) : json(nullptr);
        out["components"] = r.components;
        out["reason"] = r.reason;
    }
    return out;
}

json to_json(const SurfaceReport& r) {
    json out{{"applicable", r.applicable}, {"pass", r.pass}};
    if (!r.applicable) {
        out["reason"] = r.reason;
        return out;
    }
    out["mld"] = to_json(r.mld);
    out["mult"] = to_json(r.mult);
    out["intersection"] = to_json(*r.intersection);
    out["nondegenerate"] = r.nondegenerate;
    out["lct"] = to_json(*r.lct);
    out["bound"] = to_json(r.bound);
    out["bound_n"] = r.bound_n;
    return out;
}

json to_json(const DiscriminantResult& r) {
    json pts = json::array();
    for (const auto& p : r.points) {
        pts.push_back(json{{"point", p.point.str()},
                           {"chart", p.germ.chart == Chart::y_chart ? "y" : "x"},
                           {"germ", render(p.germ.divisor, {"t", "u"})},
                           {"lct", to_json(p.lct)},
                           {"mld", to_json(p.mld)}});
    }
    return json{{"b_D", to_json(r.b_d)},
                {"coefficient", to_json(r.coefficient)},
                {"vertical", to_json(r.vertical)},
                {"generic_cap", to_json(r.generic_cap)},
                {"points", pts},
                {"assumption", "b_D taken as the minimum over closed fiber points and the generic point"}};
}

json to_json(const TheoremReport& r) {
    return json{{"epsilon", to_json(r.epsilon)},
                {"delta_required", to_json(r.delta_required)},
                {"witness_n", r.witness_n},
                {"b_D", to_json(r.b_d)},
                {"coefficient", to_json(r.coefficient)},
                {"pass", r.pass},
                {"fiber_multiplicity", r.fiber_multiplicity},
                {"multiplicity_bound", to_json(r.multiplicity_bound)},
                {"multiplicity_ok", r.multiplicity_ok}};
}

json to_json(const SweepRow& r) {
    return json{{"m", r.m},
                {"epsilon", to_json(r.epsilon)},
                {"b_D", to_json(r.b_d)},
                {"delta", to_json(r.delta)},
                {"ratio", to_json(r.ratio)},
                {"coefficient", to_json(r.coefficient)}};
}

Rational rational_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_string() ||
        !j["den"].is_string()) {
        throw InputError("rational must be {\"num\": string, \"den\": string}");
    }
    return from_pair(json::array({j["num"], j["den"]}));
}

NewtonPolytope polytope_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
        throw InputError("polytope must be {\"vertices\": [...]}");
    }
    std::vector<Point2> verts;
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2) {
            throw InputError("vertex must be a pair of rationals");
        }
        verts.emplace_back(from_pair(v[0]), from_pair(v[1]));
    }
    return NewtonPolytope::from_vertices(std::move(verts));
}

} // namespace germ::io

#include <json.hpp>

#include "germ/fibration.hpp"

namespace germ {

FibrationSpec parse_fibration_config(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("fibration config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("components") || !doc["components"].is_array()) {
        throw InputError("fibration config needs a \"components\" array");
    }
    FibrationSpec spec;
    if (doc.contains("base_var")) {
        if (!doc["base_var"].is_string()) {
            throw InputError("\"base_var\" must be a string");
        }
        spec.base_var = doc["base_var"].get<std::string>();
    }
    if (spec.base_var == "x" || spec.base_var == "y") {
        throw InputError("base variable must differ from the fiber variables x, y");
    }
    const std::array<std::string, 3> vars{spec.base_var, "x", "y"};
    std::size_t index = 0;
    for (const auto& entry : doc["components"]) {
        std::string where = "component " + std::to_string(index++);
        if (!entry.is_object() || !entry.contains("coeff") || !entry.contains("poly")) {
            throw InputError(where + " needs \"coeff\" and \"poly\"");
        }
        if (!entry["coeff"].is_string() || !entry["poly"].is_string()) {
            throw InputError(where + ": \"coeff\" and \"poly\" must be strings");
        }
        FibrationComponent comp;
        comp.coeff = Rational::parse(entry["coeff"].get<std::string>());
        comp.poly = parse_polynomial<3>(entry["poly"].get<std::string>(), vars);
        if (comp.poly.is_zero()) {
            throw InputError(where + " is the zero polynomial");
        }
        // Fiber degree read off the polynomial; an explicit value must agree.
        const auto& first = comp.poly.terms().begin()->first;
        comp.fiber_degree = first[1] + first[2];
        if (entry.contains("fiber_degree")) {
            if (!entry["fiber_degree"].is_number_integer()) {
                throw InputError(where + ": \"fiber_degree\" must be an integer");
            }
            int declared = entry["fiber_degree"].get<int>();
            if (declared != comp.fiber_degree) {
                throw InputError(where + " declares fiber_degree " + std::to_string(declared) +
                                 " but the polynomial has degree " + std::to_string(comp.fiber_degree));
            }
        }
        spec.components.push_back(std::move(comp));
    }
    validate_spec(spec);
    return spec;
}

} // namespace germ

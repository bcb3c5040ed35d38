#include "grasstrans/json_io.hpp"

#include <cstdio>

namespace grasstrans {

using nlohmann::json;

std::string double17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

Rat rat_from_string(const std::string& s) {
    Rat q;
    try {
        q = Rat(s);
    } catch (const std::invalid_argument&) {
        throw GtError("rat_from_string: cannot parse '" + s + "'");
    }
    q.canonicalize();
    return q;
}

json root_system_to_json(const RootSystemBC& rs) {
    json j;
    j["rank"] = rs.rank;
    j["mult_medium"] = rat_string(rs.a);
    j["mult_short"] = rat_string(rs.b2);
    j["mult_long"] = rat_string(rs.iota);
    if (rs.preset) {
        j["preset"] = {{"field", field_name(rs.preset->field)},
                       {"n", rs.preset->n},
                       {"r", rs.preset->r}};
    }
    return j;
}

RootSystemBC root_system_from_json(const json& j) {
    if (j.contains("preset")) {
        const json& p = j.at("preset");
        RootSystemBC rs = grassmannian_preset(parse_field(p.at("field").get<std::string>()),
                                              p.at("n").get<int>(), p.at("r").get<int>());
        if (rs.rank != j.at("rank").get<int>())
            throw GtError("root_system_from_json: rank disagrees with preset");
        return rs;
    }
    return make_root_system(j.at("rank").get<int>(),
                            rat_from_string(j.at("mult_medium").get<std::string>()),
                            rat_from_string(j.at("mult_short").get<std::string>()),
                            rat_from_string(j.at("mult_long").get<std::string>()));
}

json sym_trig_to_json(const SymTrigPoly& p) {
    json j;
    j["root_system"] = root_system_to_json(p.rs);
    j["weight"] = p.weight;
    json terms = json::array();
    for (const auto& [lambda, c] : p.coeffs)
        terms.push_back({{"lambda", lambda}, {"coeff", rat_string(c)}});
    j["terms"] = std::move(terms);
    return j;
}

SymTrigPoly sym_trig_from_json(const json& j) {
    SymTrigPoly p;
    p.rs = root_system_from_json(j.at("root_system"));
    p.weight = j.at("weight").get<IVec>();
    for (const auto& term : j.at("terms"))
        p.coeffs[term.at("lambda").get<IVec>()] =
            rat_from_string(term.at("coeff").get<std::string>());
    return p;
}

}  // namespace grasstrans

#include "dunkl/json_io.hpp"

namespace dunkl {

nlohmann::json poly_to_json(const Poly& p, const Field& f) {
    nlohmann::json j;
    j["arity"] = p.arity();
    j["params"] = f.params;
    if (f.cyclo_order != 1)
        j["cyclo_order"] = f.cyclo_order;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json t;
        t["exp"] = m;
        t["coef"] = c.str(f);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Poly poly_from_json(const nlohmann::json& j, Field* field_out) {
    Field f;
    f.params = j.at("params").get<std::vector<std::string>>();
    if (j.contains("cyclo_order"))
        f.cyclo_order = j.at("cyclo_order").get<uint32_t>();
    int arity = j.at("arity").get<int>();
    Poly p(arity);
    for (const auto& t : j.at("terms")) {
        Mono m = t.at("exp").get<Mono>();
        if (m.size() != static_cast<size_t>(arity))
            throw std::domain_error("poly_from_json: exponent length != arity");
        p.add_term(m, Scalar::parse(f, t.at("coef").get<std::string>()));
    }
    if (field_out)
        *field_out = f;
    return p;
}

}  // namespace dunkl

#include "pmod4/serialize.hpp"

namespace pmod4 {

using nlohmann::json;

json classgroup_to_json(const ClassGroupData& cg) {
    json forms = json::array();
    for (const auto& f : cg.forms) forms.push_back({f.a, f.b, f.c});
    return {{"schema", kSchemaVersion},
            {"D", cg.D},
            {"h", cg.class_number()},
            {"forms", forms}};
}

ClassGroupData classgroup_from_json(const json& j) {
    ClassGroupData cg;
    cg.D = j.at("D").get<long long>();
    for (const auto& f : j.at("forms"))
        cg.forms.push_back({f.at(0).get<long long>(), f.at(1).get<long long>(),
                            f.at(2).get<long long>()});
    if ((long long)cg.forms.size() != j.at("h").get<long long>())
        throw std::invalid_argument("classgroup_from_json: h/forms mismatch");
    return cg;
}

json hilbert_to_json(long long D, long long h, const HilbertResult& hr) {
    json coeffs = json::array();
    for (const auto& c : hr.poly.coeffs) coeffs.push_back(c.get_str());
    return {{"schema", kSchemaVersion},
            {"D", D},
            {"h", h},
            {"prec_used", (long)hr.prec_used},
            {"hilbert", coeffs}};
}

HilbertResult hilbert_from_json(const json& j) {
    HilbertResult hr;
    hr.prec_used = j.at("prec_used").get<long>();
    for (const auto& s : j.at("hilbert"))
        hr.poly.coeffs.emplace_back(s.get<std::string>());
    return hr;
}

json report_to_json(const Theorem1Report& r) {
    json out = {{"schema", kSchemaVersion},
                {"D", r.D},
                {"N", r.checked},
                {"ring", ring_name(r.ring)},
                {"status", r.ok() ? "ok" : "mismatch"}};
    out["first_mismatch"] = r.first_mismatch ? json(*r.first_mismatch) : json(nullptr);
    return out;
}

json relation_to_json(const Relation& r) {
    json coeffs = json::object();
    for (std::size_t i = 0; i < r.labels.size(); ++i)
        coeffs[std::to_string(r.labels[i])] = (int)r.coefficients[i];
    json out = {{"schema", kSchemaVersion},
                {"S", r.labels},
                {"coefficients", coeffs},
                {"class", r.cls == RelationClass::Unit ? "unit" : "doubled"},
                {"bound_B", r.bound_B},
                {"verified_through", r.verified_through}};
    out["failed_at"] = r.failed_at ? json(*r.failed_at) : json(nullptr);
    return out;
}

json polynomial_to_json(const IntPolynomial& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs) coeffs.push_back(c.get_str());
    return {{"schema", kSchemaVersion}, {"degree", p.degree()}, {"coeffs", coeffs}};
}

}  // namespace pmod4

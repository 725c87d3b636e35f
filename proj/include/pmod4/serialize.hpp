#ifndef PMOD4_SERIALIZE_HPP
#define PMOD4_SERIALIZE_HPP

#include <json.hpp>

#include "pmod4/binary_qf.hpp"
#include "pmod4/congruence.hpp"
#include "pmod4/hilbert.hpp"
#include "pmod4/relations.hpp"
#include "pmod4/series.hpp"

namespace pmod4 {

inline constexpr const char* kSchemaVersion = "v1";

// {schema, ring, valuation, order, coeffs:[decimal strings]}
template <class R>
nlohmann::json series_to_json(const Series<R>& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(ring_traits<R>::to_string(c));
    return {{"schema", kSchemaVersion},
            {"ring", ring_name(ring_traits<R>::tag)},
            {"valuation", s.valuation()},
            {"order", s.order()},
            {"coeffs", coeffs}};
}

template <class R>
Series<R> series_from_json(const nlohmann::json& j) {
    if (j.at("ring").get<std::string>() != ring_name(ring_traits<R>::tag))
        throw std::invalid_argument("series_from_json: ring mismatch");
    long val = j.at("valuation").get<long>();
    long order = j.at("order").get<long>();
    std::vector<R> c;
    for (const auto& s : j.at("coeffs"))
        c.push_back(ring_traits<R>::from_string(s.get<std::string>()));
    if (c.empty()) return Series<R>::zero(order);
    if (val + (long)c.size() - 1 != order)
        throw std::invalid_argument("series_from_json: order/coeffs mismatch");
    return Series<R>(val, std::move(c));
}

nlohmann::json classgroup_to_json(const ClassGroupData& cg);
ClassGroupData classgroup_from_json(const nlohmann::json& j);

nlohmann::json hilbert_to_json(long long D, long long h, const HilbertResult& hr);
HilbertResult hilbert_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const Theorem1Report& r);
nlohmann::json relation_to_json(const Relation& r);
nlohmann::json polynomial_to_json(const IntPolynomial& p);

}  // namespace pmod4

#endif

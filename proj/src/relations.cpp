#include "pmod4/relations.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <stdexcept>

#include "pmod4/binary_qf.hpp"
#include "pmod4/congruence.hpp"
#include "pmod4/hilbert.hpp"

namespace pmod4 {

std::vector<Relation> find_relations_in_rows(const std::vector<long long>& labels,
                                             const RowBuilder& build_row, long B,
                                             long N_check) {
    if (N_check <= B)
        throw std::invalid_argument("find_relations_in_rows: N_check must exceed the bound");
    const std::size_t n = labels.size();

    Z4Matrix m(n, std::size_t(B) + 1);
    m.row_labels = labels;
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < (long long)n; ++i) {
        try {
            Series<Mod4> row = build_row(labels[std::size_t(i)], B);
            for (long e = 0; e <= B; ++e)
                m.at(std::size_t(i), std::size_t(e)) = row.coeff(e).v;
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);

    auto kernel = kernel_mod4(m);
    std::vector<Relation> out;
    if (kernel.empty()) return out;

    // extended rows, built once per label actually used by some relation
    std::map<long long, Series<Mod4>> extended;
    for (const auto& c : kernel) {
        for (std::size_t i = 0; i < n; ++i)
            if (c[i] != 0 && !extended.count(labels[i]))
                extended.emplace(labels[i], build_row(labels[i], N_check));
    }

    for (const auto& c : kernel) {
        Relation rel;
        rel.labels = labels;
        rel.coefficients = c;
        rel.bound_B = B;
        rel.verified_through = N_check;
        bool any_odd = std::any_of(c.begin(), c.end(),
                                   [](std::uint8_t x) { return (x & 1u) != 0; });
        rel.cls = any_odd ? RelationClass::Unit : RelationClass::Doubled;
        for (long e = 0; e <= N_check && !rel.failed_at; ++e) {
            unsigned acc = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (c[i] == 0) continue;
                acc += c[i] * extended.at(labels[i]).coeff(e).v;
            }
            if (acc % 4u != 0) rel.failed_at = e;
        }
        out.push_back(std::move(rel));
    }
    return out;
}

FindRelationsResult find_relations(const std::vector<long long>& S, long N_check) {
    if (S.empty()) throw std::invalid_argument("find_relations: empty set");
    for (long long D : S) require_qualifying(D);

    std::map<long long, ClassGroupData> groups;
    std::map<long long, std::vector<Mod4>> hpolys;
    long h_S = 0;
    for (long long D : S) {
        auto cg = reduced_forms(D);
        h_S = std::max(h_S, (long)cg.class_number());
        hpolys.emplace(D, hilbert_mod<Mod4>(hilbert_poly(D, cg).poly));
        groups.emplace(D, std::move(cg));
    }

    FindRelationsResult res;
    res.h_S = h_S;
    res.bound_B = sturm_bound(h_S);

    RowBuilder build = [&](long long D, long N) {
        auto P = twisted_series<Mod4>(D, N >= 1 ? N : 1);
        return normalized_series<Mod4>(D, h_S, N, hpolys.at(D), P).series;
    };
    res.relations = find_relations_in_rows(S, build, res.bound_B, N_check);
    return res;
}

}  // namespace pmod4

#ifndef PMOD4_RELATIONS_HPP
#define PMOD4_RELATIONS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pmod4/rings.hpp"
#include "pmod4/series.hpp"
#include "pmod4/z4linalg.hpp"

namespace pmod4 {

// Sturm bound for the weight 12 h_S + 2 holomorphic forms on Gamma_0(6):
// [SL2(Z):Gamma_0(6)] * (12 h_S + 2) / 12 = 12 h_S + 2.  Agreement on
// exponents 0..B (B+1 coefficients) forces the congruence.
inline long sturm_bound(long h_S) { return 12 * h_S + 2; }

enum class RelationClass { Unit, Doubled };

// A mod-4 linear dependence sum_D c_D * row_D == 0.  `Unit` relations have
// some odd coefficient; `Doubled` ones only witness a mod-2 dependence.
struct Relation {
    std::vector<long long> labels;          // the discriminants D, row order
    std::vector<std::uint8_t> coefficients; // c_D in {0..3}, aligned to labels
    RelationClass cls = RelationClass::Unit;
    long bound_B = 0;
    long verified_through = 0;
    std::optional<long> failed_at;  // set iff extended verification failed
    bool verified() const { return !failed_at.has_value(); }
};

// Builds a row (q-series coefficient vector on exponents 0..N) for a label.
using RowBuilder = std::function<Series<Mod4>(long long label, long N)>;

// Kernel at the Sturm bound, then extended verification through N_check.
// Failing relations are returned flagged, never dropped.
std::vector<Relation> find_relations_in_rows(const std::vector<long long>& labels,
                                             const RowBuilder& build_row, long B,
                                             long N_check);

// The full pipeline for a set S of qualifying discriminants: class groups,
// Hilbert polynomials mod 4, normalized series rows, kernel, verification.
// h_S and B are derived from S.  `hilbert_prec_hint` lets callers reuse
// cached polynomials (see cli).
struct FindRelationsResult {
    long h_S = 0;
    long bound_B = 0;
    std::vector<Relation> relations;
};

FindRelationsResult find_relations(const std::vector<long long>& S, long N_check);

}  // namespace pmod4

#endif

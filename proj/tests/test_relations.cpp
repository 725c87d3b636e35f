#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "pmod4/relations.hpp"

using namespace pmod4;

namespace {

Series<Mod4> random_series(long N, std::mt19937& rng) {
    std::vector<Mod4> c(std::size_t(N) + 1);
    for (auto& v : c) v = Mod4{std::uint8_t(rng() % 4)};
    return Series<Mod4>(0, std::move(c));
}

// evaluate sum c_i * row_i through exponent N
bool is_relation(const std::vector<Series<Mod4>>& rows,
                 const std::vector<std::uint8_t>& c, long N) {
    for (long e = 0; e <= N; ++e) {
        unsigned acc = 0;
        for (std::size_t i = 0; i < rows.size(); ++i)
            acc += c[i] * rows[i].coeff(e).v;
        if (acc % 4u != 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("sturm_bound values") {
    CHECK(sturm_bound(1) == 14);
    CHECK(sturm_bound(3) == 38);
    CHECK(sturm_bound(25) == 302);
}

TEST_CASE("N_check must exceed the bound") {
    RowBuilder b = [](long long, long N) { return Series<Mod4>::one(N); };
    CHECK_THROWS_AS(find_relations_in_rows({1}, b, 10, 10), std::invalid_argument);
}

TEST_CASE("duplicated row is detected") {
    std::mt19937 rng(11);
    const long B = 20, N = 60;
    auto g = random_series(N, rng);
    auto h = random_series(N, rng);
    std::vector<Series<Mod4>> rows{g, g, h};
    RowBuilder b = [&](long long lab, long n) {
        return rows[std::size_t(lab)].truncated(n);
    };
    auto rels = find_relations_in_rows({0, 1, 2}, b, B, N);
    REQUIRE(!rels.empty());
    bool found = false;
    for (const auto& r : rels) {
        CHECK(r.verified());
        CHECK(r.verified_through == N);
        CHECK(is_relation(rows, r.coefficients, N));
        // some relation must pair the duplicates with unit coefficients
        if ((r.coefficients[0] & 1) && (r.coefficients[1] & 1) &&
            r.coefficients[2] == 0)
            found = true;
    }
    CHECK(found);
}

TEST_CASE("engineered dependence among four rows") {
    std::mt19937 rng(5);
    const long B = 30, N = 90;
    auto g = random_series(N, rng);
    auto h = random_series(N, rng);
    // rows: g, 2g + 2h, h, g + h; then 2*r0 + 1*r1 + 2*r2 + 0*r3 = 4g + 4h = 0
    std::vector<Series<Mod4>> rows{g, g.scaled(Mod4{2}) + h.scaled(Mod4{2}), h,
                                   g + h};
    RowBuilder b = [&](long long lab, long n) {
        return rows[std::size_t(lab)].truncated(n);
    };
    auto rels = find_relations_in_rows({0, 1, 2, 3}, b, B, N);
    REQUIRE(!rels.empty());
    for (const auto& r : rels) {
        CHECK(r.verified());
        CHECK(is_relation(rows, r.coefficients, N));
    }
    // confirm the known dependence really is one (oracle), and that the
    // returned kernel catches it or an equivalent: check spanning by brute
    // force over combinations of returned generators
    CHECK(is_relation(rows, {2, 1, 2, 0}, N));
    std::size_t n_gen = rels.size();
    bool covered = false;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n_gen; ++i) total *= 4;
    for (std::size_t code = 0; code < total && !covered; ++code) {
        std::vector<std::uint8_t> acc(4, 0);
        std::size_t x = code;
        for (std::size_t i = 0; i < n_gen; ++i, x /= 4)
            for (std::size_t j = 0; j < 4; ++j)
                acc[j] = std::uint8_t((acc[j] + (x % 4) * rels[i].coefficients[j]) % 4);
        if (acc == std::vector<std::uint8_t>{2, 1, 2, 0}) covered = true;
    }
    CHECK(covered);
}

TEST_CASE("failing extended verification is flagged, not dropped") {
    std::mt19937 rng(31);
    const long B = 20, N = 50;
    auto g = random_series(N, rng);
    // rows agree through B but diverge at B+1
    auto g2 = g;
    std::vector<Mod4> bump(std::size_t(N) + 1);
    bump[std::size_t(B) + 1] = Mod4{1};
    g2 = g2 + Series<Mod4>(0, std::move(bump));
    std::vector<Series<Mod4>> rows{g, g2};
    RowBuilder b = [&](long long lab, long n) {
        return rows[std::size_t(lab)].truncated(n);
    };
    auto rels = find_relations_in_rows({0, 1}, b, B, N);
    bool saw_failed = false;
    for (const auto& r : rels)
        if (!r.verified()) {
            saw_failed = true;
            CHECK(*r.failed_at == B + 1);
        }
    CHECK(saw_failed);
}

TEST_CASE("single-discriminant set yields no relation") {
    auto res = find_relations({23}, 400);
    CHECK(res.h_S == 3);
    CHECK(res.bound_B == 38);
    CHECK(res.relations.empty());
}

TEST_CASE("pair {23,47}: Sturm persistence of the kernel answer") {
    // h_S = 5, B = 62; whatever the kernel says at B must persist to 10B
    auto res = find_relations({23, 47}, 620);
    CHECK(res.h_S == 5);
    CHECK(res.bound_B == 62);
    for (const auto& r : res.relations) {
        CHECK(r.verified());
        CHECK(r.verified_through == 620);
    }
}

TEST_CASE("row builder exceptions propagate") {
    RowBuilder b = [](long long, long) -> Series<Mod4> {
        throw std::runtime_error("boom");
    };
    CHECK_THROWS_AS(find_relations_in_rows({0, 1}, b, 5, 50), std::runtime_error);
}

TEST_CASE("non-qualifying labels rejected by the pipeline") {
    CHECK_THROWS_AS(find_relations({25}, 100), std::domain_error);
    CHECK_THROWS_AS(find_relations({}, 100), std::invalid_argument);
}

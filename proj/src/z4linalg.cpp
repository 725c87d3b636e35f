#include "pmod4/z4linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace pmod4 {

namespace {

using Row = std::vector<std::uint8_t>;

inline void sub_scaled(Row& r, const Row& p, unsigned f) {
    for (std::size_t j = 0; j < r.size(); ++j)
        r[j] = std::uint8_t((r[j] + 4u - (f * p[j]) % 4u) % 4u);
}

std::size_t leading_index(const Row& r) {
    for (std::size_t j = 0; j < r.size(); ++j)
        if (r[j] != 0) return j;
    return r.size();
}

// Echelon + span-closure + back-reduction over Z/4.  Units are 1 and 3;
// a pivot entry 2 cannot be normalized to 1, and its doubled row 2*r (zero
// at the pivot) must be kept in play so that the suffix-span property holds.
std::vector<Row> howell_rows(std::vector<Row> pending, std::size_t cols) {
    std::vector<Row> done;
    for (std::size_t col = 0; col < cols; ++col) {
        // partition pending rows by their entry at `col` (all earlier
        // columns are already zero in pending rows)
        std::vector<Row> with_unit, with_two, rest;
        for (auto& r : pending) {
            if (r[col] % 2 == 1)
                with_unit.push_back(std::move(r));
            else if (r[col] == 2)
                with_two.push_back(std::move(r));
            else
                rest.push_back(std::move(r));
        }
        pending = std::move(rest);
        if (!with_unit.empty()) {
            Row pivot = std::move(with_unit.front());
            if (pivot[col] == 3)
                for (auto& x : pivot) x = std::uint8_t((3u * x) % 4u);
            for (std::size_t i = 1; i < with_unit.size(); ++i) {
                sub_scaled(with_unit[i], pivot, with_unit[i][col]);
                pending.push_back(std::move(with_unit[i]));
            }
            for (auto& r : with_two) {
                sub_scaled(r, pivot, r[col]);
                pending.push_back(std::move(r));
            }
            done.push_back(std::move(pivot));
        } else if (!with_two.empty()) {
            Row pivot = std::move(with_two.front());
            for (std::size_t i = 1; i < with_two.size(); ++i) {
                sub_scaled(with_two[i], pivot, 1);
                pending.push_back(std::move(with_two[i]));
            }
            // annihilator multiple (4/2) * pivot = 2 * pivot is zero at the
            // pivot column but its tail may extend the suffix span
            Row doubled(pivot.size());
            for (std::size_t j = 0; j < pivot.size(); ++j)
                doubled[j] = std::uint8_t((2u * pivot[j]) % 4u);
            if (leading_index(doubled) < cols) pending.push_back(std::move(doubled));
            done.push_back(std::move(pivot));
        }
        // drop rows that became zero
        std::erase_if(pending, [&](const Row& r) { return leading_index(r) == r.size(); });
    }

    // back-reduce entries above each pivot: to 0 under a unit pivot,
    // to {0,1} under a pivot of 2
    for (std::size_t i = 0; i < done.size(); ++i) {
        std::size_t pj = leading_index(done[i]);
        for (std::size_t k = 0; k < i; ++k) {
            unsigned e = done[k][pj];
            if (done[i][pj] == 1) {
                if (e) sub_scaled(done[k], done[i], e);
            } else {  // pivot value 2
                if (e >= 2) sub_scaled(done[k], done[i], e / 2);
            }
        }
    }
    std::erase_if(done, [&](const Row& r) { return leading_index(r) == r.size(); });
    std::sort(done.begin(), done.end(), [](const Row& x, const Row& y) {
        return leading_index(x) < leading_index(y);
    });
    return done;
}

}  // namespace

Z4Matrix howell_form(const Z4Matrix& m) {
    std::vector<Row> rows(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        rows[i] = Row(m.a.begin() + (long)(i * m.cols), m.a.begin() + (long)((i + 1) * m.cols));
    auto h = howell_rows(std::move(rows), m.cols);
    Z4Matrix out(h.size(), m.cols);
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = 0; j < m.cols; ++j) out.at(i, j) = h[i][j];
    return out;
}

std::vector<std::vector<std::uint8_t>> kernel_mod4(const Z4Matrix& m) {
    // Howell form of [M | I]; rows whose M-part vanished have identity parts
    // generating {c : c M = 0}.
    std::vector<Row> rows(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        rows[i].assign(m.cols + m.rows, 0);
        std::copy(m.a.begin() + (long)(i * m.cols), m.a.begin() + (long)((i + 1) * m.cols),
                  rows[i].begin());
        rows[i][m.cols + i] = 1;
    }
    auto h = howell_rows(std::move(rows), m.cols + m.rows);
    std::vector<Row> kernel;
    for (auto& r : h) {
        if (leading_index(r) < m.cols) continue;
        Row c(r.begin() + (long)m.cols, r.end());
        if (leading_index(c) < c.size()) kernel.push_back(std::move(c));
    }
    return kernel;
}

std::vector<std::uint8_t> row_combination(const Z4Matrix& m,
                                          const std::vector<std::uint8_t>& c) {
    if (c.size() != m.rows)
        throw std::invalid_argument("row_combination: coefficient count != rows");
    std::vector<std::uint8_t> out(m.cols, 0);
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (c[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols; ++j)
            out[j] = std::uint8_t((out[j] + c[i] * m.at(i, j)) % 4u);
    }
    return out;
}

}  // namespace pmod4

#ifndef PMOD4_Z4LINALG_HPP
#define PMOD4_Z4LINALG_HPP

#include <cstdint>
#include <vector>

namespace pmod4 {

// Dense matrix over Z/4.  Row labels carry the discriminants when the rows
// are q-series coefficient vectors.
struct Z4Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint8_t> a;  // row-major, entries in {0,1,2,3}
    std::vector<long long> row_labels;

    Z4Matrix() = default;
    Z4Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    std::uint8_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::uint8_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    friend bool operator==(const Z4Matrix& x, const Z4Matrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

// Canonical Howell form: same row span, idempotent, and every span element
// supported on a column suffix is generated by the suffix rows.  Row labels
// are not propagated (rows lose their identity).
Z4Matrix howell_form(const Z4Matrix& m);

// Generators of the left kernel {c : c * M = 0} over Z/4.
std::vector<std::vector<std::uint8_t>> kernel_mod4(const Z4Matrix& m);

// c * M over Z/4 (c has one entry per row).
std::vector<std::uint8_t> row_combination(const Z4Matrix& m,
                                          const std::vector<std::uint8_t>& c);

}  // namespace pmod4

#endif

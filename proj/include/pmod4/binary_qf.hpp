#ifndef PMOD4_BINARY_QF_HPP
#define PMOD4_BINARY_QF_HPP

#include <vector>

namespace pmod4 {

// Positive-definite integral binary quadratic form ax^2 + bxy + cy^2.
struct QuadForm {
    long long a = 1, b = 0, c = 1;
    long long discriminant() const { return b * b - 4 * a * c; }
    bool is_reduced() const {
        long long ab = b < 0 ? -b : b;
        if (!(ab <= a && a <= c)) return false;
        if ((ab == a || a == c) && b < 0) return false;
        return true;
    }
    friend bool operator==(const QuadForm&, const QuadForm&) = default;
};

struct ClassGroupData {
    long long D = 0;  // discriminant is -D
    std::vector<QuadForm> forms;
    long long class_number() const { return (long long)forms.size(); }
};

bool is_squarefree(long long n);

// The discriminants this artifact works with: square-free D == 23 (mod 24), D > 1.
bool is_qualifying_discriminant(long long D);

// All reduced primitive forms of discriminant -D.  Requires -D fundamental
// with D == 3 (mod 4) square-free; anything else is rejected.
ClassGroupData reduced_forms(long long D);

// h(-D) from the Dirichlet class number formula |sum chi_{-D}(n) n| / D
// (valid for fundamental -D < -4, where w = 2).
long long dirichlet_class_number(long long D);

// h(-D) <= sqrt(D)(log D + 2)/pi
bool class_number_bound_check(const ClassGroupData& cg);

}  // namespace pmod4

#endif

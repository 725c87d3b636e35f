#include "pmod4/binary_qf.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "pmod4/kronecker.hpp"

namespace pmod4 {

bool is_squarefree(long long n) {
    if (n < 1) return false;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % (d * d) == 0) return false;
        while (n % d == 0) n /= d;
    }
    return true;
}

bool is_qualifying_discriminant(long long D) {
    return D > 1 && D % 24 == 23 && is_squarefree(D);
}

static void require_fundamental(long long D) {
    if (D <= 0 || D % 4 != 3 || !is_squarefree(D))
        throw std::domain_error("discriminant -" + std::to_string(D) +
                                " is not fundamental of the supported shape "
                                "(need D square-free, D == 3 mod 4)");
}

ClassGroupData reduced_forms(long long D) {
    require_fundamental(D);
    ClassGroupData cg;
    cg.D = D;
    // -D == 1 (mod 4), so b is odd; scan a <= sqrt(D/3).
    for (long long a = 1; 3 * a * a <= D; ++a) {
        for (long long b = -a; b <= a; ++b) {
            if (((b % 2) + 2) % 2 != 1) continue;
            long long num = b * b + D;
            if (num % (4 * a) != 0) continue;
            long long c = num / (4 * a);
            if (c < a) continue;
            if ((b == -a || a == c) && b < 0) continue;
            if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
            cg.forms.push_back({a, b, c});
        }
    }
    return cg;
}

long long dirichlet_class_number(long long D) {
    require_fundamental(D);
    if (D <= 4)
        throw std::domain_error("dirichlet_class_number: needs D > 4 (w = 2)");
    long long s = 0;
    for (long long n = 1; n < D; ++n) s += kronecker(-D, n) * n;
    if (s < 0) s = -s;
    if (s % D != 0)
        throw std::logic_error("dirichlet_class_number: character sum not divisible by D");
    return s / D;
}

bool class_number_bound_check(const ClassGroupData& cg) {
    double d = (double)cg.D;
    double bound = std::sqrt(d) * (std::log(d) + 2.0) / M_PI;
    return (double)cg.class_number() <= bound;
}

}  // namespace pmod4

#include "pmod4/kronecker.hpp"

#include <stdexcept>
#include <utility>

namespace pmod4 {

int kronecker(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    // (a/2) factors
    int twos = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++twos;
    }
    if (twos > 0) {
        if (a % 2 == 0) return 0;
        if (twos % 2 == 1) {
            long long am8 = ((a % 8) + 8) % 8;
            if (am8 == 3 || am8 == 5) result = -result;
        }
    }
    // Jacobi symbol (a/n) with n odd positive; reciprocity with sign flips.
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        int v = 0;
        while (a % 2 == 0) {
            a /= 2;
            ++v;
        }
        if (v % 2 == 1) {
            long long nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) result = -result;
        }
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        std::swap(a, n);
        a %= n;
    }
    return (n == 1) ? result : 0;
}

int chi(long long d, long long n) {
    long long r = ((d % 4) + 4) % 4;
    if (r != 0 && r != 1)
        throw std::domain_error("chi: d must be 0 or 1 mod 4");
    return kronecker(d, n);
}

}  // namespace pmod4

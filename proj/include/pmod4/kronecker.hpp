#ifndef PMOD4_KRONECKER_HPP
#define PMOD4_KRONECKER_HPP

namespace pmod4 {

// Kronecker symbol (a/n), the standard extension of the Jacobi symbol to all
// integer pairs.  Conventions: (a/0) = 1 iff a = +-1, (a/-1) = -1 iff a < 0,
// (a/2) = 0 for even a and +-1 by a mod 8 otherwise.
int kronecker(long long a, long long n);

// chi(d, n) = (d/n), the discriminant-d Kronecker character.  Requires
// d == 0 or 1 (mod 4); fundamental-discriminant shape is not enforced.
int chi(long long d, long long n);

}  // namespace pmod4

#endif

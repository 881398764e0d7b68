#pragma once

#include <gmpxx.h>

namespace normord {

/// C(n, k); zero when k < 0 or k > n (n >= 0).
mpz_class binomial(long n, long k);
mpz_class factorial(long n);
/// Integer power with 0^0 = 1.
mpz_class ipow(long base, unsigned long e);

// Reference triangles from their standard recurrences; zero outside the triangle.

/// Stirling numbers of the second kind S(n, k).
mpz_class stirling2(int n, int k);
/// Unsigned Stirling numbers of the first kind |s(n, k)|.
mpz_class stirling1(int n, int k);
/// Unsigned Lah numbers L(n, k).
mpz_class lah(int n, int k);
/// Eulerian numbers A(r, d): permutations of 1..r with d descents; A(0, 0) = 1.
mpz_class eulerian(int r, int d);
/// Rook numbers r_k of the jump board with heights (r(n-1), ..., r, 0),
/// via adjoining one column at a time.
mpz_class jumpRookNumber(int n, int r, int k);

}  // namespace normord

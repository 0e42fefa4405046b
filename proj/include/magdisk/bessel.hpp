#pragma once

namespace magdisk {

// J_n'(x) for integer n >= 0.
double bessel_j_prime(int n, double x);

// Smallest positive zero j'_{n,1} of J_n'. For n = 0 this is the first
// non-trivial zero (3.8317...).
double bessel_j_prime_zero(int n);

}  // namespace magdisk

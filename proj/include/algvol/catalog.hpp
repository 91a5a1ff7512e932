#ifndef ALGVOL_CATALOG_HPP
#define ALGVOL_CATALOG_HPP

#include "algvol/number_field.hpp"

namespace algvol {

// x^2 - D for squarefree D >= 2.
FieldPtr catalog_quadratic(long d);

// Maximal real subfield of the n-th cyclotomic field: the minimal
// polynomial of 2cos(2*pi/n), degree phi(n)/2.  Requires n >= 5, n != 6.
FieldPtr catalog_real_cyclotomic(long n);

// Totally real abelian field of odd prime degree q: the degree-q subfield
// of the ell-th cyclotomic field for the smallest prime ell = 1 (mod 2q),
// computed via Gaussian periods.  Coincides with the real cyclotomic field
// when ell = 2q + 1 is prime.
FieldPtr abelian_field_of_prime_degree(long q);
// The conductor ell used by the construction above.
long abelian_field_conductor(long q);

// n-th cyclotomic polynomial by repeated exact division of x^n - 1.
Polynomial cyclotomic(long n);

long euler_phi(long n);
bool is_prime(long n);

} // namespace algvol

#endif

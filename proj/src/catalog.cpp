#include "algvol/catalog.hpp"

#include "algvol/errors.hpp"

#include <map>

namespace algvol {

bool is_prime(long n)
{
    if (n < 2)
        return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return false;
    return true;
}

long euler_phi(long n)
{
    if (n < 1)
        throw input_error("euler_phi of a nonpositive integer");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0)
                m /= p;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

Polynomial cyclotomic(long n)
{
    if (n < 1 || n > 20000)
        throw input_error("cyclotomic index out of range");
    static const Polynomial x = Polynomial::variable();
    Polynomial xn_minus_1 = Polynomial::monomial(static_cast<int>(n), Rational(1))
        - Polynomial::constant(Rational(1));
    if (n == 1)
        return xn_minus_1;
    Polynomial q = xn_minus_1;
    for (long d = 1; d < n; ++d) {
        if (n % d == 0)
            q = q.exact_divide(cyclotomic(d));
    }
    return q;
}

FieldPtr catalog_quadratic(long d)
{
    if (d < 2)
        throw input_error("quadratic catalog needs a squarefree integer D >= 2");
    for (long j = 2; j * j <= d; ++j)
        if (d % (j * j) == 0)
            throw input_error("quadratic catalog needs squarefree D");
    Polynomial m({Rational(-d), Rational(0), Rational(1)});
    return NumberField::make(m, true, {.galois = true, .irreducible = true});
}

namespace {

// Rewrite a palindromic Phi_n(x) = x^h * psi(x + 1/x) in the Chebyshev-like
// basis C_0 = 2, C_1 = y, C_k = y*C_{k-1} - C_{k-2} (C_k(y) = x^k + x^-k).
Polynomial fold_palindrome(const Polynomial& phi)
{
    int deg = phi.degree();
    if (deg % 2 != 0)
        throw computation_error("cannot fold a palindrome of odd degree");
    int h = deg / 2;
    for (int i = 0; i <= deg; ++i)
        if (!(phi.coeff(i) == phi.coeff(deg - i)))
            throw computation_error("polynomial is not palindromic");
    Polynomial psi = Polynomial::constant(phi.coeff(h));
    Polynomial c_prev = Polynomial::constant(Rational(2)); // C_0
    Polynomial c_cur = Polynomial::variable();             // C_1
    for (int k = 1; k <= h; ++k) {
        psi = psi + phi.coeff(h + k) * c_cur;
        Polynomial c_next = Polynomial::variable() * c_cur - c_prev;
        c_prev = c_cur;
        c_cur = c_next;
    }
    return psi;
}

} // namespace

FieldPtr catalog_real_cyclotomic(long n)
{
    if (n < 5 || n == 6)
        throw input_error("real cyclotomic catalog needs n >= 5, n != 6");
    Polynomial psi = fold_palindrome(cyclotomic(n));
    return NumberField::make(psi, true, {.galois = true, .irreducible = true});
}

long abelian_field_conductor(long q)
{
    if (q < 3 || !is_prime(q))
        throw input_error("abelian catalog field needs an odd prime degree");
    for (long m = 1; m <= 5000; ++m) {
        long ell = 2 * q * m + 1;
        if (is_prime(ell))
            return ell;
    }
    throw computation_error("no usable conductor found");
}

FieldPtr abelian_field_of_prime_degree(long q)
{
    long ell = abelian_field_conductor(q);
    if (ell == 2 * q + 1)
        return catalog_real_cyclotomic(ell);

    // Degree-q subfield of Q(zeta_ell) via the Gaussian period
    // eta = sum of zeta^h over the index-q subgroup of (Z/ell)*.
    long g = 2;
    auto pow_mod = [&](long b, long e) {
        long r = 1 % ell;
        b %= ell;
        while (e) {
            if (e & 1)
                r = r * b % ell;
            b = b * b % ell;
            e >>= 1;
        }
        return r;
    };
    auto is_primitive_root = [&](long c) {
        long order = ell - 1;
        for (long p = 2; p * p <= order; ++p) {
            if (order % p == 0) {
                if (pow_mod(c, order / p) == 1)
                    return false;
                while (order % p == 0)
                    order /= p;
            }
        }
        if (order > 1 && pow_mod(c, (ell - 1) / order) == 1)
            return false;
        return true;
    };
    while (!is_primitive_root(g))
        ++g;

    FieldPtr cyclo = NumberField::make(cyclotomic(ell), false,
                                       {.galois = true, .irreducible = true});
    FieldElement zeta = FieldElement::generator(cyclo);
    FieldElement eta = FieldElement::zero(cyclo);
    long step = pow_mod(g, q);
    long h = 1;
    for (long j = 0; j < (ell - 1) / q; ++j) {
        eta = eta + zeta.pow(h);
        h = h * step % ell;
    }
    Polynomial m = min_poly_of_element(eta);
    if (m.degree() != static_cast<int>(q))
        throw computation_error("Gaussian period has unexpected degree");
    return NumberField::make(m, true, {.galois = true, .irreducible = true});
}

} // namespace algvol

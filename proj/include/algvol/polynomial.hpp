#ifndef ALGVOL_POLYNOMIAL_HPP
#define ALGVOL_POLYNOMIAL_HPP

#include "algvol/interval.hpp"
#include "algvol/rational.hpp"

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace algvol {

// Dense univariate polynomial with exact rational coefficients.
// Coefficient i is the coefficient of x^i; the representation is kept
// normalized (no trailing zero coefficients), so the zero polynomial has an
// empty coefficient vector and degree() == -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const Rational& c);
    static Polynomial variable(); // x
    static Polynomial monomial(int deg, const Rational& c);
    static Polynomial from_int_coeffs(std::initializer_list<long> coeffs);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_monic() const { return !is_zero() && leading() == 1; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

    // Exact division with remainder; q must be nonzero.
    std::pair<Polynomial, Polynomial> divrem(const Polynomial& q) const;
    // Division known to be exact; throws computation_error on nonzero remainder.
    Polynomial exact_divide(const Polynomial& q) const;

    Polynomial derivative() const;
    // The antiderivative M with M(0) = 0.
    Polynomial antiderivative_zero() const;

    Rational eval(const Rational& x) const;
    double eval_double(double x) const;
    Interval eval_interval(const Interval& x) const;

    Polynomial monic() const; // p / leading; zero stays zero

    // p = content * primitive where primitive has coprime integer
    // coefficients and positive leading coefficient.  Zero -> (0, 0).
    std::pair<Rational, Polynomial> content_primitive() const;
    // Shorthand for content_primitive().second.
    Polynomial primitive_integer() const;

    // p(x - shift)
    Polynomial translate(const Rational& shift) const;
    // k^deg * p(x/k), the minimal-polynomial scaling law; k != 0.
    Polynomial scale_root(const Rational& k) const;

    std::string str() const; // canonical symbolic form, variable 'x'

private:
    void normalize();
    std::vector<Rational> c_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

// Monic gcd; inputs not both zero.
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

// p / gcd(p, p'), monic; p nonzero.
Polynomial squarefree_part(const Polynomial& p);

// Sylvester-determinant resultant via a remainder sequence with content
// extraction (no determinant expansion); p, q nonzero.
Rational resultant(const Polynomial& p, const Polynomial& q);

// Pseudo-remainder of |lc(q)|^(deg p - deg q + 1) * p by q.  Both inputs
// with integer coefficients give an integer-coefficient result.
Polynomial pseudo_rem_abs(const Polynomial& p, const Polynomial& q);

// Grammar accepted repo-wide: comma-separated coefficients low-to-high
// ("-2,0,1") or symbolic ("x^2-2", "1/3*x^3-2*x", 'x' or 't' as variable).
Polynomial parse_polynomial(std::string_view text);

} // namespace algvol

#endif

#ifndef ALGVOL_ALGEBRAIC_HPP
#define ALGVOL_ALGEBRAIC_HPP

#include "algvol/interval.hpp"
#include "algvol/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace algvol {

// A real algebraic number: a squarefree integer polynomial with content 1
// and positive leading coefficient, plus a rational interval certified (by
// Sturm count) to contain exactly one of its real roots.  The polynomial
// is minimal for that root on every construction path in this repo.
class AlgebraicNumber {
public:
    AlgebraicNumber(); // zero

    static AlgebraicNumber from_rational(const Rational& r);
    // Validates that iv isolates exactly one real root of p; p is brought
    // to the canonical integer form.
    static AlgebraicNumber root_in(const Polynomial& p, const Interval& iv);
    // Same contract, but the caller attests that p is already squarefree;
    // skips the gcd normalization, which matters for high-degree
    // polynomials with large coefficients.
    static AlgebraicNumber root_in_squarefree(const Polynomial& p, const Interval& iv);
    // All real roots, ascending.
    static std::vector<AlgebraicNumber> real_roots_of(const Polynomial& p);

    const Polynomial& min_poly() const { return poly_; }
    const Interval& isolating() const { return iso_; }
    int degree() const { return poly_.degree(); }

    bool is_rational() const { return degree() == 1; }
    Rational as_rational() const; // degree 1 only

    AlgebraicNumber refined(const Rational& width) const;

    // Exact affine maps: value + r and value * r.
    AlgebraicNumber plus_rational(const Rational& r) const;
    AlgebraicNumber times_rational(const Rational& r) const;

    bool equals(const AlgebraicNumber& o) const;
    // -1, 0, +1 comparisons, decided exactly.
    int compare(const AlgebraicNumber& o) const;
    int compare_rational(const Rational& r) const;

    double to_double() const;
    std::string decimal(int digits) const;

private:
    static AlgebraicNumber checked(Polynomial poly, const Interval& iv);
    Polynomial poly_;
    Interval iso_;
};

} // namespace algvol

#endif

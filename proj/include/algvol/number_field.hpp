#ifndef ALGVOL_NUMBER_FIELD_HPP
#define ALGVOL_NUMBER_FIELD_HPP

#include "algvol/algebraic.hpp"
#include "algvol/interval.hpp"
#include "algvol/modular.hpp"
#include "algvol/polynomial.hpp"

#include <memory>
#include <mutex>
#include <vector>

namespace algvol {

struct FieldAttestation {
    bool galois = false;
    bool irreducible = false; // construction guarantees irreducibility
};

// K = Q[x]/(m) for a monic squarefree m.  Immutable after construction;
// shared freely across threads.
class NumberField {
public:
    using Attestation = FieldAttestation;

    // Validates monic, degree >= 1, squarefree.  Runs the Sturm count for
    // totally_real and (unless attested) the modular irreducibility probe.
    static std::shared_ptr<const NumberField> make(const Polynomial& m,
                                                   bool require_totally_real,
                                                   Attestation att = Attestation());

    const Polynomial& defining_poly() const { return m_; }
    int degree() const { return degree_; }
    bool totally_real() const { return static_cast<int>(real_roots().size()) == degree_; }
    bool galois_attested() const { return galois_attested_; }
    bool irreducibility_proved() const { return irreducible_proved_; }
    // Isolating intervals for the real roots of m, ascending.  Computed on
    // first use (synchronized, behaviorally a pure function of m).
    const std::vector<Interval>& real_roots() const;

    // Reduce a coefficient vector of length <= 2d-1 modulo m.
    std::vector<Rational> reduce(std::vector<Rational> v) const;

private:
    NumberField() = default;
    Polynomial m_;
    int degree_ = 0;
    bool galois_attested_ = false;
    bool irreducible_proved_ = false;
    mutable std::once_flag roots_once_;
    mutable std::vector<Interval> real_roots_;
    std::vector<std::vector<Rational>> power_table_; // x^d .. x^(2d-2) mod m
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Element of K in the power basis 1, x, ..., x^(d-1).
class FieldElement {
public:
    FieldElement(FieldPtr field, std::vector<Rational> coords);

    static FieldElement zero(FieldPtr field);
    static FieldElement constant(FieldPtr field, const Rational& c);
    static FieldElement generator(FieldPtr field);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }
    bool is_zero() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator*(const Rational& c) const;
    FieldElement pow(long e) const; // e >= 0
    bool operator==(const FieldElement& o) const;

private:
    FieldPtr field_;
    std::vector<Rational> coords_;
};

// p evaluated at the element (Horner).
FieldElement eval_poly_at(const Polynomial& p, const FieldElement& a);

// Monic rational polynomial of least degree annihilating a; its degree
// divides d, and it is irreducible whenever the defining polynomial is.
Polynomial min_poly_of_element(const FieldElement& a);

bool is_primitive(const FieldElement& a);

// Characteristic polynomial of multiplication by a: the monic degree-d
// polynomial whose roots are the images of a under all embeddings.  For
// a = g(x) this equals Res_y(m(y), t - g(y)) up to the monic convention.
Polynomial charpoly_of_element(const FieldElement& a);

// Lemma-style certificate: column n holds the coordinates of M(a)^n with
// respect to the basis 1, a, ..., a^(d-1), where M is the antiderivative
// of a's minimal polynomial with M(0) = 0.
struct CertificateMatrix {
    std::vector<std::vector<Rational>> columns;
    Rational det;
};

CertificateMatrix certificate_det(const FieldElement& alpha); // alpha primitive

// d intervals of width <= precision, the i-th containing the image of a
// under the embedding sending the generator to the i-th real root of the
// defining polynomial (ascending).  Field must be totally real.
std::vector<Interval> numeric_embeddings(const FieldElement& a, const Rational& precision);

// Exact rational Gaussian elimination determinant of a square matrix
// given as columns.
Rational determinant(std::vector<std::vector<Rational>> columns);

} // namespace algvol

#endif

#ifndef ALGVOL_VOLUME_HPP
#define ALGVOL_VOLUME_HPP

#include "algvol/algebraic.hpp"
#include "algvol/number_field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace algvol {

enum class Normalization { raw_integral, geometric };

struct ConstructionInput {
    FieldPtr field;
    FieldElement alpha;
    std::optional<long> t0;             // defaulted by choose_t0 when absent
    long d0 = 1;                        // polarization degree
    Normalization normalization = Normalization::raw_integral;
};

struct VolumeReport {
    // input echo
    Polynomial field_poly;
    std::vector<Rational> alpha_coords;
    long t0 = 0; // effective integer slice bound (input or chosen)
    long d0 = 1;
    Normalization normalization = Normalization::raw_integral;

    // canonical ray data actually integrated (gamma = gcd of the
    // coordinate content with t0; volumes are invariant under the
    // simultaneous scaling (alpha, t0) -> (k*alpha, k*t0))
    Rational canonical_scale;           // gamma
    Rational canonical_t0;              // t0 / gamma, a positive integer
    Polynomial m_alpha;                 // minimal polynomial of alpha/gamma
    Polynomial big_m_alpha;             // antiderivative with M(0) = 0
    AlgebraicNumber beta;               // largest root of m_alpha

    AlgebraicNumber volume;
    int volume_degree = 0;
    int ambient_dimension = 0;          // d + 1
    Rational normalization_constant;    // c
    std::string numeric_value;
    Rational numeric_error_bound;

    bool degree_equals_field_degree = false;
    bool galois_attested = false;
    bool irreducibility_proved = false;
    std::vector<std::string> warnings;
};

struct SearchStats {
    long candidates = 0;
    long skipped_content = 0;
    long rejected_nonprimitive = 0;
    long rejected_zero_certificate = 0;
};

struct SearchResult {
    FieldElement alpha;
    SearchStats stats;
};

struct OperandSummary {
    AlgebraicNumber volume;
    int ambient_dimension = 0;
    int volume_degree = 0;
};

struct ProductReport {
    OperandSummary left, right;
    AlgebraicNumber volume;
    int volume_degree = 0;
    int ambient_dimension = 0;
    std::string numeric_value;
    // filled by pq_demo
    std::optional<long> conductor_left, conductor_right;
    std::vector<VolumeReport> operand_reports;
};

// m_alpha, the volume polynomial of the slice t*L0 - L (up to the rational
// normalization d0*d!): requires a primitive alpha in a totally real field.
Polynomial volume_polynomial(const FieldElement& alpha);

// Largest real root of m_alpha as an algebraic number.
AlgebraicNumber nef_threshold(const FieldElement& alpha);

// Smallest positive integer t0 with t0 > beta and -t0 below the smallest
// real root, certified by Sturm counts and sign evaluations.
long choose_t0(const FieldElement& alpha);

VolumeReport cutkosky_volume(const ConstructionInput& input, int digits = 6);

// Exact equality of the raw volumes of (alpha, t0) and (k*alpha, k*t0).
bool verify_scaling(const FieldElement& alpha, long k);

// Enumerates integer coordinate vectors by max-norm shell, each component
// running through 0, 1, -1, 2, -2, ...; skips content > 1; returns the
// first alpha that is primitive with a nonzero certificate determinant.
SearchResult primitive_search(const FieldPtr& field, long max_norm_bound);

ProductReport kunneth_product(const OperandSummary& a, const OperandSummary& b,
                              int digits = 6);

// Degree-pq volume on a (p+q+2)-dimensional product, from abelian fields
// of degrees p and q.  Requires odd primes p < q with p not dividing q-1.
ProductReport pq_demo(long p, long q, int digits = 6);

} // namespace algvol

#endif

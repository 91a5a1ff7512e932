#include "algvol/volume.hpp"

#include "algvol/catalog.hpp"
#include "algvol/combine.hpp"
#include "algvol/errors.hpp"
#include "algvol/roots.hpp"

#include <numeric>

namespace algvol {

namespace {

void require_pipeline_preconditions(const FieldElement& alpha)
{
    if (!alpha.field()->totally_real())
        throw input_error("construction requires a totally real field");
}

Rational factorial(long n)
{
    Rational f(1);
    for (long i = 2; i <= n; ++i)
        f *= Rational(i);
    return f;
}

} // namespace

Polynomial volume_polynomial(const FieldElement& alpha)
{
    require_pipeline_preconditions(alpha);
    Polynomial m = min_poly_of_element(alpha);
    if (m.degree() != alpha.field()->degree())
        throw input_error("alpha is not a primitive element");
    return m;
}

AlgebraicNumber nef_threshold(const FieldElement& alpha)
{
    Polynomial m = volume_polynomial(alpha);
    std::vector<AlgebraicNumber> roots = AlgebraicNumber::real_roots_of(m);
    if (roots.empty())
        throw computation_error("minimal polynomial has no real root");
    return roots.back();
}

long choose_t0(const FieldElement& alpha)
{
    Polynomial m = volume_polynomial(alpha);
    RootCounter rc(m);
    for (long t0 = 1;; ++t0) {
        Rational t(t0);
        bool above = rc.count_above(t) == 0 && sgn(m.eval(t)) > 0;
        bool below = rc.count_below(-t) == 0 && sgn(m.eval(-t)) != 0;
        if (above && below)
            return t0;
        if (t0 > 1000000)
            throw computation_error("no valid slice bound found");
    }
}

namespace {

void validate_t0(const Polynomial& m, long t0)
{
    if (t0 < 1)
        throw input_error("t0 must be a positive integer");
    RootCounter rc(m);
    Rational t(t0);
    if (rc.count_above(t) != 0 || !(sgn(m.eval(t)) > 0))
        throw input_error("t0 must exceed the nef threshold");
}

} // namespace

VolumeReport cutkosky_volume(const ConstructionInput& input, int digits)
{
    const FieldElement& alpha_in = input.alpha;
    require_pipeline_preconditions(alpha_in);
    if (input.d0 < 1)
        throw input_error("d0 must be a positive integer");
    if (alpha_in.is_zero())
        throw input_error("alpha must be nonzero");

    Polynomial m_in = volume_polynomial(alpha_in); // also checks primitivity
    long t0 = input.t0 ? *input.t0 : choose_t0(alpha_in);
    validate_t0(m_in, t0);

    const NumberField& field = *alpha_in.field();
    int d = field.degree();

    // canonical representative of the scaling ray (alpha, t0); raw volumes
    // are invariant under (alpha, t0) -> (k*alpha, k*t0)
    Rational content = rational_content(alpha_in.coords());
    Rational gamma = rational_gcd(content, Rational(t0));
    FieldElement alpha = alpha_in * (1 / gamma);
    Rational t0_can = Rational(t0) / gamma; // a positive integer by construction

    Polynomial m = gamma == 1 ? m_in : min_poly_of_element(alpha);
    Polynomial big_m = m.antiderivative_zero();

    std::vector<AlgebraicNumber> roots = AlgebraicNumber::real_roots_of(m);
    AlgebraicNumber beta = roots.back();

    Rational c = input.normalization == Normalization::raw_integral
        ? Rational(1)
        : factorial(d + 1) * Rational(input.d0) / (2 * t0_can);

    // V = c * (M(t0) - M(beta)) as an element of Q[y]/(m)
    FieldPtr slice_field = NumberField::make(
        m, false, {.galois = field.galois_attested(),
                   .irreducible = field.irreducibility_proved()});
    FieldElement y = FieldElement::generator(slice_field);
    FieldElement big_m_at_y = eval_poly_at(big_m, y);
    Rational big_m_at_t0 = big_m.eval(t0_can);
    FieldElement value_elem =
        (FieldElement::constant(slice_field, big_m_at_t0) - big_m_at_y) * c;

    // resultant route (characteristic polynomial of the multiplication
    // operator equals Res_y(m(y), x - c*(M(t0) - M(y))) for monic m): fast
    // pre-filter and consistency check
    Polynomial annihilator = charpoly_of_element(value_elem);
    Polynomial ann_squarefree = squarefree_part(annihilator);
    // authoritative linear-algebra recomputation inside Q[y]/(m)
    Polynomial min_v = min_poly_of_element(value_elem);
    if (!(ann_squarefree == min_v))
        throw computation_error(
            "volume annihilator and minimal polynomial disagree");

    // isolate the numeric value among the roots of min_v
    std::vector<Interval> candidates = isolate_real_roots(min_v);
    AlgebraicNumber beta_ref = beta;
    Interval selected;
    bool found = false;
    Rational w(1, 1024);
    for (int round = 0; round < 256 && !found; ++round) {
        Interval enc =
            c * (Interval::point(big_m_at_t0) - big_m.eval_interval(beta_ref.isolating()));
        Rational target = enc.width() > 0 ? enc.width() : w;
        size_t hits = 0, idx = 0;
        for (size_t i = 0; i < candidates.size(); ++i) {
            if (candidates[i].width() > target && !candidates[i].is_point())
                candidates[i] = refine_root(min_v, candidates[i], target);
            if (overlaps(candidates[i], enc)) {
                ++hits;
                idx = i;
            }
        }
        if (hits == 1) {
            selected = candidates[idx];
            found = true;
        } else {
            beta_ref = beta_ref.refined(w);
            w /= 64;
        }
    }
    if (!found)
        throw computation_error("volume factor selection did not converge");

    AlgebraicNumber volume = AlgebraicNumber::root_in(min_v, selected);
    if (!field.irreducibility_proved() && volume.degree() > 1) {
        // an unproved defining polynomial may be secretly reducible, in
        // which case the in-algebra polynomial can properly contain the
        // minimal one; at least rational values are recoverable exactly
        Interval probe = volume.refined(pow10(-30)).isolating();
        Rational candidate = simplest_rational_in(probe.lo, probe.hi);
        if (min_v.eval(candidate) == 0 && probe.contains(candidate))
            volume = AlgebraicNumber::from_rational(candidate);
    }

    VolumeReport report;
    report.field_poly = field.defining_poly();
    report.alpha_coords = alpha_in.coords();
    report.t0 = t0;
    report.d0 = input.d0;
    report.normalization = input.normalization;
    report.canonical_scale = gamma;
    report.canonical_t0 = t0_can;
    report.m_alpha = m;
    report.big_m_alpha = big_m;
    report.beta = beta;
    report.volume = volume;
    report.volume_degree = volume.degree();
    report.ambient_dimension = d + 1;
    report.normalization_constant = c;
    report.numeric_value = volume.decimal(digits);
    report.numeric_error_bound = pow10(-digits); // interval width plus rounding
    report.degree_equals_field_degree = volume.degree() == d;
    report.galois_attested = field.galois_attested();
    report.irreducibility_proved = field.irreducibility_proved();
    if (!report.irreducibility_proved)
        report.warnings.push_back("field irreducibility unproved; degrees are relative to the given presentation");
    if (!report.galois_attested)
        report.warnings.push_back("field not attested Galois; the volume degree may fall below the field degree");
    return report;
}

bool verify_scaling(const FieldElement& alpha, long k)
{
    if (k < 1)
        throw input_error("scaling factor must be a positive integer");
    ConstructionInput base{alpha.field(), alpha, std::nullopt, 1,
                           Normalization::raw_integral};
    VolumeReport v1 = cutkosky_volume(base);
    ConstructionInput scaled{alpha.field(), alpha * Rational(k),
                             std::optional<long>(k * v1.t0), 1,
                             Normalization::raw_integral};
    VolumeReport v2 = cutkosky_volume(scaled);
    return v1.volume.equals(v2.volume);
}

namespace {

// Per-component candidate values 0, 1, -1, 2, -2, ..., bound, -bound.
bool next_vector(std::vector<long>& idx, std::vector<long>& vec, long n_values)
{
    size_t d = idx.size();
    for (size_t pos = d; pos-- > 0;) {
        if (++idx[pos] < n_values) {
            for (size_t j = pos + 1; j < d; ++j)
                idx[j] = 0;
            for (size_t j = pos; j < d; ++j) {
                long i = idx[j];
                vec[j] = i == 0 ? 0 : (i % 2 == 1 ? (i + 1) / 2 : -(i / 2));
            }
            return true;
        }
    }
    return false;
}

long vector_content(const std::vector<long>& v)
{
    long g = 0;
    for (long x : v)
        g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

long max_norm(const std::vector<long>& v)
{
    long m = 0;
    for (long x : v)
        m = std::max(m, x < 0 ? -x : x);
    return m;
}

} // namespace

SearchResult primitive_search(const FieldPtr& field, long max_norm_bound)
{
    if (max_norm_bound < 1)
        throw input_error("search bound must be a positive integer");
    if (!field->totally_real())
        throw input_error("search requires a totally real field");
    size_t d = static_cast<size_t>(field->degree());
    SearchStats stats;
    for (long shell = 1; shell <= max_norm_bound; ++shell) {
        long n_values = 2 * shell + 1;
        std::vector<long> idx(d, 0), vec(d, 0);
        // walk the full cube in the 0, 1, -1, ... order, keep the shell
        do {
            if (max_norm(vec) != shell)
                continue;
            ++stats.candidates;
            if (vector_content(vec) != 1) {
                ++stats.skipped_content;
                continue;
            }
            std::vector<Rational> coords(d);
            for (size_t i = 0; i < d; ++i)
                coords[i] = Rational(vec[i]);
            FieldElement alpha(field, std::move(coords));
            if (!is_primitive(alpha)) {
                ++stats.rejected_nonprimitive;
                continue;
            }
            if (certificate_det(alpha).det == 0) {
                ++stats.rejected_zero_certificate;
                continue;
            }
            return SearchResult{alpha, stats};
        } while (next_vector(idx, vec, n_values));
    }
    throw computation_error(
        "primitive search exhausted: bound " + std::to_string(max_norm_bound)
        + ", candidates " + std::to_string(stats.candidates)
        + ", content-skipped " + std::to_string(stats.skipped_content)
        + ", non-primitive " + std::to_string(stats.rejected_nonprimitive)
        + ", zero certificate " + std::to_string(stats.rejected_zero_certificate));
}

ProductReport kunneth_product(const OperandSummary& a, const OperandSummary& b,
                              int digits)
{
    ProductReport report;
    report.left = a;
    report.right = b;
    report.volume = min_poly_combine(a.volume, b.volume, CombineOp::product);
    report.volume_degree = report.volume.degree();
    report.ambient_dimension = a.ambient_dimension + b.ambient_dimension;
    report.numeric_value = report.volume.decimal(digits);
    return report;
}

ProductReport pq_demo(long p, long q, int digits)
{
    if (!is_prime(p) || !is_prime(q) || p % 2 == 0 || q % 2 == 0)
        throw input_error("pq demo needs odd primes");
    if (!(p < q))
        throw input_error("pq demo needs p < q");
    if ((q - 1) % p == 0)
        throw input_error("pq demo needs p not dividing q - 1");

    ProductReport report;
    OperandSummary ops[2];
    long degrees[2] = {p, q};
    for (int side = 0; side < 2; ++side) {
        FieldPtr field = abelian_field_of_prime_degree(degrees[side]);
        SearchResult found = primitive_search(field, 3);
        ConstructionInput input{field, found.alpha, std::nullopt, 1,
                                Normalization::raw_integral};
        VolumeReport vr = cutkosky_volume(input, digits);
        if (vr.volume_degree != degrees[side])
            throw computation_error("pq demo produced a volume of unexpected degree");
        ops[side] = OperandSummary{vr.volume, vr.ambient_dimension, vr.volume_degree};
        report.operand_reports.push_back(std::move(vr));
    }
    report.conductor_left = abelian_field_conductor(p);
    report.conductor_right = abelian_field_conductor(q);

    ProductReport product = kunneth_product(ops[0], ops[1], digits);
    report.left = product.left;
    report.right = product.right;
    report.volume = product.volume;
    report.volume_degree = product.volume_degree;
    report.ambient_dimension = product.ambient_dimension;
    report.numeric_value = product.numeric_value;
    if (report.volume_degree != p * q)
        throw computation_error("pq demo volume degree is not p*q");
    if (report.ambient_dimension != p + q + 2)
        throw computation_error("pq demo dimension bookkeeping failed");
    return report;
}

} // namespace algvol

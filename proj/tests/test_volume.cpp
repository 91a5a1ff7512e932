#include "algvol/catalog.hpp"
#include "algvol/combine.hpp"
#include "algvol/errors.hpp"
#include "algvol/roots.hpp"
#include "algvol/volume.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace algvol;

namespace {

Polynomial poly(std::initializer_list<long> coeffs)
{
    return Polynomial::from_int_coeffs(coeffs);
}

FieldElement element(const FieldPtr& f, std::vector<Rational> coords)
{
    return FieldElement(f, std::move(coords));
}

ConstructionInput raw_input(const FieldPtr& f, FieldElement alpha,
                            std::optional<long> t0 = std::nullopt)
{
    return ConstructionInput{f, std::move(alpha), t0, 1, Normalization::raw_integral};
}

} // namespace

TEST_SUITE_BEGIN("volume");

TEST_CASE("volume polynomial")
{
    FieldPtr f = catalog_quadratic(2);
    CHECK(volume_polynomial(FieldElement::generator(f)) == poly({-2, 0, 1}));
    CHECK(volume_polynomial(FieldElement::generator(catalog_real_cyclotomic(7)))
          == poly({-1, -2, 1, 1}));
    CHECK_THROWS_AS(volume_polynomial(FieldElement::constant(f, Rational(3))), input_error);

    // scaling law: the minimal polynomial of k*alpha is k^d m(t/k)
    FieldElement gen = FieldElement::generator(f);
    for (long k : {2L, 3L, 5L}) {
        Polynomial scaled = volume_polynomial(gen * Rational(k));
        CHECK(scaled == poly({-2, 0, 1}).scale_root(Rational(k)));
    }
}

TEST_CASE("nef threshold")
{
    FieldPtr f = catalog_quadratic(2);
    AlgebraicNumber beta = nef_threshold(FieldElement::generator(f));
    CHECK(beta.min_poly() == poly({-2, 0, 1}));
    CHECK(beta.compare_rational(Rational(1)) == 1);
    CHECK(beta.compare_rational(Rational(2)) == -1);

    // alpha = -sqrt2 still has nef threshold +sqrt2
    AlgebraicNumber beta_neg = nef_threshold(-FieldElement::generator(f));
    CHECK(beta_neg.equals(beta));

    AlgebraicNumber beta7 = nef_threshold(FieldElement::generator(catalog_real_cyclotomic(7)));
    CHECK(beta7.decimal(5) == "1.24698");
}

TEST_CASE("choice of t0")
{
    FieldPtr f = catalog_quadratic(2);
    FieldElement gen = FieldElement::generator(f);
    CHECK(choose_t0(gen) == 2);
    CHECK(choose_t0(FieldElement::generator(catalog_real_cyclotomic(7))) == 2);
    CHECK(choose_t0(gen * Rational(3)) == 5); // beta = 3 sqrt 2 ~ 4.24
}

TEST_CASE("quadratic volume, the worked example")
{
    FieldPtr f = catalog_quadratic(2);
    VolumeReport r = cutkosky_volume(raw_input(f, FieldElement::generator(f), 2));
    CHECK(r.volume.min_poly() == poly({-16, 24, 9}));
    CHECK(r.numeric_value == "0.552285");
    CHECK(r.volume_degree == 2);
    CHECK(r.ambient_dimension == 3);
    CHECK(r.normalization_constant == Rational(1));
    CHECK(r.degree_equals_field_degree);
    CHECK(r.galois_attested);
    // numeric value lies in the isolating interval
    Rational mid = parse_rational(r.numeric_value);
    AlgebraicNumber refined = r.volume.refined(make_rational(1, 1000000000));
    CHECK(mid >= refined.isolating().lo - make_rational(1, 1000000));
    CHECK(mid <= refined.isolating().hi + make_rational(1, 1000000));
}

TEST_CASE("degree-1 fields flow through the pipeline")
{
    FieldPtr f = NumberField::make(poly({-2, 1}), true);
    VolumeReport r = cutkosky_volume(raw_input(f, FieldElement::constant(f, Rational(2)), 3));
    CHECK(r.volume.is_rational());
    CHECK(r.volume.as_rational() == make_rational(1, 2));
    CHECK(r.volume.min_poly() == poly({-1, 2}));
    CHECK(r.ambient_dimension == 2);
    CHECK(r.numeric_value == "0.500000");
}

TEST_CASE("scaled inputs give the identical algebraic number")
{
    FieldPtr f = catalog_quadratic(2);
    FieldElement gen = FieldElement::generator(f);
    VolumeReport base = cutkosky_volume(raw_input(f, gen, 2));
    VolumeReport doubled = cutkosky_volume(raw_input(f, gen * Rational(2), 4));
    CHECK(base.volume.equals(doubled.volume));
    CHECK(doubled.canonical_scale == Rational(2));
    CHECK(doubled.canonical_t0 == Rational(2));
    CHECK(doubled.m_alpha == base.m_alpha);
}

TEST_CASE("t0 validation")
{
    FieldPtr f = catalog_quadratic(2);
    FieldElement gen = FieldElement::generator(f);
    CHECK_THROWS_AS(cutkosky_volume(raw_input(f, gen, 1)), input_error);  // 1 < sqrt2
    CHECK_THROWS_AS(cutkosky_volume(raw_input(f, gen, -3)), input_error);
    CHECK_THROWS_AS(cutkosky_volume(raw_input(f, FieldElement::zero(f), 2)), input_error);
}

TEST_CASE("verify_scaling")
{
    FieldPtr f = catalog_quadratic(2);
    FieldElement gen = FieldElement::generator(f);
    CHECK(verify_scaling(gen, 1));
    CHECK(verify_scaling(gen, 2));
    CHECK(verify_scaling(FieldElement::generator(catalog_real_cyclotomic(7)), 3));

    // non-generator elements scale exactly as well
    FieldElement mixed(f, {Rational(1), Rational(-2)});
    CHECK(is_primitive(mixed));
    CHECK(verify_scaling(mixed, 2));
    CHECK(verify_scaling(mixed, 3));
    FieldPtr c7 = catalog_real_cyclotomic(7);
    FieldElement mixed7(c7, {Rational(0), Rational(1), Rational(1)});
    CHECK(is_primitive(mixed7));
    CHECK(verify_scaling(mixed7, 2));
}

TEST_CASE("a larger slice bound changes the value but not the degree")
{
    FieldPtr f = catalog_quadratic(2);
    FieldElement gen = FieldElement::generator(f);
    VolumeReport at2 = cutkosky_volume(raw_input(f, gen, 2));
    VolumeReport at3 = cutkosky_volume(raw_input(f, gen, 3));
    CHECK_FALSE(at2.volume.equals(at3.volume));
    CHECK(at3.volume_degree == 2);
    // integral from sqrt2 to 3 of (t^2 - 2) = 3 + 4 sqrt2 / 3
    CHECK(at3.numeric_value == "4.885618");
}

TEST_CASE("primitive search")
{
    FieldPtr f = catalog_quadratic(2);
    SearchResult found = primitive_search(f, 1);
    CHECK(found.alpha.coords() == std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(certificate_det(found.alpha).det == make_rational(-4, 3));

    FieldPtr q = NumberField::make(poly({-2, 1}), true);
    SearchResult one = primitive_search(q, 1);
    CHECK(one.alpha.coords() == std::vector<Rational>{Rational(1)});

    // every catalog field of degree <= 5 succeeds within bound 3
    for (FieldPtr field : {catalog_quadratic(2), catalog_quadratic(3),
                           catalog_real_cyclotomic(7), catalog_real_cyclotomic(15),
                           catalog_real_cyclotomic(11)}) {
        SearchResult r = primitive_search(field, 3);
        CHECK(is_primitive(r.alpha));
        CHECK(certificate_det(r.alpha).det != 0);
    }
}

TEST_CASE("search-produced volumes achieve the field degree")
{
    for (FieldPtr field : {catalog_quadratic(2), catalog_quadratic(3),
                           catalog_real_cyclotomic(7), catalog_real_cyclotomic(15),
                           catalog_real_cyclotomic(11)}) {
        SearchResult found = primitive_search(field, 3);
        VolumeReport r = cutkosky_volume(raw_input(field, found.alpha));
        CHECK(r.volume_degree == field->degree());
        CHECK(r.degree_equals_field_degree);
        CHECK(r.ambient_dimension == field->degree() + 1);
    }
}

TEST_CASE("integrand is positive strictly between beta and t0")
{
    FieldPtr f = catalog_real_cyclotomic(7);
    FieldElement gen = FieldElement::generator(f);
    VolumeReport r = cutkosky_volume(raw_input(f, gen));
    Rational lo = r.beta.isolating().hi, hi = r.canonical_t0;
    for (int i = 1; i <= 8; ++i) {
        Rational t = lo + (hi - lo) * Rational(i) / Rational(9);
        CHECK(sgn(r.m_alpha.eval(t)) > 0);
    }
}

TEST_CASE("the volume is a root of the annihilator within interval tolerance")
{
    FieldPtr f = catalog_quadratic(2);
    VolumeReport r = cutkosky_volume(raw_input(f, FieldElement::generator(f), 2));
    // Res_y(m(y), x - (M(t0) - M(y))) up to monic normalization is a power
    // of the volume's minimal polynomial; at the midpoint of the isolating
    // interval it is bounded by the interval evaluation
    AlgebraicNumber v = r.volume.refined(make_rational(1, 1 << 30));
    Interval image = r.volume.min_poly().eval_interval(v.isolating());
    Rational mid_val = abs(r.volume.min_poly().eval(v.isolating().mid()));
    Rational bound = abs(image.lo) > abs(image.hi) ? abs(image.lo) : abs(image.hi);
    CHECK(mid_val <= bound);
    CHECK(image.lo <= 0);
    CHECK(image.hi >= 0);
}

TEST_CASE("geometric and raw volumes differ by the stated factor")
{
    FieldPtr f = catalog_quadratic(2);
    FieldElement gen = FieldElement::generator(f);
    ConstructionInput raw = raw_input(f, gen, 2);
    ConstructionInput geo = raw;
    geo.normalization = Normalization::geometric;
    VolumeReport r_raw = cutkosky_volume(raw);
    VolumeReport r_geo = cutkosky_volume(geo);
    // c = (d+1)! * d0 / (2 t0) = 6/4 = 3/2
    CHECK(r_geo.normalization_constant == make_rational(3, 2));
    AlgebraicNumber scaled = r_raw.volume.times_rational(make_rational(3, 2));
    CHECK(scaled.equals(r_geo.volume));
    AlgebraicNumber via_combine = min_poly_combine(
        r_raw.volume, AlgebraicNumber::from_rational(make_rational(3, 2)),
        CombineOp::product);
    CHECK(via_combine.equals(r_geo.volume));
}

TEST_CASE("kunneth products")
{
    // rational times rational, with dimension bookkeeping
    OperandSummary a{AlgebraicNumber::from_rational(make_rational(1, 2)), 1, 1};
    OperandSummary b{AlgebraicNumber::from_rational(Rational(3)), 2, 1};
    ProductReport r = kunneth_product(a, b);
    CHECK(r.volume.as_rational() == make_rational(3, 2));
    CHECK(r.ambient_dimension == 3);
    CHECK(r.volume_degree == 1);

    // quadratic x cubic: coprime degrees multiply
    FieldPtr f2 = catalog_quadratic(2);
    FieldPtr f7 = catalog_real_cyclotomic(7);
    VolumeReport v2 = cutkosky_volume(raw_input(f2, FieldElement::generator(f2)));
    VolumeReport v3 = cutkosky_volume(raw_input(f7, FieldElement::generator(f7)));
    ProductReport pr = kunneth_product(
        OperandSummary{v2.volume, v2.ambient_dimension, v2.volume_degree},
        OperandSummary{v3.volume, v3.ambient_dimension, v3.volume_degree});
    CHECK(pr.volume_degree == 6);
    CHECK(pr.ambient_dimension == 7);

    // semigroup closure with the positive rationals
    ProductReport scaled = kunneth_product(
        OperandSummary{AlgebraicNumber::from_rational(make_rational(4, 3)), 2, 1},
        OperandSummary{v2.volume, v2.ambient_dimension, v2.volume_degree});
    CHECK(scaled.volume_degree == 2);
    CHECK(scaled.ambient_dimension == 5);
}

TEST_CASE("random primitive elements cross-check against a double quadrature")
{
    std::mt19937_64 rng(20240828);
    std::uniform_int_distribution<long> dist(-2, 2);
    for (FieldPtr f : {catalog_quadratic(2), catalog_quadratic(3),
                       catalog_real_cyclotomic(7), catalog_real_cyclotomic(15)}) {
        int done = 0;
        while (done < 5) {
            std::vector<Rational> coords(static_cast<size_t>(f->degree()));
            for (auto& c : coords)
                c = Rational(dist(rng));
            FieldElement alpha(f, std::move(coords));
            if (alpha.is_zero() || !is_primitive(alpha))
                continue;
            ++done;
            VolumeReport r = cutkosky_volume(raw_input(f, alpha));
            // independent double-precision midpoint quadrature of the
            // canonical integral
            double beta_lo = to_double(r.beta.isolating().lo) - 1e-9;
            double beta_hi = to_double(r.beta.isolating().hi) + 1e-9;
            double beta_d = beta_lo;
            {
                // bisect m on the beta bracket
                double lo = beta_lo, hi = beta_hi;
                for (int i = 0; i < 200; ++i) {
                    double mid = 0.5 * (lo + hi);
                    double flo = r.m_alpha.eval_double(lo);
                    double fm = r.m_alpha.eval_double(mid);
                    if ((flo <= 0) == (fm <= 0))
                        lo = mid;
                    else
                        hi = mid;
                }
                beta_d = 0.5 * (lo + hi);
            }
            double t0_d = to_double(r.canonical_t0);
            int n = 200000;
            double h = (t0_d - beta_d) / n;
            double sum = 0.0;
            for (int i = 0; i < n; ++i)
                sum += r.m_alpha.eval_double(beta_d + (i + 0.5) * h);
            double quad = sum * h;
            double exact = std::stod(r.volume.decimal(9));
            CHECK(std::fabs(exact - quad) < 1e-5 * std::max(1.0, std::fabs(exact)));
        }
    }
}

TEST_CASE("search bound validation")
{
    FieldPtr f = catalog_quadratic(2);
    CHECK_THROWS_AS(primitive_search(f, 0), input_error);
    CHECK_THROWS_AS(primitive_search(f, -2), input_error);
}

TEST_CASE("pq demo")
{
    ProductReport r = pq_demo(3, 5);
    CHECK(r.volume_degree == 15);
    CHECK(r.ambient_dimension == 10);
    REQUIRE(r.conductor_left.has_value());
    REQUIRE(r.conductor_right.has_value());
    CHECK(*r.conductor_left == 7);
    CHECK(*r.conductor_right == 11);

    CHECK_THROWS_AS(pq_demo(3, 7, 6), input_error);  // 3 | 6
    CHECK_THROWS_AS(pq_demo(5, 3, 6), input_error);  // p < q violated
    CHECK_THROWS_AS(pq_demo(2, 5, 6), input_error);  // even prime
    CHECK_THROWS_AS(pq_demo(3, 9, 6), input_error);  // 9 not prime
}

TEST_CASE("pq demo at degree 35")
{
    ProductReport r = pq_demo(5, 7);
    CHECK(r.volume_degree == 35);
    CHECK(r.ambient_dimension == 14);
    CHECK(*r.conductor_left == 11);
    CHECK(*r.conductor_right == 29);
}

TEST_CASE("combined product roots are products of operand roots")
{
    // every real root of the product's minimal polynomial matches some
    // product of operand roots, at low numeric precision
    FieldPtr f2 = catalog_quadratic(2);
    FieldPtr f7 = catalog_real_cyclotomic(7);
    VolumeReport v2 = cutkosky_volume(raw_input(f2, FieldElement::generator(f2)));
    VolumeReport v3 = cutkosky_volume(raw_input(f7, FieldElement::generator(f7)));
    ProductReport pr = kunneth_product(
        OperandSummary{v2.volume, v2.ambient_dimension, v2.volume_degree},
        OperandSummary{v3.volume, v3.ambient_dimension, v3.volume_degree});
    std::vector<double> left, right;
    for (const AlgebraicNumber& r : AlgebraicNumber::real_roots_of(v2.volume.min_poly()))
        left.push_back(r.to_double());
    for (const AlgebraicNumber& r : AlgebraicNumber::real_roots_of(v3.volume.min_poly()))
        right.push_back(r.to_double());
    for (const AlgebraicNumber& r :
         AlgebraicNumber::real_roots_of(pr.volume.min_poly())) {
        double value = r.to_double();
        bool matched = false;
        for (double x : left)
            for (double y : right)
                matched = matched || std::fabs(x * y - value) < 1e-6;
        CHECK(matched);
    }
}

TEST_SUITE_END();

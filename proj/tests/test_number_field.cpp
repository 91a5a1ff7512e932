#include "algvol/catalog.hpp"
#include "algvol/errors.hpp"
#include "algvol/modular.hpp"
#include "algvol/number_field.hpp"
#include "algvol/roots.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace algvol;

namespace {

Polynomial poly(std::initializer_list<long> coeffs)
{
    return Polynomial::from_int_coeffs(coeffs);
}

FieldElement element(const FieldPtr& f, std::initializer_list<long> coords)
{
    std::vector<Rational> v;
    for (long c : coords)
        v.emplace_back(c);
    return FieldElement(f, std::move(v));
}

} // namespace

TEST_SUITE_BEGIN("number_field");

TEST_CASE("make_field validation")
{
    FieldPtr f = NumberField::make(poly({-2, 0, 1}), true);
    CHECK(f->degree() == 2);
    CHECK(f->totally_real());
    CHECK(f->galois_attested());
    CHECK(f->irreducibility_proved());

    CHECK_THROWS_AS(NumberField::make(poly({1, 0, 1}), true), input_error);
    CHECK_THROWS_AS(NumberField::make(poly({-2, 0, 2}), false), input_error); // not monic
    CHECK_THROWS_AS(NumberField::make(poly({-2, 0, 1}) * poly({-2, 0, 1}), false),
                    input_error); // not squarefree

    FieldPtr cubic = NumberField::make(poly({-1, -2, 1, 1}), true);
    CHECK(cubic->degree() == 3);
    CHECK(cubic->totally_real());
    CHECK(cubic->real_roots().size() == 3);
}

TEST_CASE("element arithmetic in Q(sqrt 2)")
{
    FieldPtr f = NumberField::make(poly({-2, 0, 1}), true);
    FieldElement x = FieldElement::generator(f);
    CHECK((x * x).coords() == std::vector<Rational>{Rational(2), Rational(0)});
    CHECK(x.pow(3).coords() == std::vector<Rational>{Rational(0), Rational(2)});
    CHECK((x + (-x)).is_zero());
    CHECK((x - x).is_zero());
    CHECK(((x * x) - FieldElement::constant(f, Rational(2))).is_zero());
    CHECK_THROWS_AS(x.pow(-1), input_error);
    CHECK_THROWS_AS(Interval(Rational(2), Rational(1)), input_error);

    FieldPtr g = NumberField::make(poly({-3, 0, 1}), true);
    CHECK_THROWS_AS(x + FieldElement::generator(g), input_error);
}

TEST_CASE("minimal polynomials of elements")
{
    FieldPtr f = NumberField::make(poly({-2, 0, 1}), true);
    CHECK(min_poly_of_element(FieldElement::generator(f)) == poly({-2, 0, 1}));
    CHECK(min_poly_of_element(FieldElement::constant(f, Rational(5))) == poly({-5, 1}));

    // -4 sqrt(2) / 3 has minimal polynomial x^2 - 32/9
    FieldElement a(f, {Rational(0), make_rational(-4, 3)});
    Polynomial m = min_poly_of_element(a);
    CHECK(m == Polynomial({make_rational(-32, 9), Rational(0), Rational(1)}));
    // and evaluates to zero on the element
    CHECK(eval_poly_at(m, a).is_zero());
    CHECK(is_primitive(a));
    CHECK_FALSE(is_primitive(FieldElement::constant(f, Rational(7))));
}

TEST_CASE("minimal polynomial annihilates and divides the field degree")
{
    std::mt19937_64 rng(20240821);
    std::uniform_int_distribution<long> dist(-5, 5);
    for (FieldPtr f : {catalog_real_cyclotomic(7), catalog_real_cyclotomic(15)}) {
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<Rational> coords(static_cast<size_t>(f->degree()));
            for (auto& c : coords)
                c = Rational(dist(rng));
            FieldElement a(f, std::move(coords));
            Polynomial m = min_poly_of_element(a);
            CHECK(eval_poly_at(m, a).is_zero());
            CHECK(f->degree() % m.degree() == 0);
        }
    }
}

TEST_CASE("certificate determinant")
{
    FieldPtr f = NumberField::make(poly({-2, 0, 1}), true);
    FieldElement x = FieldElement::generator(f);
    CertificateMatrix cert = certificate_det(x);
    REQUIRE(cert.columns.size() == 2);
    CHECK(cert.columns[0] == std::vector<Rational>{Rational(1), Rational(0)});
    CHECK(cert.columns[1] == std::vector<Rational>{Rational(0), make_rational(-4, 3)});
    CHECK(cert.det == make_rational(-4, 3));

    // degree-1 fields: empty-product convention det = 1
    FieldPtr q = NumberField::make(poly({-2, 1}), true);
    CHECK(certificate_det(FieldElement::constant(q, Rational(9))).det == Rational(1));

    CHECK_THROWS_AS(certificate_det(FieldElement::constant(f, Rational(3))), input_error);
}

TEST_CASE("certificate nonzero iff antiderivative value is primitive")
{
    std::mt19937_64 rng(20240822);
    std::uniform_int_distribution<long> dist(-5, 5);
    for (FieldPtr f : {catalog_quadratic(2), catalog_quadratic(3),
                       catalog_real_cyclotomic(7), catalog_real_cyclotomic(15)}) {
        int tested = 0;
        while (tested < 100) {
            std::vector<Rational> coords(static_cast<size_t>(f->degree()));
            for (auto& c : coords)
                c = Rational(dist(rng));
            FieldElement alpha(f, std::move(coords));
            if (!is_primitive(alpha))
                continue;
            ++tested;
            Polynomial m = min_poly_of_element(alpha);
            FieldElement w = eval_poly_at(m.antiderivative_zero(), alpha);
            bool det_nonzero = certificate_det(alpha).det != 0;
            bool w_primitive = is_primitive(w);
            CHECK(det_nonzero == w_primitive);
        }
    }
}

TEST_CASE("catalog fields")
{
    CHECK(catalog_quadratic(2)->defining_poly() == poly({-2, 0, 1}));
    CHECK_THROWS_AS(catalog_quadratic(4), input_error);  // not squarefree
    CHECK_THROWS_AS(catalog_quadratic(12), input_error); // 4 | 12
    CHECK_THROWS_AS(catalog_quadratic(1), input_error);

    FieldPtr c7 = catalog_real_cyclotomic(7);
    CHECK(c7->defining_poly() == poly({-1, -2, 1, 1}));
    CHECK(c7->degree() == 3);
    CHECK(c7->galois_attested());

    FieldPtr c15 = catalog_real_cyclotomic(15);
    CHECK(c15->defining_poly() == poly({1, 4, -4, -1, 1}));
    CHECK(c15->degree() == 4);

    // 2 cos(2 pi / n) satisfies the defining polynomial, numerically
    for (long n : {7L, 15L, 11L, 8L, 12L}) {
        FieldPtr f = catalog_real_cyclotomic(n);
        double root = 2.0 * std::cos(2.0 * 3.14159265358979323846 / static_cast<double>(n));
        CHECK(std::fabs(f->defining_poly().eval_double(root)) < 1e-9);
        CHECK(f->degree() == euler_phi(n) / 2);
        CHECK(static_cast<long>(f->real_roots().size()) == f->degree());
    }
    CHECK(catalog_real_cyclotomic(8)->defining_poly() == poly({-2, 0, 1}));
    CHECK_THROWS_AS(catalog_real_cyclotomic(6), input_error);
    CHECK_THROWS_AS(catalog_real_cyclotomic(4), input_error);
}

TEST_CASE("abelian fields of prime degree")
{
    CHECK(abelian_field_conductor(3) == 7);
    CHECK(abelian_field_conductor(5) == 11);
    CHECK(abelian_field_conductor(7) == 29);
    CHECK(abelian_field_of_prime_degree(3)->defining_poly()
          == catalog_real_cyclotomic(7)->defining_poly());

    FieldPtr deg7 = abelian_field_of_prime_degree(7);
    CHECK(deg7->degree() == 7);
    CHECK(deg7->totally_real());
    CHECK(deg7->galois_attested());
    CHECK_THROWS_AS(abelian_field_of_prime_degree(4), input_error);
}

TEST_CASE("numeric embeddings")
{
    FieldPtr f = NumberField::make(poly({-2, 0, 1}), true);
    Rational prec = make_rational(1, 100000);
    std::vector<Interval> em = numeric_embeddings(FieldElement::generator(f), prec);
    REQUIRE(em.size() == 2);
    CHECK(to_double(em[0].mid()) == doctest::Approx(-1.41421).epsilon(1e-4));
    CHECK(to_double(em[1].mid()) == doctest::Approx(1.41421).epsilon(1e-4));
    CHECK(em[0].width() <= prec);

    // rational constants embed as d copies
    std::vector<Interval> c = numeric_embeddings(FieldElement::constant(f, Rational(3)), prec);
    REQUIRE(c.size() == 2);
    CHECK(c[0].contains(Rational(3)));
    CHECK(c[1].contains(Rational(3)));

    FieldPtr complex_field = NumberField::make(poly({1, 0, 1}), false);
    CHECK_THROWS_AS(
        numeric_embeddings(FieldElement::generator(complex_field), prec), input_error);
}

TEST_CASE("embeddings of a primitive element separate, and sum to the trace")
{
    std::mt19937_64 rng(20240823);
    std::uniform_int_distribution<long> dist(-4, 4);
    for (FieldPtr f : {catalog_quadratic(2), catalog_real_cyclotomic(7)}) {
        int tested = 0;
        while (tested < 10) {
            std::vector<Rational> coords(static_cast<size_t>(f->degree()));
            for (auto& c : coords)
                c = Rational(dist(rng));
            FieldElement a(f, std::move(coords));
            if (!is_primitive(a))
                continue;
            ++tested;
            Rational prec = make_rational(1, 1000);
            std::vector<Interval> em = numeric_embeddings(a, prec);
            bool disjoint = false;
            for (int rounds = 0; rounds < 40 && !disjoint; ++rounds) {
                disjoint = true;
                for (size_t i = 0; i + 1 < em.size(); ++i)
                    for (size_t j = i + 1; j < em.size(); ++j)
                        disjoint = disjoint && !overlaps(em[i], em[j]);
                if (!disjoint) {
                    prec /= 16;
                    em = numeric_embeddings(a, prec);
                }
            }
            CHECK(disjoint);
            // exact trace: -a_{d-1} of the monic minimal polynomial
            Polynomial m = min_poly_of_element(a);
            Rational trace = -m.coeff(m.degree() - 1);
            Interval sum = Interval::point(Rational(0));
            for (const Interval& iv : em)
                sum = sum + iv;
            CHECK(sum.contains(trace));
        }
    }
}

TEST_CASE("modular irreducibility probe")
{
    CHECK(modular_irreducibility_probe(poly({-2, 0, 1})) == IrredOutcome::proved);
    CHECK(modular_irreducibility_probe(poly({-1, -2, 1, 1})) == IrredOutcome::proved);
    // x^4 - 10x^2 + 1 is irreducible but splits modulo every prime, so the
    // probe must stay inconclusive
    CHECK(modular_irreducibility_probe(poly({1, 0, -10, 0, 1})) == IrredOutcome::unproved);
    // a reducible polynomial is never proved irreducible
    CHECK(modular_irreducibility_probe(poly({-2, 0, 1}) * poly({-3, 0, 1}))
          == IrredOutcome::unproved);
}

TEST_CASE("charpoly is the full norm form of the element")
{
    FieldPtr f = catalog_real_cyclotomic(7);
    FieldElement a = element(f, {1, 2, 0});
    Polynomial cp = charpoly_of_element(a);
    CHECK(cp.degree() == 3);
    CHECK(cp.is_monic());
    // charpoly is a power of the minimal polynomial
    Polynomial m = min_poly_of_element(a);
    CHECK(squarefree_part(cp) == m);
    // for a rational constant: (x - c)^d
    Polynomial cc = charpoly_of_element(FieldElement::constant(f, Rational(2)));
    CHECK(cc == poly({-2, 1}) * poly({-2, 1}) * poly({-2, 1}));
}

TEST_SUITE_END();

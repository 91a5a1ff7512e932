#include "algvol/algebraic.hpp"
#include "algvol/errors.hpp"
#include "algvol/roots.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace algvol;

namespace {

Polynomial poly(std::initializer_list<long> coeffs)
{
    return Polynomial::from_int_coeffs(coeffs);
}

} // namespace

TEST_SUITE_BEGIN("roots");

TEST_CASE("sturm chain shape")
{
    Polynomial p = poly({-2, 0, 1});
    SturmChain sc = SturmChain::build(p);
    REQUIRE(sc.chain.size() >= 2);
    CHECK(sc.chain[0] == squarefree_part(p));
    CHECK(sc.chain[1] == sc.chain[0].derivative());
    // each later entry is the negated remainder of the previous pair
    for (size_t i = 2; i < sc.chain.size(); ++i)
        CHECK(sc.chain[i] == -(sc.chain[i - 2].divrem(sc.chain[i - 1]).second));
    CHECK(sc.chain.back().degree() == 0);
    CHECK_FALSE(sc.chain.back().is_zero());

    // the literal chain and the primitive engine count identically
    RootCounter rc(p);
    for (long num = -9; num <= 9; ++num) {
        Rational x = make_rational(num, 4);
        CHECK(sc.variations_at(x) == rc.variations_at(x));
    }
}

TEST_CASE("literal chain and counting engine agree on random polynomials")
{
    std::mt19937_64 rng(20240818);
    std::uniform_int_distribution<long> coeff_dist(-5, 5);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> coeffs(static_cast<size_t>(1 + rng() % 5) + 1);
        for (auto& c : coeffs)
            c = Rational(coeff_dist(rng));
        if (coeffs.back() == 0)
            coeffs.back() = 1;
        Polynomial p(std::move(coeffs));
        if (p.degree() < 1)
            continue;
        SturmChain sc = SturmChain::build(p);
        RootCounter rc(p);
        CHECK(sc.variations_at_neg_inf() == rc.variations_at_neg_inf());
        CHECK(sc.variations_at_pos_inf() == rc.variations_at_pos_inf());
        for (long num = -7; num <= 7; num += 3) {
            Rational x = make_rational(num, 2);
            CHECK(sc.variations_at(x) == rc.variations_at(x));
        }
    }
}

TEST_CASE("isolation of t^2 - 2")
{
    std::vector<Interval> roots = isolate_real_roots(poly({-2, 0, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].lo > Rational(-2));
    CHECK(roots[0].hi < Rational(-1));
    CHECK(roots[1].lo > Rational(1));
    CHECK(roots[1].hi < Rational(2));
    CHECK(roots[0].hi < roots[1].lo);
}

TEST_CASE("isolation of the degree-3 real cyclotomic polynomial")
{
    Polynomial p = poly({-1, -2, 1, 1}); // t^3+t^2-2t-1
    std::vector<Interval> roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 3);
    for (size_t i = 0; i + 1 < roots.size(); ++i)
        CHECK(roots[i].hi < roots[i + 1].lo);
    // independent double-precision cross-check of the largest root
    double largest = testing::double_bisect(
        [&](double x) { return p.eval_double(x); }, 1.0, 2.0);
    CHECK(largest == doctest::Approx(1.2469796).epsilon(1e-6));
    AlgebraicNumber beta = AlgebraicNumber::root_in(p, roots[2]);
    CHECK(beta.decimal(5) == "1.24698");
}

TEST_CASE("no real roots")
{
    CHECK(isolate_real_roots(poly({1, 0, 1})).empty());
    CHECK_THROWS_AS(isolate_real_roots(Polynomial::zero()), input_error);
}

TEST_CASE("interval count equals the Sturm count over the Cauchy bound")
{
    std::mt19937_64 rng(20240816);
    std::uniform_int_distribution<long> coeff_dist(-6, 6);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Rational> coeffs(static_cast<size_t>(1 + rng() % 6) + 1);
        for (auto& c : coeffs)
            c = Rational(coeff_dist(rng));
        if (coeffs.back() == 0)
            coeffs.back() = 1;
        Polynomial p(std::move(coeffs));
        if (p.degree() < 1)
            continue;
        RootCounter rc(p);
        Rational bound = cauchy_root_bound(rc.squarefree());
        int count = rc.count_half_open(-bound, bound);
        CHECK(isolate_real_roots(p).size() == static_cast<size_t>(count));
    }
}

TEST_CASE("rational roots come back exactly")
{
    // t^2 - 4 bisects straight onto the roots +-2 eventually; also point
    // intervals are legal isolating intervals
    std::vector<Interval> roots = isolate_real_roots(poly({-4, 0, 1}));
    REQUIRE(roots.size() == 2);
    for (const Interval& iv : roots) {
        AlgebraicNumber r = AlgebraicNumber::root_in(poly({-4, 0, 1}), iv);
        CHECK((r.compare_rational(Rational(2)) == 0 || r.compare_rational(Rational(-2)) == 0));
    }
}

TEST_CASE("refine_root")
{
    Polynomial p = poly({-2, 0, 1});
    Rational width = make_rational(1, 1000000);
    Interval iv = refine_root(p, Interval(Rational(1), Rational(2)), width);
    CHECK(iv.width() <= width);
    CHECK(to_double(iv.lo) == doctest::Approx(1.4142135).epsilon(1e-5));
    // sign change or endpoint root
    CHECK(sign_at(p, iv.lo) * sign_at(p, iv.hi) <= 0);

    // rational root inside
    Interval point = refine_root(poly({-3, 1}), Interval(Rational(0), Rational(5)), width);
    CHECK(point.contains(Rational(3)));

    // no root in the interval
    CHECK_THROWS_AS(refine_root(p, Interval(Rational(3), Rational(4)), width), input_error);
    CHECK_THROWS_AS(refine_root(p, Interval(Rational(-2), Rational(2)), width), input_error);
}

TEST_CASE("refinement keeps the sign-change invariant on random squarefree polynomials")
{
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<long> coeff_dist(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> coeffs(static_cast<size_t>(2 + rng() % 4) + 1);
        for (auto& c : coeffs)
            c = Rational(coeff_dist(rng));
        if (coeffs.back() == 0)
            coeffs.back() = 1;
        Polynomial p(std::move(coeffs));
        if (p.degree() < 1)
            continue;
        Polynomial s = squarefree_part(p);
        for (const Interval& iv : isolate_real_roots(s)) {
            Interval fine = refine_root(s, iv, make_rational(1, 4096));
            bool endpoint_root = s.eval(fine.lo) == 0 || s.eval(fine.hi) == 0;
            CHECK((endpoint_root || sign_at(s, fine.lo) != sign_at(s, fine.hi)));
        }
    }
}

TEST_CASE("algebraic number equality and comparison")
{
    Polynomial p = poly({-2, 0, 1});
    std::vector<AlgebraicNumber> roots = AlgebraicNumber::real_roots_of(p);
    REQUIRE(roots.size() == 2);
    AlgebraicNumber neg = roots[0], pos = roots[1];
    CHECK(pos.compare(neg) == 1);
    CHECK(neg.compare(pos) == -1);
    CHECK(pos.equals(pos));
    CHECK_FALSE(pos.equals(neg));
    CHECK(pos.compare_rational(Rational(1)) == 1);
    CHECK(pos.compare_rational(Rational(2)) == -1);
    CHECK(AlgebraicNumber::from_rational(make_rational(1, 2)).decimal(6) == "0.500000");
    CHECK(pos.decimal(6) == "1.414214");
    CHECK(pos.plus_rational(Rational(1)).decimal(6) == "2.414214");
    CHECK(pos.times_rational(Rational(-2)).decimal(6) == "-2.828427");
}

TEST_SUITE_END();

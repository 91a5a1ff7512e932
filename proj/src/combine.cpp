#include "algvol/combine.hpp"

#include "algvol/errors.hpp"
#include "algvol/linalg.hpp"
#include "algvol/modular.hpp"
#include "algvol/number_field.hpp"
#include "algvol/roots.hpp"

#include <numeric>

namespace algvol {

namespace {

// Elements of Q[x,y]/(f, g) as coefficient grids, x-degree major.
struct TensorAlgebra {
    FieldPtr xf, yf;
    int p, q;

    TensorAlgebra(const Polynomial& f, const Polynomial& g)
        : xf(NumberField::make(f.monic(), false, {.galois = false, .irreducible = true})),
          yf(NumberField::make(g.monic(), false, {.galois = false, .irreducible = true})),
          p(f.degree()), q(g.degree())
    {
    }

    using Elem = std::vector<Rational>; // size p*q, index i*q + j for x^i y^j

    Elem zero() const { return Elem(static_cast<size_t>(p) * q, Rational(0)); }

    Elem one() const
    {
        Elem e = zero();
        e[0] = 1;
        return e;
    }

    Elem basis(int i, int j) const
    {
        Elem e = zero();
        e[static_cast<size_t>(i) * q + j] = 1;
        return e;
    }

    Elem mul(const Elem& a, const Elem& b) const
    {
        size_t pu = 2 * static_cast<size_t>(p) - 1, qv = 2 * static_cast<size_t>(q) - 1;
        std::vector<Rational> grid(pu * qv, Rational(0));
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < q; ++j) {
                const Rational& c = a[static_cast<size_t>(i) * q + j];
                if (c == 0)
                    continue;
                for (int k = 0; k < p; ++k)
                    for (int l = 0; l < q; ++l) {
                        const Rational& d = b[static_cast<size_t>(k) * q + l];
                        if (d == 0)
                            continue;
                        grid[static_cast<size_t>(i + k) * qv + (j + l)] += c * d;
                    }
            }
        // reduce x-direction: each fixed y-power column is a poly in x
        std::vector<Rational> xred(static_cast<size_t>(p) * qv, Rational(0));
        for (size_t v = 0; v < qv; ++v) {
            std::vector<Rational> col(pu);
            for (size_t u = 0; u < pu; ++u)
                col[u] = grid[u * qv + v];
            col = xf->reduce(std::move(col));
            for (size_t u = 0; u < static_cast<size_t>(p); ++u)
                xred[u * qv + v] = col[u];
        }
        // reduce y-direction row by row
        Elem out = zero();
        for (size_t u = 0; u < static_cast<size_t>(p); ++u) {
            std::vector<Rational> row(qv);
            for (size_t v = 0; v < qv; ++v)
                row[v] = xred[u * qv + v];
            row = yf->reduce(std::move(row));
            for (size_t v = 0; v < static_cast<size_t>(q); ++v)
                out[u * static_cast<size_t>(q) + v] = row[v];
        }
        return out;
    }
};

// Monic rational min poly of the algebra element z.
Polynomial algebra_min_poly(const TensorAlgebra& alg, const TensorAlgebra::Elem& z)
{
    size_t dim = static_cast<size_t>(alg.p) * alg.q;
    DependenceFinder finder(dim);
    TensorAlgebra::Elem power = alg.one();
    for (size_t k = 0;; ++k) {
        auto dep = finder.add(power);
        if (dep) {
            std::vector<Rational> coeffs(k + 1, Rational(0));
            for (size_t j = 0; j < k; ++j)
                coeffs[j] = (*dep)[j];
            coeffs[k] = 1;
            return Polynomial(std::move(coeffs));
        }
        if (k > dim)
            throw computation_error("no dependence found in composite algebra");
        power = alg.mul(power, z);
    }
}

Interval combine_intervals(const Interval& a, const Interval& b, CombineOp op)
{
    return op == CombineOp::product ? a * b : a + b;
}

// Shrink the interval-arithmetic enclosure of the combined value until it
// is certified (Descartes count 1) to isolate a single root of `poly`.
// The enclosure always contains the value, which is a root, so only the
// multiple-roots-inside and root-on-endpoint situations need refining
// away.
Interval select_root_interval(const Polynomial& poly, const AlgebraicNumber& a,
                              const AlgebraicNumber& b, CombineOp op)
{
    AlgebraicNumber ra = a, rb = b;
    Rational w(1, 16);
    for (int round = 0; round < 256; ++round) {
        Interval enc = combine_intervals(ra.isolating(), rb.isolating(), op);
        if (enc.is_point()) {
            if (poly.eval(enc.lo) == 0)
                return enc;
            throw computation_error("enclosure collapsed on a non-root");
        }
        if (poly.eval(enc.lo) != 0 && poly.eval(enc.hi) != 0
            && descartes_variations(poly, enc.lo, enc.hi) == 1)
            return enc;
        w /= 64;
        ra = ra.refined(w);
        rb = rb.refined(w);
    }
    throw computation_error("could not isolate the combined value among root candidates");
}

// Integer roots of a monic integer polynomial, found from the isolated
// real roots (rational roots of a monic integer polynomial are integers).
std::vector<Int> integer_roots_monic(const Polynomial& p)
{
    std::vector<Int> out;
    for (Interval iv : isolate_real_roots(p)) {
        if (!iv.is_point() && iv.width() >= 1)
            iv = refine_root(p, iv, Rational(1, 2));
        if (iv.is_point()) {
            if (is_integer(iv.lo))
                out.push_back(iv.lo.get_num());
            continue;
        }
        Int c = ceil_int(iv.lo);
        if (iv.contains(Rational(c)) && p.eval(Rational(c)) == 0)
            out.push_back(c);
    }
    return out;
}

bool is_perfect_square(const Int& n, Int& root)
{
    if (n < 0)
        return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0)
        return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return true;
}

// Split of a monic squarefree integer quartic with no integer roots into
// two monic integer quadratics, if one exists.  Writing the split as
// (x^2+ax+b)(x^2+cx+d) with a+c = p3, b+d+ac = p2, ad+bc = p1, bd = p0,
// z = b+d is an integer root of the resolvent cubic
// z^3 - p2 z^2 + (p1 p3 - 4 p0) z - (p1^2 + p0 p3^2 - 4 p0 p2).
std::optional<std::pair<Polynomial, Polynomial>>
quartic_quadratic_split(const Polynomial& f)
{
    Int p3 = f.coeff(3).get_num(), p2 = f.coeff(2).get_num();
    Int p1 = f.coeff(1).get_num(), p0 = f.coeff(0).get_num();
    std::vector<Rational> rc{Rational(-(p1 * p1 + p0 * p3 * p3 - 4 * p0 * p2)),
                             Rational(p1 * p3 - 4 * p0), Rational(-p2), Rational(1)};
    Polynomial resolvent{std::move(rc)};
    Polynomial res_sf = squarefree_part(resolvent);
    for (const Int& z : integer_roots_monic(res_sf)) {
        // a, c are roots of w^2 - p3 w + (p2 - z); b, d of w^2 - z w + p0
        Int disc1 = p3 * p3 - 4 * (p2 - z);
        Int disc2 = z * z - 4 * p0;
        Int r1, r2;
        if (!is_perfect_square(disc1, r1) || !is_perfect_square(disc2, r2))
            continue;
        if ((p3 + r1) % 2 != 0 || (z + r2) % 2 != 0)
            continue;
        Int a_candidates[2] = {(p3 + r1) / 2, (p3 - r1) / 2};
        Int b_candidates[2] = {(z + r2) / 2, (z - r2) / 2};
        for (const Int& a : a_candidates)
            for (const Int& b : b_candidates) {
                Int c = p3 - a, d = z - b;
                if (a * d + b * c == p1 && b * d == p0) {
                    Polynomial f1({Rational(b), Rational(a), Rational(1)});
                    Polynomial f2({Rational(d), Rational(c), Rational(1)});
                    if ((f1 * f2) == f)
                        return std::make_pair(f1, f2);
                }
            }
    }
    return std::nullopt;
}

// g(x) = lead^(deg-1) * f(x/lead): monic integer polynomial whose roots are
// lead * (roots of f).
Polynomial monic_rescale(const Polynomial& f, const Rational& lead)
{
    int d = f.degree();
    std::vector<Rational> coeffs(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i)
        coeffs[static_cast<size_t>(i)] = f.coeff(i) * rational_pow(lead, d - 1 - i);
    return Polynomial(std::move(coeffs));
}

// All rational roots of a primitive integer polynomial, exactly.
std::vector<Rational> rational_roots(const Polynomial& f)
{
    Rational lead(f.leading());
    Polynomial g = lead == 1 ? f : monic_rescale(f, lead);
    std::vector<Rational> out;
    for (const Int& z : integer_roots_monic(g))
        out.push_back(make_rational(z, lead.get_num()));
    return out;
}

} // namespace

IrredDecision decide_irreducible(const Polynomial& input)
{
    Polynomial f = input.primitive_integer();
    int d = f.degree();
    if (d < 1)
        throw input_error("irreducibility decision needs degree >= 1");
    if (d == 1)
        return IrredDecision::irreducible;
    if (d <= 3) {
        // degree 2 or 3: irreducible iff no rational root
        return rational_roots(f).empty() ? IrredDecision::irreducible
                                         : IrredDecision::reducible;
    }
    if (d == 4) {
        if (!rational_roots(f).empty())
            return IrredDecision::reducible;
        Polynomial g = monic_rescale(f, Rational(f.leading()));
        return quartic_quadratic_split(g) ? IrredDecision::reducible
                                          : IrredDecision::irreducible;
    }
    if (modular_irreducibility_probe(f) == IrredOutcome::proved)
        return IrredDecision::irreducible;
    return IrredDecision::unknown;
}

namespace {

// For a squarefree primitive integer f of degree <= 4 and an interval
// isolating one of its roots, the irreducible factor vanishing there.
Polynomial minimal_factor_with_root(const Polynomial& f, const Interval& selected)
{
    std::vector<Polynomial> factors;
    Polynomial rest = f;
    for (const Rational& r : rational_roots(f)) {
        factors.push_back(Polynomial({-r, Rational(1)}).primitive_integer());
        rest = rest.exact_divide(Polynomial({-r, Rational(1)})).primitive_integer();
    }
    if (rest.degree() >= 1) {
        if (rest.degree() == 4) {
            Polynomial g = monic_rescale(rest, Rational(rest.leading()));
            if (auto split = quartic_quadratic_split(g)) {
                Rational lead(rest.leading());
                // map g's factors back: roots of g are lead * roots of rest
                factors.push_back(split->first.scale_root(1 / lead).primitive_integer());
                factors.push_back(split->second.scale_root(1 / lead).primitive_integer());
            } else {
                factors.push_back(rest);
            }
        } else {
            // degree 2 or 3 with no rational roots: irreducible
            factors.push_back(rest);
        }
    }
    for (const Polynomial& fac : factors) {
        RootCounter rc(fac);
        if (rc.count_closed(selected) == 1)
            return fac;
    }
    throw computation_error("no factor vanishes on the selected interval");
}

} // namespace

Polynomial combine_annihilator(const AlgebraicNumber& a, const AlgebraicNumber& b,
                               CombineOp op)
{
    TensorAlgebra alg(a.min_poly(), b.min_poly());
    TensorAlgebra::Elem z;
    if (op == CombineOp::product)
        z = alg.basis(1, 1);
    else {
        z = alg.basis(1, 0);
        TensorAlgebra::Elem y = alg.basis(0, 1);
        for (size_t i = 0; i < z.size(); ++i)
            z[i] += y[i];
    }
    // first-dependence polynomials of an element of an etale algebra are
    // squarefree (the product of the distinct component minimal
    // polynomials), so no gcd normalization is needed
    return algebra_min_poly(alg, z);
}

namespace {

AlgebraicNumber square_in_single_field(const AlgebraicNumber& a)
{
    // a * a computed inside Q[x]/f, where minimality is automatic.
    FieldPtr k = NumberField::make(a.min_poly().monic(), false,
                                   {.galois = false, .irreducible = true});
    FieldElement x = FieldElement::generator(k);
    Polynomial m = min_poly_of_element(x * x);
    AlgebraicNumber ra = a;
    Rational w(1, 16);
    for (int round = 0; round < 256; ++round) {
        Interval enc = ra.isolating() * ra.isolating();
        if (enc.is_point()) {
            if (m.eval(enc.lo) == 0)
                return AlgebraicNumber::root_in_squarefree(m.primitive_integer(), enc);
            throw computation_error("enclosure collapsed on a non-root");
        }
        if (m.eval(enc.lo) != 0 && m.eval(enc.hi) != 0
            && descartes_variations(m, enc.lo, enc.hi) == 1)
            return AlgebraicNumber::root_in_squarefree(m.primitive_integer(), enc);
        w /= 64;
        ra = ra.refined(w);
    }
    throw computation_error("could not isolate the combined value");
}

} // namespace

AlgebraicNumber min_poly_combine(const AlgebraicNumber& a, const AlgebraicNumber& b,
                                 CombineOp op)
{
    // rational operands reduce to exact affine maps
    if (a.is_rational()) {
        Rational r = a.as_rational();
        return op == CombineOp::product ? b.times_rational(r) : b.plus_rational(r);
    }
    if (b.is_rational()) {
        Rational r = b.as_rational();
        return op == CombineOp::product ? a.times_rational(r) : a.plus_rational(r);
    }
    if (a.min_poly() == b.min_poly() && a.equals(b))
        return op == CombineOp::product ? square_in_single_field(a)
                                        : a.times_rational(Rational(2));

    Polynomial f = combine_annihilator(a, b, op);
    Interval selected = select_root_interval(f, a, b, op);

    if (std::gcd(a.degree(), b.degree()) == 1) {
        // coprime degrees make the composite algebra a field, so the
        // first-dependence polynomial is minimal
        return AlgebraicNumber::root_in_squarefree(f, selected);
    }

    // the selected root might be rational even when the annihilator is not
    // linear; decide exactly via the smallest-denominator candidate
    Interval probe = selected.is_point() ? selected : bisect_refine(f, selected, pow10(-30));
    Rational candidate = simplest_rational_in(probe.lo, probe.hi);
    if (f.eval(candidate) == 0 && probe.contains(candidate))
        return AlgebraicNumber::from_rational(candidate);
    selected = probe;

    if (f.degree() <= 4) {
        Polynomial m = minimal_factor_with_root(f, selected);
        return AlgebraicNumber::root_in_squarefree(m, selected);
    }
    if (decide_irreducible(f) == IrredDecision::irreducible)
        return AlgebraicNumber::root_in_squarefree(f, selected);
    throw computation_error(
        "cannot certify the minimal polynomial of the combined value");
}

} // namespace algvol

#include "algvol/algebraic.hpp"

#include "algvol/errors.hpp"
#include "algvol/roots.hpp"

namespace algvol {

namespace {

Polynomial canonical_integer(const Polynomial& p)
{
    if (p.is_zero())
        throw input_error("algebraic number needs a nonzero polynomial");
    return squarefree_part(p).primitive_integer();
}

} // namespace

AlgebraicNumber::AlgebraicNumber()
    : poly_({Rational(0), Rational(1)}), iso_(Interval::point(Rational(0)))
{
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& r)
{
    AlgebraicNumber a;
    a.poly_ = Polynomial({-r, Rational(1)}).primitive_integer(); // q*x - p
    a.iso_ = Interval::point(r);
    return a;
}

namespace {

// Exactly-one-root validation: cheap Descartes certificate first, Sturm
// only when the count is inconclusive or an endpoint is a root.
void validate_isolating(const Polynomial& p, const Interval& iv)
{
    if (iv.is_point()) {
        if (p.eval(iv.lo) != 0)
            throw input_error("point interval is not a root");
        return;
    }
    if (p.eval(iv.lo) != 0 && p.eval(iv.hi) != 0) {
        int v = descartes_variations(p, iv.lo, iv.hi);
        if (v == 1)
            return;
        if (v == 0)
            throw input_error("interval does not isolate exactly one root");
    }
    RootCounter rc(p);
    if (rc.count_closed(iv) != 1)
        throw input_error("interval does not isolate exactly one root");
}

} // namespace

AlgebraicNumber AlgebraicNumber::checked(Polynomial poly, const Interval& iv)
{
    validate_isolating(poly, iv);
    if (poly.degree() == 1) {
        // degree-1 values are pinned to their exact point
        Rational r = -poly.coeff(0) / poly.coeff(1);
        return from_rational(r);
    }
    AlgebraicNumber a;
    a.poly_ = std::move(poly);
    a.iso_ = iv;
    return a;
}

AlgebraicNumber AlgebraicNumber::root_in(const Polynomial& p, const Interval& iv)
{
    return checked(canonical_integer(p), iv);
}

AlgebraicNumber AlgebraicNumber::root_in_squarefree(const Polynomial& p, const Interval& iv)
{
    if (p.is_zero())
        throw input_error("algebraic number needs a nonzero polynomial");
    return checked(p.primitive_integer(), iv);
}

std::vector<AlgebraicNumber> AlgebraicNumber::real_roots_of(const Polynomial& p)
{
    Polynomial q = canonical_integer(p);
    std::vector<AlgebraicNumber> out;
    for (const Interval& iv : isolate_real_roots(q))
        out.push_back(root_in(q, iv));
    return out;
}

Rational AlgebraicNumber::as_rational() const
{
    if (degree() != 1)
        throw input_error("not a rational value");
    return -poly_.coeff(0) / poly_.coeff(1);
}

AlgebraicNumber AlgebraicNumber::refined(const Rational& width) const
{
    // the stored interval is already certified isolating, so plain sign
    // bisection refines it
    AlgebraicNumber a(*this);
    if (iso_.width() > width)
        a.iso_ = bisect_refine(poly_, iso_, width);
    return a;
}

AlgebraicNumber AlgebraicNumber::plus_rational(const Rational& r) const
{
    AlgebraicNumber a;
    a.poly_ = poly_.translate(r).primitive_integer(); // m(x - r) vanishes at v + r
    a.iso_ = Interval(iso_.lo + r, iso_.hi + r);
    return a;
}

AlgebraicNumber AlgebraicNumber::times_rational(const Rational& r) const
{
    if (r == 0)
        return from_rational(Rational(0));
    AlgebraicNumber a;
    a.poly_ = poly_.scale_root(r).primitive_integer();
    a.iso_ = r > 0 ? Interval(r * iso_.lo, r * iso_.hi)
                   : Interval(r * iso_.hi, r * iso_.lo);
    return a;
}

bool AlgebraicNumber::equals(const AlgebraicNumber& o) const
{
    if (!(poly_ == o.poly_))
        return false;
    // degree-1 values are pinned to exact points at construction
    if (iso_.is_point() || o.iso_.is_point())
        return iso_.is_point() && o.iso_.is_point() && iso_.lo == o.iso_.lo;
    Interval a = iso_, b = o.iso_;
    Rational w = a.width() + b.width();
    for (int round = 0; round < 256; ++round) {
        if (!overlaps(a, b))
            return false;
        // both intervals isolate one root each; if their hull holds exactly
        // one root, the two roots coincide
        Rational lo = a.lo < b.lo ? a.lo : b.lo;
        Rational hi = a.hi > b.hi ? a.hi : b.hi;
        if (poly_.eval(lo) != 0 && poly_.eval(hi) != 0
            && descartes_variations(poly_, lo, hi) == 1)
            return true;
        w /= 4;
        a = bisect_refine(poly_, a, w);
        b = bisect_refine(o.poly_, b, w);
        if (a.is_point() && b.is_point())
            return a.lo == b.lo;
        if (a.is_point() || b.is_point()) {
            const Interval& pt = a.is_point() ? a : b;
            const Interval& iv = a.is_point() ? b : a;
            return iv.contains(pt.lo); // the point is the isolated root
        }
    }
    // exact fallback: count over the intersection
    auto common = intersect(a, b);
    if (!common)
        return false;
    RootCounter rc(poly_);
    return rc.count_closed(*common) >= 1;
}

int AlgebraicNumber::compare(const AlgebraicNumber& o) const
{
    if (equals(o))
        return 0;
    Interval a = iso_, b = o.iso_;
    Rational wa = a.width(), wb = b.width();
    while (overlaps(a, b)) {
        wa = wa == 0 ? Rational(1, 2) : wa / 4;
        wb = wb == 0 ? Rational(1, 2) : wb / 4;
        a = bisect_refine(poly_, a, wa);
        b = bisect_refine(o.poly_, b, wb);
    }
    return a.hi < b.lo ? -1 : 1;
}

int AlgebraicNumber::compare_rational(const Rational& r) const
{
    if (poly_.eval(r) == 0 && iso_.contains(r))
        return 0;
    Interval a = iso_;
    Rational w = a.width();
    while (a.contains(r)) {
        w = w == 0 ? Rational(1, 2) : w / 4;
        a = bisect_refine(poly_, a, w);
        if (a.is_point())
            break;
    }
    if (a.contains(r)) // point interval equal to r was excluded above
        return a.lo < r ? -1 : (a.lo > r ? 1 : 0);
    return a.hi < r ? -1 : 1;
}

double AlgebraicNumber::to_double() const
{
    AlgebraicNumber a = refined(pow10(-17));
    return ::algvol::to_double(a.iso_.mid());
}

std::string AlgebraicNumber::decimal(int digits) const
{
    if (digits < 1)
        throw input_error("decimal rendering needs digits >= 1");
    AlgebraicNumber a = refined(pow10(-(digits + 1)));
    return decimal_string(a.iso_.mid(), digits);
}

} // namespace algvol

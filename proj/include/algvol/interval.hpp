#ifndef ALGVOL_INTERVAL_HPP
#define ALGVOL_INTERVAL_HPP

#include "algvol/errors.hpp"
#include "algvol/rational.hpp"

#include <algorithm>
#include <optional>

namespace algvol {

// Closed interval with exact rational endpoints, lo <= hi.
struct Interval {
    Rational lo, hi;

    Interval() : lo(0), hi(0) {}
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h))
    {
        if (lo > hi)
            throw input_error("interval with lo > hi");
    }
    static Interval point(const Rational& x) { return Interval(x, x); }

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }

    bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

inline Interval operator+(const Interval& a, const Interval& b)
{
    return Interval(a.lo + b.lo, a.hi + b.hi);
}

inline Interval operator-(const Interval& a)
{
    return Interval(-a.hi, -a.lo);
}

inline Interval operator-(const Interval& a, const Interval& b)
{
    return a + (-b);
}

inline Interval operator*(const Interval& a, const Interval& b)
{
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return Interval(std::min(std::min(p1, p2), std::min(p3, p4)),
                    std::max(std::max(p1, p2), std::max(p3, p4)));
}

inline Interval operator*(const Rational& c, const Interval& a)
{
    return c >= 0 ? Interval(c * a.lo, c * a.hi) : Interval(c * a.hi, c * a.lo);
}

inline Interval operator+(const Rational& c, const Interval& a)
{
    return Interval(c + a.lo, c + a.hi);
}

inline std::optional<Interval> intersect(const Interval& a, const Interval& b)
{
    Rational lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
    if (lo > hi)
        return std::nullopt;
    return Interval(lo, hi);
}

inline bool overlaps(const Interval& a, const Interval& b)
{
    return !(a.hi < b.lo || b.hi < a.lo);
}

} // namespace algvol

#endif

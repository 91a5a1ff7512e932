#ifndef ALGVOL_ROOTS_HPP
#define ALGVOL_ROOTS_HPP

#include "algvol/interval.hpp"
#include "algvol/polynomial.hpp"

#include <vector>

namespace algvol {

// Canonical Sturm sequence: chain[0] is the squarefree part of the input,
// chain[1] its derivative, and each later entry the negated remainder of
// the previous pair.  For a squarefree chain[0] the last entry is a
// nonzero constant.
struct SturmChain {
    std::vector<Polynomial> chain;

    static SturmChain build(const Polynomial& p); // p != 0

    // Sign variations at x, zeros skipped.  Equals the right-limit count,
    // so variations(a) - variations(b) is the number of roots in (a, b].
    int variations_at(const Rational& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;
    int count_half_open(const Rational& a, const Rational& b) const;
};

// Root counting engine over a sign-equivalent primitive integer chain
// (each entry a positive multiple of the canonical Sturm entry), which
// keeps coefficients small on high-degree inputs.
class RootCounter {
public:
    explicit RootCounter(const Polynomial& p); // p != 0; works on squarefree part

    const Polynomial& squarefree() const { return sqfree_; }

    int variations_at(const Rational& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;

    int count_half_open(const Rational& a, const Rational& b) const; // roots in (a, b]
    int count_closed(const Interval& iv) const;                      // roots in [lo, hi]
    int count_all() const;
    int count_above(const Rational& a) const;  // roots in (a, +inf)
    int count_below(const Rational& b) const;  // roots in (-inf, b)

private:
    Polynomial sqfree_;              // monic rational squarefree part
    std::vector<Polynomial> chain_;  // primitive integer, sign-preserved
};

int sign_at(const Polynomial& p, const Rational& x);

// B = 1 + max |a_i| / |lead|; every real root lies in (-B, B).
Rational cauchy_root_bound(const Polynomial& p);

// One closed interval per distinct real root of squarefree_part(p),
// pairwise disjoint, ascending.  Rational roots may come back as point
// intervals; all other returned endpoints are non-roots.
std::vector<Interval> isolate_real_roots(const Polynomial& p);

// Shrink an isolating interval below `width`, still isolating the same
// root.  Throws input_error when iv does not isolate exactly one root.
Interval refine_root(const Polynomial& p, Interval iv, const Rational& width);

// Descartes variation count of p mapped from (lo, hi) onto (0, inf):
// 0 certifies no root in (lo, hi), 1 certifies exactly one; higher values
// are inconclusive.  Much cheaper than a Sturm chain on high-degree
// polynomials with large coefficients.
int descartes_variations(const Polynomial& p, const Rational& lo, const Rational& hi);

// Bisection refinement by sign evaluation only.  Requires an interval
// already known to isolate exactly one root of a squarefree p (so the
// endpoint signs differ unless the interval is a root point); no
// validation is performed.
Interval bisect_refine(const Polynomial& p, Interval iv, const Rational& width);

} // namespace algvol

#endif

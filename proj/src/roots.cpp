#include "algvol/roots.hpp"

#include "algvol/errors.hpp"

namespace algvol {

int sign_at(const Polynomial& p, const Rational& x)
{
    return sgn(p.eval(x));
}

namespace {

int variations_of_signs(const std::vector<int>& signs)
{
    int last = 0, v = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++v;
        last = s;
    }
    return v;
}

template <typename Eval>
int chain_variations(const std::vector<Polynomial>& chain, Eval&& sign_of)
{
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const Polynomial& p : chain)
        signs.push_back(sign_of(p));
    return variations_of_signs(signs);
}

int sign_at_pos_inf(const Polynomial& p)
{
    return sgn(p.leading());
}

int sign_at_neg_inf(const Polynomial& p)
{
    int s = sgn(p.leading());
    return p.degree() % 2 == 0 ? s : -s;
}

} // namespace

SturmChain SturmChain::build(const Polynomial& p)
{
    if (p.is_zero())
        throw input_error("Sturm chain of the zero polynomial");
    SturmChain sc;
    Polynomial s = squarefree_part(p);
    sc.chain.push_back(s);
    if (s.degree() == 0)
        return sc;
    sc.chain.push_back(s.derivative());
    while (true) {
        const Polynomial& a = sc.chain[sc.chain.size() - 2];
        const Polynomial& b = sc.chain.back();
        Polynomial r = a.divrem(b).second;
        if (r.is_zero())
            break;
        sc.chain.push_back(-r);
    }
    return sc;
}

int SturmChain::variations_at(const Rational& x) const
{
    return chain_variations(chain, [&](const Polynomial& p) { return sign_at(p, x); });
}

int SturmChain::variations_at_neg_inf() const
{
    return chain_variations(chain, sign_at_neg_inf);
}

int SturmChain::variations_at_pos_inf() const
{
    return chain_variations(chain, sign_at_pos_inf);
}

int SturmChain::count_half_open(const Rational& a, const Rational& b) const
{
    return variations_at(a) - variations_at(b);
}

RootCounter::RootCounter(const Polynomial& p)
{
    if (p.is_zero())
        throw input_error("root counting on the zero polynomial");
    sqfree_ = squarefree_part(p);
    Polynomial a = sqfree_.primitive_integer();
    chain_.push_back(a);
    if (a.degree() == 0)
        return;
    Polynomial b = a.derivative().primitive_integer();
    chain_.push_back(b);
    // Each next entry is a positive multiple of the negated remainder:
    // pseudo_rem_abs scales by a positive power of |lc|, and the positive
    // content is divided out, so sign variations match the literal chain.
    while (true) {
        const Polynomial& prev = chain_[chain_.size() - 2];
        const Polynomial& cur = chain_.back();
        Polynomial r = pseudo_rem_abs(prev, cur);
        if (r.is_zero())
            break;
        auto [content, prim] = (-r).content_primitive();
        if (sgn(content) < 0)
            prim = -prim; // keep the sign of -r, divide only by |content|
        chain_.push_back(prim);
    }
}

int RootCounter::variations_at(const Rational& x) const
{
    return chain_variations(chain_, [&](const Polynomial& p) { return sign_at(p, x); });
}

int RootCounter::variations_at_neg_inf() const
{
    return chain_variations(chain_, sign_at_neg_inf);
}

int RootCounter::variations_at_pos_inf() const
{
    return chain_variations(chain_, sign_at_pos_inf);
}

int RootCounter::count_half_open(const Rational& a, const Rational& b) const
{
    if (a > b)
        throw input_error("count_half_open with a > b");
    return variations_at(a) - variations_at(b);
}

int RootCounter::count_closed(const Interval& iv) const
{
    int n = count_half_open(iv.lo, iv.hi);
    if (sqfree_.eval(iv.lo) == 0)
        ++n;
    return n;
}

int RootCounter::count_all() const
{
    return variations_at_neg_inf() - variations_at_pos_inf();
}

int RootCounter::count_above(const Rational& a) const
{
    int n = variations_at(a) - variations_at_pos_inf();
    return n;
}

int RootCounter::count_below(const Rational& b) const
{
    int n = variations_at_neg_inf() - variations_at(b);
    if (sqfree_.eval(b) == 0)
        --n; // half-open (-inf, b] counted b itself
    return n;
}

Rational cauchy_root_bound(const Polynomial& p)
{
    if (p.is_zero())
        throw input_error("root bound of the zero polynomial");
    Rational lead = abs(p.leading());
    Rational m(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rational a = abs(p.coeff(i));
        if (a > m)
            m = a;
    }
    return 1 + m / lead;
}

namespace {

struct Isolator {
    const RootCounter& rc;
    const Polynomial& s; // squarefree part
    std::vector<Interval>& out;

    bool is_root(const Rational& x) const { return s.eval(x) == 0; }

    // Roots in (a, b], with s(a) != 0 guaranteed by the caller.
    void process(const Rational& a, const Rational& b)
    {
        int n = rc.count_half_open(a, b);
        if (n == 0)
            return;
        if (n == 1) {
            if (is_root(b))
                out.push_back(Interval::point(b));
            else
                out.push_back(Interval(a, b));
            return;
        }
        Rational m = (a + b) / 2;
        if (!is_root(m)) {
            process(a, m);
            process(m, b);
            return;
        }
        // m is a rational root: emit it as a point and nudge both sides
        // off the root before recursing.
        Rational left = m;
        Rational step = (m - a) / 2;
        while (true) {
            Rational cand = m - step;
            if (!is_root(cand) && rc.count_half_open(cand, m) == 1) {
                left = cand;
                break;
            }
            step /= 2;
        }
        process(a, left);
        out.push_back(Interval::point(m));
        step = (b - m) / 2;
        while (true) {
            Rational cand = m + step;
            if (!is_root(cand) && rc.count_half_open(m, cand) == 0) {
                process(cand, b);
                return;
            }
            step /= 2;
        }
    }
};

// One bisection step on a closed isolating interval with a single root.
Interval shrink_once(const RootCounter& rc, const Interval& iv)
{
    if (iv.is_point())
        return iv;
    const Polynomial& s = rc.squarefree();
    if (s.eval(iv.lo) == 0)
        return Interval::point(iv.lo);
    if (s.eval(iv.hi) == 0)
        return Interval::point(iv.hi);
    Rational m = iv.mid();
    if (s.eval(m) == 0)
        return Interval::point(m);
    if (rc.count_half_open(iv.lo, m) == 1)
        return Interval(iv.lo, m);
    return Interval(m, iv.hi);
}

} // namespace

std::vector<Interval> isolate_real_roots(const Polynomial& p)
{
    if (p.is_zero())
        throw input_error("root isolation on the zero polynomial");
    if (p.degree() == 0)
        return {};
    RootCounter rc(p);
    const Polynomial& s = rc.squarefree();
    if (s.degree() == 0)
        return {};
    Rational bound = cauchy_root_bound(s);
    std::vector<Interval> out;
    Isolator iso{rc, s, out};
    iso.process(-bound, bound);
    // Tighten: keeps the intervals informative even when the first
    // separating bisection was very coarse.
    const Rational max_width(1, 4);
    for (Interval& iv : out)
        while (iv.width() > max_width)
            iv = shrink_once(rc, iv);
    // Neighbors may share an endpoint; shrink until genuinely disjoint.
    for (size_t i = 0; i + 1 < out.size(); ++i) {
        while (out[i].hi >= out[i + 1].lo) {
            out[i] = shrink_once(rc, out[i]);
            out[i + 1] = shrink_once(rc, out[i + 1]);
        }
    }
    return out;
}

Interval refine_root(const Polynomial& p, Interval iv, const Rational& width)
{
    if (width <= 0)
        throw input_error("refine_root with non-positive width");
    RootCounter rc(p);
    if (rc.count_closed(iv) != 1)
        throw input_error("refine_root: interval does not isolate exactly one root");
    const Polynomial& s = rc.squarefree();
    if (s.eval(iv.lo) == 0)
        return Interval::point(iv.lo);
    if (s.eval(iv.hi) == 0)
        return Interval::point(iv.hi);
    while (iv.width() > width) {
        Rational m = iv.mid();
        if (s.eval(m) == 0)
            return Interval::point(m);
        if (rc.count_half_open(iv.lo, m) == 1)
            iv = Interval(iv.lo, m);
        else
            iv = Interval(m, iv.hi);
    }
    return iv;
}

int descartes_variations(const Polynomial& p, const Rational& lo, const Rational& hi)
{
    if (p.is_zero())
        throw input_error("Descartes count on the zero polynomial");
    if (!(lo < hi))
        throw input_error("Descartes count needs lo < hi");
    // G(t) = (1+t)^d p((lo + hi t)/(1 + t)) = sum_i p_i A^i B^(d-i)
    // with A = lo + hi t, B = 1 + t; positive roots of G correspond to
    // roots of p in (lo, hi).
    int d = p.degree();
    Polynomial a({lo, hi});
    Polynomial b({Rational(1), Rational(1)});
    Polynomial g = Polynomial::constant(p.coeff(d));
    Polynomial bpow = Polynomial::constant(Rational(1));
    for (int k = 0; k < d; ++k) {
        bpow = bpow * b;
        g = g * a + Polynomial::constant(p.coeff(d - 1 - k)) * bpow;
    }
    int last = 0, v = 0;
    for (int i = 0; i <= g.degree(); ++i) {
        int s = sgn(g.coeff(i));
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++v;
        last = s;
    }
    return v;
}

Interval bisect_refine(const Polynomial& p, Interval iv, const Rational& width)
{
    if (width < 0)
        throw input_error("bisect_refine with negative width");
    if (iv.is_point())
        return iv;
    int sign_lo = sign_at(p, iv.lo);
    if (sign_lo == 0)
        return Interval::point(iv.lo);
    if (sign_at(p, iv.hi) == 0)
        return Interval::point(iv.hi);
    while (iv.width() > width) {
        Rational m = iv.mid();
        int sign_m = sign_at(p, m);
        if (sign_m == 0)
            return Interval::point(m);
        if (sign_m == sign_lo)
            iv = Interval(m, iv.hi);
        else
            iv = Interval(iv.lo, m);
    }
    return iv;
}

} // namespace algvol

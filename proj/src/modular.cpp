#include "algvol/modular.hpp"

#include "algvol/errors.hpp"

#include <cstdint>
#include <vector>

namespace algvol {

namespace {

// Dense polynomials over F_p for small p, coefficients in [0, p).
using PolyP = std::vector<int64_t>;

void trim(PolyP& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

int deg(const PolyP& f)
{
    return static_cast<int>(f.size()) - 1;
}

int64_t inv_mod(int64_t a, int64_t p)
{
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    return ((t % p) + p) % p;
}

PolyP mul_mod(const PolyP& a, const PolyP& b, int64_t p)
{
    if (a.empty() || b.empty())
        return {};
    PolyP c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    trim(c);
    return c;
}

PolyP rem_mod(PolyP a, const PolyP& b, int64_t p)
{
    int64_t linv = inv_mod(b.back(), p);
    while (deg(a) >= deg(b)) {
        int64_t f = a.back() * linv % p;
        int shift = deg(a) - deg(b);
        for (size_t i = 0; i < b.size(); ++i) {
            a[i + static_cast<size_t>(shift)] =
                ((a[i + static_cast<size_t>(shift)] - f * b[i]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

PolyP gcd_mod(PolyP a, PolyP b, int64_t p)
{
    while (!b.empty()) {
        PolyP r = rem_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) { // make monic
        int64_t linv = inv_mod(a.back(), p);
        for (auto& c : a)
            c = c * linv % p;
    }
    return a;
}

PolyP pow_x_mod(const PolyP& f, int64_t e, int64_t p)
{
    // x^e mod f by binary exponentiation
    PolyP result{1};
    PolyP base{0, 1};
    base = rem_mod(base, f, p);
    while (e) {
        if (e & 1)
            result = rem_mod(mul_mod(result, base, p), f, p);
        base = rem_mod(mul_mod(base, base, p), f, p);
        e >>= 1;
    }
    return result;
}

PolyP frobenius(const PolyP& h, int64_t p, const PolyP& f)
{
    // h(x)^p mod f via h evaluated at... computed as plain power.
    PolyP result{1};
    PolyP base = h;
    int64_t e = p;
    while (e) {
        if (e & 1)
            result = rem_mod(mul_mod(result, base, p), f, p);
        base = rem_mod(mul_mod(base, base, p), f, p);
        e >>= 1;
    }
    return result;
}

PolyP exact_div_mod(const PolyP& a, const PolyP& b, int64_t p)
{
    PolyP quot(a.size() - b.size() + 1, 0);
    PolyP rem = a;
    int64_t linv = inv_mod(b.back(), p);
    while (deg(rem) >= deg(b)) {
        int64_t f = rem.back() * linv % p;
        int shift = deg(rem) - deg(b);
        quot[static_cast<size_t>(shift)] = f;
        for (size_t i = 0; i < b.size(); ++i) {
            rem[i + static_cast<size_t>(shift)] =
                ((rem[i + static_cast<size_t>(shift)] - f * b[i]) % p + p) % p;
        }
        trim(rem);
    }
    return quot;
}

// Multiset of irreducible factor degrees of a squarefree monic f over F_p.
std::vector<int> factor_degrees(PolyP f, int64_t p)
{
    std::vector<int> degrees;
    PolyP h{0, 1}; // x
    h = rem_mod(h, f, p);
    int i = 0;
    while (deg(f) >= 1) {
        ++i;
        if (2 * i > deg(f)) {
            degrees.push_back(deg(f));
            break;
        }
        h = frobenius(h, p, f); // now x^(p^i) mod f
        // gcd(h - x, f) collects all factors of degree dividing i; after
        // peeling lower i first, what comes out has degree exactly i.
        PolyP hx = h;
        if (hx.size() < 2)
            hx.resize(2, 0);
        hx[1] = ((hx[1] - 1) % p + p) % p;
        trim(hx);
        PolyP g = hx.empty() ? f : gcd_mod(f, hx, p);
        if (deg(g) >= 1) {
            for (int k = 0; k < deg(g) / i; ++k)
                degrees.push_back(i);
            f = exact_div_mod(f, g, p);
            h = rem_mod(h, f, p);
        }
    }
    return degrees;
}

} // namespace

IrredOutcome modular_irreducibility_probe(const Polynomial& p)
{
    Polynomial f = p.primitive_integer();
    int d = f.degree();
    if (d < 1)
        throw input_error("irreducibility probe needs degree >= 1");
    if (d == 1)
        return IrredOutcome::proved;

    static const int64_t primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                     31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
    // achievable proper factor degrees, intersected across usable primes
    std::vector<bool> possible(static_cast<size_t>(d) + 1, true);
    int used = 0;
    for (int64_t q : primes) {
        if (used >= 6)
            break;
        // reduce mod q; skip primes dividing the leading coefficient
        Int lead = f.leading().get_num();
        if (mpz_fdiv_ui(lead.get_mpz_t(), static_cast<unsigned long>(q)) == 0)
            continue;
        PolyP fq(static_cast<size_t>(d) + 1, 0);
        for (int i = 0; i <= d; ++i) {
            Int c = f.coeff(i).get_num();
            fq[static_cast<size_t>(i)] = static_cast<int64_t>(
                mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(q)));
        }
        // need squarefree image: gcd(fq, fq') == 1
        PolyP der(fq.size() - 1);
        for (size_t i = 1; i < fq.size(); ++i)
            der[i - 1] = static_cast<int64_t>(i % q) * fq[i] % q;
        trim(der);
        if (der.empty())
            continue;
        if (deg(gcd_mod(fq, der, q)) != 0)
            continue;
        ++used;

        std::vector<int> degs = factor_degrees(fq, q);
        // subset sums of the degree multiset
        std::vector<bool> reach(static_cast<size_t>(d) + 1, false);
        reach[0] = true;
        for (int e : degs)
            for (int s = d; s >= e; --s)
                if (reach[static_cast<size_t>(s - e)])
                    reach[static_cast<size_t>(s)] = true;
        for (int s = 0; s <= d; ++s)
            if (!reach[static_cast<size_t>(s)])
                possible[static_cast<size_t>(s)] = false;

        bool proper = false;
        for (int s = 1; s < d; ++s)
            proper |= possible[static_cast<size_t>(s)];
        if (!proper)
            return IrredOutcome::proved;
    }
    return IrredOutcome::unproved;
}

} // namespace algvol

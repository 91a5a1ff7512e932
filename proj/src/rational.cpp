#include "algvol/rational.hpp"

#include "algvol/errors.hpp"

#include <cctype>

namespace algvol {

Rational make_rational(const Int& num, const Int& den)
{
    if (den == 0)
        throw input_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(long num, long den)
{
    return make_rational(Int(num), Int(den));
}

Int int_gcd(const Int& a, const Int& b)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int int_lcm(const Int& a, const Int& b)
{
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

Int parse_int(std::string_view s)
{
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw input_error("malformed integer literal");
    Int v(std::string(s), 10);
    return neg ? Int(-v) : v;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1])))
        --e;
    std::string_view s = text.substr(b, e - b);
    if (s.empty())
        throw input_error("empty rational literal");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Int num = parse_int(s.substr(0, slash));
        Int den = parse_int(s.substr(slash + 1));
        return make_rational(num, den);
    }

    // decimal / scientific form
    std::string_view mant = s;
    long exp10 = 0;
    if (auto ep = s.find_first_of("eE"); ep != std::string_view::npos) {
        mant = s.substr(0, ep);
        Int ex = parse_int(s.substr(ep + 1));
        if (!ex.fits_slong_p())
            throw input_error("exponent out of range");
        exp10 = ex.get_si();
    }
    std::string digits;
    bool neg = false;
    size_t i = 0;
    if (i < mant.size() && (mant[i] == '+' || mant[i] == '-')) {
        neg = mant[i] == '-';
        ++i;
    }
    long frac_len = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < mant.size(); ++i) {
        char c = mant[i];
        if (c == '.') {
            if (seen_dot)
                throw input_error("malformed rational literal");
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            seen_digit = true;
            if (seen_dot)
                ++frac_len;
        } else {
            throw input_error("malformed rational literal");
        }
    }
    if (!seen_digit)
        throw input_error("malformed rational literal");
    Int m(digits, 10);
    if (neg)
        m = -m;
    Rational r(m);
    r.canonicalize();
    return r * pow10(exp10 - frac_len);
}

std::string rational_str(const Rational& x)
{
    return x.get_str();
}

Rational rational_pow(const Rational& base, long exp)
{
    if (exp < 0) {
        if (base == 0)
            throw input_error("zero to a negative power");
        return 1 / rational_pow(base, -exp);
    }
    Rational acc(1), b = base;
    unsigned long e = static_cast<unsigned long>(exp);
    while (e) {
        if (e & 1)
            acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

Int floor_int(const Rational& x)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Int ceil_int(const Rational& x)
{
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

bool is_integer(const Rational& x)
{
    return x.get_den() == 1;
}

Rational pow10(long k)
{
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
    return k >= 0 ? Rational(p) : make_rational(Int(1), p);
}

double to_double(const Rational& x)
{
    return x.get_d();
}

std::string decimal_string(const Rational& x, int digits)
{
    if (digits < 1)
        throw input_error("decimal_string needs digits >= 1");
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Int a = abs(x.get_num()) * scale;
    const Int& d = x.get_den();
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    if (2 * r >= d) // half away from zero
        q += 1;
    bool neg = sgn(x) < 0 && q != 0;
    Int ip = q / scale, fp = q % scale;
    std::string frac = fp.get_str();
    frac.insert(0, static_cast<size_t>(digits) - frac.size(), '0');
    return (neg ? "-" : "") + ip.get_str() + "." + frac;
}

Rational simplest_rational_in(const Rational& lo, const Rational& hi)
{
    if (lo > hi)
        throw input_error("simplest_rational_in: empty interval");
    if (lo == hi)
        return lo;
    if (lo <= 0 && 0 <= hi)
        return Rational(0);
    if (lo < 0) {
        Rational m = simplest_rational_in(-hi, -lo);
        return -m;
    }
    // 0 < lo < hi
    Int cl = ceil_int(lo);
    if (Rational(cl) <= hi)
        return Rational(cl);
    Int fl = floor_int(lo);
    Rational inner = simplest_rational_in(1 / (hi - Rational(fl)), 1 / (lo - Rational(fl)));
    return Rational(fl) + 1 / inner;
}

Rational rational_gcd(const Rational& a, const Rational& b)
{
    Rational x = abs(a), y = abs(b);
    if (x == 0)
        return y;
    if (y == 0)
        return x;
    Int num = int_gcd(x.get_num() * y.get_den(), y.get_num() * x.get_den());
    return make_rational(num, x.get_den() * y.get_den());
}

Rational rational_content(const std::vector<Rational>& v)
{
    Rational c(0);
    for (const Rational& x : v)
        c = rational_gcd(c, x);
    return c;
}

} // namespace algvol

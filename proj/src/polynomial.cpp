#include "algvol/polynomial.hpp"

#include "algvol/errors.hpp"

#include <cctype>
#include <sstream>

namespace algvol {

namespace {
const Rational kZero(0);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    normalize();
}

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs)
{
    normalize();
}

void Polynomial::normalize()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c)
{
    return Polynomial({c});
}

Polynomial Polynomial::variable()
{
    return Polynomial({Rational(0), Rational(1)});
}

Polynomial Polynomial::monomial(int deg, const Rational& c)
{
    if (deg < 0)
        throw input_error("monomial with negative degree");
    std::vector<Rational> v(static_cast<size_t>(deg) + 1, Rational(0));
    v.back() = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::from_int_coeffs(std::initializer_list<long> coeffs)
{
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (long x : coeffs)
        v.emplace_back(x);
    return Polynomial(std::move(v));
}

const Rational& Polynomial::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return kZero;
    return c_[static_cast<size_t>(i)];
}

const Rational& Polynomial::leading() const
{
    if (is_zero())
        return kZero;
    return c_.back();
}

Polynomial Polynomial::operator-() const
{
    std::vector<Rational> v(c_);
    for (auto& x : v)
        x = -x;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        v[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i)
        v[i] += o.c_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    if (is_zero() || o.is_zero())
        return Polynomial();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            v[i + j] += c_[i] * o.c_[j];
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& c) const
{
    std::vector<Rational> v(c_);
    for (auto& x : v)
        x *= c;
    return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& c, const Polynomial& p)
{
    return p * c;
}

std::pair<Polynomial, Polynomial> Polynomial::divrem(const Polynomial& q) const
{
    if (q.is_zero())
        throw input_error("division by the zero polynomial");
    std::vector<Rational> rem(c_);
    int dq = q.degree();
    int dr = static_cast<int>(rem.size()) - 1;
    if (dr < dq)
        return {Polynomial(), *this};
    std::vector<Rational> quot(static_cast<size_t>(dr - dq) + 1, Rational(0));
    const Rational& lead = q.leading();
    for (int k = dr; k >= dq; --k) {
        Rational f = rem[static_cast<size_t>(k)] / lead;
        if (f == 0)
            continue;
        quot[static_cast<size_t>(k - dq)] = f;
        for (int i = 0; i <= dq; ++i)
            rem[static_cast<size_t>(k - dq + i)] -= f * q.coeff(i);
    }
    rem.resize(static_cast<size_t>(dq));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::exact_divide(const Polynomial& q) const
{
    auto [quot, rem] = divrem(q);
    if (!rem.is_zero())
        throw computation_error("polynomial division expected to be exact");
    return quot;
}

Polynomial Polynomial::derivative() const
{
    if (degree() < 1)
        return Polynomial();
    std::vector<Rational> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(v));
}

Polynomial Polynomial::antiderivative_zero() const
{
    if (is_zero())
        return Polynomial();
    std::vector<Rational> v(c_.size() + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        v[i + 1] = c_[i] / Rational(static_cast<long>(i + 1));
    return Polynomial(std::move(v));
}

Rational Polynomial::eval(const Rational& x) const
{
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * x + c_[i];
    return acc;
}

double Polynomial::eval_double(double x) const
{
    double acc = 0.0;
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * x + to_double(c_[i]);
    return acc;
}

Interval Polynomial::eval_interval(const Interval& x) const
{
    Interval acc(Rational(0), Rational(0));
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * x + Interval::point(c_[i]);
    return acc;
}

Polynomial Polynomial::monic() const
{
    if (is_zero())
        return Polynomial();
    return *this * (1 / leading());
}

std::pair<Rational, Polynomial> Polynomial::content_primitive() const
{
    if (is_zero())
        return {Rational(0), Polynomial()};
    Int den(1);
    for (const Rational& x : c_)
        den = int_lcm(den, x.get_den());
    Int num(0);
    for (const Rational& x : c_)
        num = int_gcd(num, x.get_num() * (den / x.get_den()));
    Rational content = make_rational(num, den);
    if (sgn(leading()) < 0)
        content = -content;
    return {content, *this * (1 / content)};
}

Polynomial Polynomial::primitive_integer() const
{
    return content_primitive().second;
}

Polynomial Polynomial::translate(const Rational& shift) const
{
    // Horner on p(y + (-shift)) ... compute p(x - shift) by synthetic steps.
    Polynomial result;
    Polynomial lin({-shift, Rational(1)}); // x - shift
    for (size_t i = c_.size(); i-- > 0;)
        result = result * lin + Polynomial::constant(c_[i]);
    return result;
}

Polynomial Polynomial::scale_root(const Rational& k) const
{
    if (k == 0)
        throw input_error("scale_root with k = 0");
    std::vector<Rational> v(c_);
    int d = degree();
    for (int i = 0; i <= d; ++i)
        v[static_cast<size_t>(i)] *= rational_pow(k, d - i);
    return Polynomial(std::move(v));
}

std::string Polynomial::str() const
{
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& a = coeff(i);
        if (a == 0)
            continue;
        Rational mag = abs(a);
        if (first) {
            if (sgn(a) < 0)
                out << "-";
            first = false;
        } else {
            out << (sgn(a) < 0 ? "-" : "+");
        }
        bool unit = mag == 1;
        if (i == 0) {
            out << rational_str(mag);
        } else {
            if (!unit)
                out << rational_str(mag) << "*";
            out << "x";
            if (i > 1)
                out << "^" << i;
        }
    }
    return out.str();
}

Polynomial pseudo_rem_abs(const Polynomial& p, const Polynomial& q)
{
    if (q.is_zero())
        throw input_error("pseudo-remainder by zero polynomial");
    int dp = p.degree(), dq = q.degree();
    if (dp < dq)
        return p;
    Rational scale = rational_pow(abs(q.leading()), dp - dq + 1);
    return (p * scale).divrem(q).second;
}

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q)
{
    if (p.is_zero() && q.is_zero())
        throw input_error("gcd of two zero polynomials");
    if (p.is_zero())
        return q.monic();
    if (q.is_zero())
        return p.monic();
    // primitive PRS keeps coefficients small
    Polynomial a = p.primitive_integer();
    Polynomial b = q.primitive_integer();
    if (a.degree() < b.degree())
        std::swap(a, b);
    while (!b.is_zero()) {
        Polynomial r = pseudo_rem_abs(a, b).primitive_integer();
        a = b;
        b = r;
    }
    return a.monic();
}

Polynomial squarefree_part(const Polynomial& p)
{
    if (p.is_zero())
        throw input_error("squarefree part of the zero polynomial");
    if (p.degree() == 0)
        return Polynomial::constant(Rational(1));
    Polynomial g = poly_gcd(p, p.derivative());
    return p.exact_divide(g).monic();
}

namespace {

// Res(A, B) for primitive integer A, B using the Euclidean relation
// Res(A, B) = lc(B)^(deg A - deg r) * (-1)^(deg A * deg B) * Res(B, r),
// with content extracted from each remainder to bound growth.
Rational resultant_rec(const Polynomial& a, const Polynomial& b)
{
    int da = a.degree(), db = b.degree();
    if (db == 0)
        return rational_pow(b.leading(), da);
    if (da == 0)
        return rational_pow(a.leading(), db);
    if (da < db) {
        Rational sign = (da % 2 == 1 && db % 2 == 1) ? Rational(-1) : Rational(1);
        return sign * resultant_rec(b, a);
    }
    Polynomial r = a.divrem(b).second;
    if (r.is_zero())
        return Rational(0);
    auto [cr, rp] = r.content_primitive();
    int dr = rp.degree();
    Rational sign = (da % 2 == 1 && db % 2 == 1) ? Rational(-1) : Rational(1);
    return sign * rational_pow(b.leading(), da - dr) * rational_pow(cr, db)
        * resultant_rec(b, rp);
}

} // namespace

Rational resultant(const Polynomial& p, const Polynomial& q)
{
    if (p.is_zero() || q.is_zero())
        throw input_error("resultant of a zero polynomial");
    if (p.degree() == 0 && q.degree() == 0)
        return Rational(1);
    auto [cp, pp] = p.content_primitive();
    auto [cq, qp] = q.content_primitive();
    return rational_pow(cp, q.degree()) * rational_pow(cq, p.degree())
        * resultant_rec(pp, qp);
}

namespace {

struct Parser {
    std::string_view s;
    size_t pos = 0;

    void skip_ws()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eof()
    {
        skip_ws();
        return pos >= s.size();
    }
    char peek()
    {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c)
    {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Int number()
    {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start)
            throw input_error("polynomial parse error: digit expected");
        return Int(std::string(s.substr(start, pos - start)), 10);
    }

    Rational rational_literal()
    {
        Int num = number();
        if (accept('/'))
            return make_rational(num, number());
        return Rational(num);
    }

    // coefficient [*] x [^ exponent]  |  coefficient  |  x [^ exponent]
    Polynomial term()
    {
        Rational coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = rational_literal();
            have_coeff = true;
        }
        bool have_var = false;
        if (have_coeff)
            accept('*');
        char v = peek();
        if (v == 'x' || v == 't') {
            ++pos;
            have_var = true;
        }
        if (!have_coeff && !have_var)
            throw input_error("polynomial parse error: term expected");
        int exp = 0;
        if (have_var) {
            exp = 1;
            if (accept('^')) {
                Int e = number();
                if (!e.fits_sint_p() || e.get_si() > 4096)
                    throw input_error("polynomial parse error: exponent too large");
                exp = static_cast<int>(e.get_si());
            }
        }
        return Polynomial::monomial(exp, coeff);
    }

    Polynomial symbolic()
    {
        Polynomial p;
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        for (;;) {
            Polynomial t = term();
            p = neg ? p - t : p + t;
            if (eof())
                break;
            if (accept('-'))
                neg = true;
            else if (accept('+'))
                neg = false;
            else
                throw input_error("polynomial parse error: '+' or '-' expected");
        }
        return p;
    }
};

} // namespace

Polynomial parse_polynomial(std::string_view text)
{
    if (text.find(',') != std::string_view::npos) {
        std::vector<Rational> coeffs;
        size_t start = 0;
        while (start <= text.size()) {
            size_t comma = text.find(',', start);
            std::string_view piece = comma == std::string_view::npos
                ? text.substr(start)
                : text.substr(start, comma - start);
            coeffs.push_back(parse_rational(piece));
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        return Polynomial(std::move(coeffs));
    }
    Parser parser{text};
    if (parser.eof())
        throw input_error("empty polynomial text");
    Polynomial p = parser.symbolic();
    if (!parser.eof())
        throw input_error("polynomial parse error: trailing input");
    return p;
}

} // namespace algvol

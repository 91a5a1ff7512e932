#include "algvol/number_field.hpp"

#include "algvol/errors.hpp"
#include "algvol/linalg.hpp"
#include "algvol/roots.hpp"

namespace algvol {

std::shared_ptr<const NumberField> NumberField::make(const Polynomial& m,
                                                     bool require_totally_real,
                                                     Attestation att)
{
    if (m.is_zero() || m.degree() < 1)
        throw input_error("defining polynomial must have degree >= 1");
    if (!m.is_monic())
        throw input_error("defining polynomial must be monic");
    // irreducible polynomials are squarefree; skip the gcd for attested ones
    if (!att.irreducible && !(squarefree_part(m) == m.monic()))
        throw input_error("defining polynomial must be squarefree");

    auto f = std::shared_ptr<NumberField>(new NumberField());
    f->m_ = m;
    f->degree_ = m.degree();
    if (require_totally_real && !f->totally_real())
        throw input_error("field is not totally real");
    f->galois_attested_ = att.galois || f->degree_ <= 2;
    f->irreducible_proved_ = att.irreducible || f->degree_ == 1
        || modular_irreducibility_probe(m) == IrredOutcome::proved;

    // reduction table for x^d .. x^(2d-2)
    int d = f->degree_;
    std::vector<Rational> cur(m.coeffs().begin(), m.coeffs().end() - 1);
    for (auto& c : cur)
        c = -c; // x^d = -(m - x^d)
    for (int k = d; k <= 2 * d - 2; ++k) {
        f->power_table_.push_back(cur);
        // multiply by x and reduce
        std::vector<Rational> next(static_cast<size_t>(d), Rational(0));
        const Rational& top = cur[static_cast<size_t>(d - 1)];
        for (int i = d - 1; i > 0; --i)
            next[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)];
        if (top != 0)
            for (int i = 0; i < d; ++i)
                next[static_cast<size_t>(i)] -= top * m.coeff(i);
        cur = std::move(next);
    }
    return f;
}

const std::vector<Interval>& NumberField::real_roots() const
{
    std::call_once(roots_once_, [this] { real_roots_ = isolate_real_roots(m_); });
    return real_roots_;
}

std::vector<Rational> NumberField::reduce(std::vector<Rational> v) const
{
    size_t d = static_cast<size_t>(degree_);
    if (v.size() > 2 * d - 1 && degree_ > 0) {
        // callers never exceed this, but fail loudly rather than silently
        throw input_error("reduce: vector too long");
    }
    for (size_t k = v.size(); k-- > d;) {
        const Rational& c = v[k];
        if (c != 0) {
            const std::vector<Rational>& row = power_table_[k - d];
            for (size_t i = 0; i < d; ++i)
                v[i] += c * row[i];
        }
    }
    v.resize(d, Rational(0));
    return v;
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords))
{
    if (!field_)
        throw input_error("element without a field");
    if (static_cast<int>(coords_.size()) != field_->degree())
        throw input_error("coordinate vector length must equal the field degree");
}

FieldElement FieldElement::zero(FieldPtr field)
{
    std::vector<Rational> v(static_cast<size_t>(field->degree()), Rational(0));
    return FieldElement(std::move(field), std::move(v));
}

FieldElement FieldElement::constant(FieldPtr field, const Rational& c)
{
    std::vector<Rational> v(static_cast<size_t>(field->degree()), Rational(0));
    v[0] = c;
    return FieldElement(std::move(field), std::move(v));
}

FieldElement FieldElement::generator(FieldPtr field)
{
    if (field->degree() == 1) // x is congruent to the rational root
        return FieldElement(field, {-field->defining_poly().coeff(0)});
    std::vector<Rational> v(static_cast<size_t>(field->degree()), Rational(0));
    v[1] = 1;
    return FieldElement(std::move(field), std::move(v));
}

bool FieldElement::is_zero() const
{
    for (const Rational& c : coords_)
        if (c != 0)
            return false;
    return true;
}

namespace {

void check_same_field(const FieldElement& a, const FieldElement& b)
{
    if (a.field() == b.field())
        return;
    if (!(a.field()->defining_poly() == b.field()->defining_poly()))
        throw input_error("elements of different fields");
}

} // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const
{
    check_same_field(*this, o);
    std::vector<Rational> v(coords_);
    for (size_t i = 0; i < v.size(); ++i)
        v[i] += o.coords_[i];
    return FieldElement(field_, std::move(v));
}

FieldElement FieldElement::operator-(const FieldElement& o) const
{
    check_same_field(*this, o);
    std::vector<Rational> v(coords_);
    for (size_t i = 0; i < v.size(); ++i)
        v[i] -= o.coords_[i];
    return FieldElement(field_, std::move(v));
}

FieldElement FieldElement::operator-() const
{
    std::vector<Rational> v(coords_);
    for (auto& c : v)
        c = -c;
    return FieldElement(field_, std::move(v));
}

FieldElement FieldElement::operator*(const FieldElement& o) const
{
    check_same_field(*this, o);
    size_t d = coords_.size();
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (size_t i = 0; i < d; ++i) {
        if (coords_[i] == 0)
            continue;
        for (size_t j = 0; j < d; ++j)
            prod[i + j] += coords_[i] * o.coords_[j];
    }
    return FieldElement(field_, field_->reduce(std::move(prod)));
}

FieldElement FieldElement::operator*(const Rational& c) const
{
    std::vector<Rational> v(coords_);
    for (auto& x : v)
        x *= c;
    return FieldElement(field_, std::move(v));
}

FieldElement FieldElement::pow(long e) const
{
    if (e < 0)
        throw input_error("element power with negative exponent");
    FieldElement acc = FieldElement::constant(field_, Rational(1));
    FieldElement base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1)
            acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& o) const
{
    check_same_field(*this, o);
    return coords_ == o.coords_;
}

FieldElement eval_poly_at(const Polynomial& p, const FieldElement& a)
{
    FieldElement acc = FieldElement::zero(a.field());
    for (int i = p.degree(); i >= 0; --i)
        acc = acc * a + FieldElement::constant(a.field(), p.coeff(i));
    return acc;
}

Polynomial min_poly_of_element(const FieldElement& a)
{
    size_t d = static_cast<size_t>(a.field()->degree());
    DependenceFinder finder(d);
    FieldElement power = FieldElement::constant(a.field(), Rational(1));
    for (size_t k = 0;; ++k) {
        auto dep = finder.add(power.coords());
        if (dep) {
            // combo has length k+1 and says x^k = -sum_{j<k} c_j x^j after
            // normalizing the trailing coefficient to 1.
            std::vector<Rational> coeffs(k + 1, Rational(0));
            for (size_t j = 0; j < k; ++j)
                coeffs[j] = (*dep)[j];
            coeffs[k] = 1;
            return Polynomial(std::move(coeffs));
        }
        if (k > d)
            throw computation_error("no linear dependence found below field degree");
        power = power * a;
    }
}

bool is_primitive(const FieldElement& a)
{
    return min_poly_of_element(a).degree() == a.field()->degree();
}

Polynomial charpoly_of_element(const FieldElement& a)
{
    // Faddeev-LeVerrier on the multiplication-by-a matrix.
    size_t d = static_cast<size_t>(a.field()->degree());
    std::vector<std::vector<Rational>> m(d); // columns: a * x^j
    FieldElement basis = FieldElement::constant(a.field(), Rational(1));
    FieldElement gen = FieldElement::generator(a.field());
    for (size_t j = 0; j < d; ++j) {
        m[j] = (a * basis).coords();
        basis = basis * gen;
    }
    auto mat_mul = [&](const std::vector<std::vector<Rational>>& x,
                       const std::vector<std::vector<Rational>>& y) {
        std::vector<std::vector<Rational>> z(d, std::vector<Rational>(d, Rational(0)));
        for (size_t j = 0; j < d; ++j)
            for (size_t k = 0; k < d; ++k) {
                if (y[j][k] == 0)
                    continue;
                for (size_t i = 0; i < d; ++i)
                    z[j][i] += x[k][i] * y[j][k];
            }
        return z;
    };
    auto trace = [&](const std::vector<std::vector<Rational>>& x) {
        Rational t(0);
        for (size_t i = 0; i < d; ++i)
            t += x[i][i];
        return t;
    };

    std::vector<Rational> coeffs(d + 1, Rational(0));
    coeffs[d] = 1;
    std::vector<std::vector<Rational>> mk = m;
    for (size_t k = 1; k <= d; ++k) {
        Rational ck = -trace(mk) / Rational(static_cast<long>(k));
        coeffs[d - k] = ck;
        if (k == d)
            break;
        std::vector<std::vector<Rational>> shifted = mk;
        for (size_t i = 0; i < d; ++i)
            shifted[i][i] += ck;
        mk = mat_mul(m, shifted);
    }
    return Polynomial(std::move(coeffs));
}

Rational determinant(std::vector<std::vector<Rational>> cols)
{
    size_t n = cols.size();
    Rational det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && cols[c][p] == 0)
            ++p;
        if (p == n)
            return Rational(0);
        if (p != c) {
            for (size_t j = 0; j < n; ++j)
                std::swap(cols[j][p], cols[j][c]);
            det = -det;
        }
        det *= cols[c][c];
        for (size_t j = c + 1; j < n; ++j) {
            if (cols[j][c] == 0)
                continue;
            Rational f = cols[j][c] / cols[c][c];
            for (size_t i = c; i < n; ++i)
                cols[j][i] -= f * cols[c][i];
        }
    }
    return det;
}

namespace {

// Solve P * X = B column by column; P given as columns, must be invertible.
std::vector<std::vector<Rational>> solve_columns(std::vector<std::vector<Rational>> p,
                                                 std::vector<std::vector<Rational>> b)
{
    size_t n = p.size();
    // forward elimination with partial pivoting by first nonzero
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i)
        perm[i] = i;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && p[c][piv] == 0)
            ++piv;
        if (piv == n)
            throw computation_error("singular basis matrix");
        if (piv != c) {
            for (size_t j = 0; j < n; ++j)
                std::swap(p[j][piv], p[j][c]);
            for (auto& col : b)
                std::swap(col[piv], col[c]);
        }
        for (size_t r = c + 1; r < n; ++r) {
            if (p[c][r] == 0)
                continue;
            Rational f = p[c][r] / p[c][c];
            for (size_t j = c; j < n; ++j)
                p[j][r] -= f * p[j][c];
            for (auto& col : b)
                col[r] -= f * col[c];
        }
    }
    // back substitution
    for (auto& col : b) {
        for (size_t i = n; i-- > 0;) {
            Rational s = col[i];
            for (size_t j = i + 1; j < n; ++j)
                s -= p[j][i] * col[j];
            col[i] = s / p[i][i];
        }
    }
    return b;
}

} // namespace

CertificateMatrix certificate_det(const FieldElement& alpha)
{
    size_t d = static_cast<size_t>(alpha.field()->degree());
    Polynomial m = min_poly_of_element(alpha);
    if (m.degree() != static_cast<int>(d))
        throw input_error("certificate requires a primitive element");
    Polynomial big_m = m.antiderivative_zero();
    FieldElement w = eval_poly_at(big_m, alpha);

    std::vector<std::vector<Rational>> powers_w(d), powers_a(d);
    FieldElement pw = FieldElement::constant(alpha.field(), Rational(1));
    FieldElement pa = pw;
    for (size_t n = 0; n < d; ++n) {
        powers_w[n] = pw.coords();
        powers_a[n] = pa.coords();
        if (n + 1 < d) {
            pw = pw * w;
            pa = pa * alpha;
        }
    }
    CertificateMatrix cert;
    cert.columns = solve_columns(std::move(powers_a), std::move(powers_w));
    cert.det = determinant(cert.columns);
    return cert;
}

std::vector<Interval> numeric_embeddings(const FieldElement& a, const Rational& precision)
{
    const NumberField& f = *a.field();
    if (!f.totally_real())
        throw input_error("numeric embeddings require a totally real field");
    if (precision <= 0)
        throw input_error("precision must be positive");
    Polynomial coord_poly(std::vector<Rational>(a.coords()));
    std::vector<Interval> out;
    for (const Interval& root : f.real_roots()) {
        Interval r = root;
        Rational w = r.width() == 0 ? Rational(1) : r.width();
        Interval val = coord_poly.eval_interval(r);
        while (val.width() > precision) {
            w /= 16;
            r = refine_root(f.defining_poly(), r, w);
            val = coord_poly.eval_interval(r);
        }
        out.push_back(val);
    }
    return out;
}

} // namespace algvol

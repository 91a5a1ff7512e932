#include "algvol/quadrature.hpp"

#include "algvol/errors.hpp"

#include <cmath>

namespace algvol {

namespace {

// Exact comparison of a grid point with beta; grid points equal to beta
// contribute zero anyway since m(beta) = 0.
bool strictly_above_beta(const AlgebraicNumber& beta, const Rational& t)
{
    return beta.compare_rational(t) < 0;
}

} // namespace

OracleReport riemann_volume_r1(const Polynomial& m, const AlgebraicNumber& beta,
                               long t0, const RiemannSchedule& schedule,
                               const AlgebraicNumber& exact)
{
    if (m.is_zero() || !m.is_monic())
        throw input_error("riemann oracle needs a monic integrand");
    if (!(m.primitive_integer() == beta.min_poly()))
        throw input_error("beta must be a root of the integrand");
    if (t0 < 1 || beta.compare_rational(Rational(t0)) >= 0)
        throw input_error("t0 must exceed beta");
    if (schedule.k_min < 1 || schedule.k_max < schedule.k_min
        || schedule.k_max > (1L << 26))
        throw input_error("bad step schedule");

    double exact_d = exact.to_double();
    OracleReport report;
    report.exact_reference = exact.decimal(12);

    std::vector<double> coeffs;
    for (int i = 0; i <= m.degree(); ++i)
        coeffs.push_back(to_double(m.coeff(i)));
    auto horner = [&](double x) {
        double acc = 0.0;
        for (size_t i = coeffs.size(); i-- > 0;)
            acc = acc * x + coeffs[i];
        return acc;
    };

    for (long k = schedule.k_min; k <= schedule.k_max; k *= 2) {
        // smallest j with t_j > beta, by binary search on the exact grid
        auto grid_point = [&](long j) -> Rational {
            return Rational(-t0) + Rational(t0) * Rational(2 * j + 1) / Rational(k);
        };
        long lo = 0, hi = k; // predicate(j): t_j > beta, monotone in j
        while (lo < hi) {
            long mid = lo + (hi - lo) / 2;
            if (strictly_above_beta(beta, grid_point(mid)))
                hi = mid;
            else
                lo = mid + 1;
        }
        double sum = 0.0;
        double width = 2.0 * static_cast<double>(t0) / static_cast<double>(k);
        for (long j = lo; j < k; ++j) {
            double t = -static_cast<double>(t0)
                + width * (static_cast<double>(j) + 0.5);
            sum += horner(t);
        }
        double s_k = width * sum;
        report.values.emplace_back(k, s_k);
        report.residuals.push_back(std::fabs(s_k - exact_d));
        if (k == schedule.k_max)
            break;
    }
    return report;
}

double pi_demo_integrand(long n, double l1, double l2)
{
    double l0 = 1.0 - l1 - l2;
    double x = -2.0 * l0 + 2.0 * l1 + 4.0 * l2;
    double y = -2.0 * l0 - 2.0 * l1;
    double v = 1.0 - x * x - y * y;
    return v > 0.0 ? static_cast<double>(n) * v : 0.0;
}

OracleReport pi_demo(const PiDemoInput& input)
{
    if (input.n < 1)
        throw input_error("N must be a positive integer");
    if (input.quad.tolerance <= 0)
        throw input_error("tolerance must be positive");
    if (input.quad.max_level < 2 || input.quad.max_level > 14)
        throw input_error("max level out of range");

    double tol = to_double(input.quad.tolerance);
    double pi_ref = to_double(pi_reference_rational());
    OracleReport report;
    report.pi_reference = pi_reference_decimal(30);
    report.exact_reference = report.pi_reference;

    double prev = 0.0;
    bool have_prev = false;
    report.converged = false;
    for (int level = 1; level <= input.quad.max_level; ++level) {
        long cells_per_side = 1L << level;
        double h = 1.0 / static_cast<double>(cells_per_side);
        double area = 0.5 * h * h;
        double sum = 0.0;
        for (long i = 0; i < cells_per_side; ++i) {
            for (long j = 0; j < cells_per_side - i; ++j) {
                double l1 = (3.0 * static_cast<double>(i) + 1.0) * h / 3.0;
                double l2 = (3.0 * static_cast<double>(j) + 1.0) * h / 3.0;
                sum += pi_demo_integrand(input.n, l1, l2);
                if (j < cells_per_side - i - 1) {
                    double u1 = (3.0 * static_cast<double>(i) + 2.0) * h / 3.0;
                    double u2 = (3.0 * static_cast<double>(j) + 2.0) * h / 3.0;
                    sum += pi_demo_integrand(input.n, u1, u2);
                }
            }
        }
        double approx = 12.0 * area * sum;
        long n_triangles = cells_per_side * cells_per_side;
        report.values.emplace_back(n_triangles, approx);
        double over_3n = approx / (3.0 * static_cast<double>(input.n));
        report.residuals.push_back(std::fabs(over_3n - pi_ref));
        if (have_prev && std::fabs(approx - prev) <= tol) {
            report.converged = true;
            break;
        }
        prev = approx;
        have_prev = true;
    }
    double final_value = report.values.back().second;
    report.value_over_3n = final_value / (3.0 * static_cast<double>(input.n));
    report.residual_vs_pi = std::fabs(report.value_over_3n - pi_ref);
    return report;
}

std::string numeric_value(const AlgebraicNumber& a, int digits)
{
    return a.decimal(digits);
}

namespace {

// arctan(1/x) bracketed by alternating partial sums, exact rationals.
Rational arctan_inv(long x, int terms)
{
    Rational acc(0);
    Rational xs = make_rational(1, x);
    Rational x2 = xs * xs;
    Rational term = xs;
    for (int k = 0; k < terms; ++k) {
        Rational piece = term / Rational(2 * k + 1);
        acc += (k % 2 == 0) ? piece : -piece;
        term *= x2;
    }
    return acc;
}

} // namespace

const Rational& pi_reference_rational()
{
    // Machin: pi = 16 arctan(1/5) - 4 arctan(1/239); 25 and 8 terms push
    // the alternating-series truncation below 1e-31.
    static const Rational pi_value = 16 * arctan_inv(5, 25) - 4 * arctan_inv(239, 8);
    return pi_value;
}

std::string pi_reference_decimal(int digits)
{
    return decimal_string(pi_reference_rational(), digits);
}

ConvergenceSummary convergence_report(const OracleReport& report, double threshold)
{
    const auto& res = report.residuals;
    if (res.size() < 3)
        throw input_error("convergence report needs at least 3 entries");
    for (size_t i = 1; i < report.values.size(); ++i)
        if (report.values[i].first != 2 * report.values[i - 1].first
            && report.values[i].first != 4 * report.values[i - 1].first)
            throw input_error("convergence report needs a doubling schedule");

    size_t n = res.size();
    size_t tail_start = n - 1;
    while (tail_start > 0 && res[tail_start - 1] >= res[tail_start])
        --tail_start;
    ConvergenceSummary summary;
    summary.tail_start = static_cast<int>(tail_start);
    summary.final_residual = res.back();
    summary.pass = tail_start + 3 <= n && res.back() < threshold;

    double order_sum = 0.0;
    int order_terms = 0;
    for (size_t i = tail_start; i + 1 < n; ++i) {
        if (res[i + 1] > 0.0 && res[i] > 0.0) {
            order_sum += std::log2(res[i] / res[i + 1]);
            ++order_terms;
        }
    }
    summary.empirical_order = order_terms ? order_sum / order_terms : 16.0;
    if (!summary.pass)
        summary.note = res.back() < threshold
            ? "residual tail is not non-increasing"
            : "final residual above threshold";
    return summary;
}

} // namespace algvol

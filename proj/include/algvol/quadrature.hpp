#ifndef ALGVOL_QUADRATURE_HPP
#define ALGVOL_QUADRATURE_HPP

#include "algvol/algebraic.hpp"
#include "algvol/polynomial.hpp"

#include <string>
#include <utility>
#include <vector>

namespace algvol {

struct FloatApprox {
    double value = 0.0;
    double error_bound = 0.0; // quadrature truncation; rounding subordinate
};

struct RiemannSchedule {
    long k_min = 16;
    long k_max = 4096; // doubling schedule k_min, 2*k_min, ..., k_max
};

struct SimplexQuadConfig {
    Rational tolerance = Rational(1, 100000000);
    int max_level = 11; // 4^level triangles at the last level
};

struct PiDemoInput {
    long n = 1; // the intersection number A^2 = -D1^2 = -D2^2 = N
    SimplexQuadConfig quad;
};

struct OracleReport {
    std::vector<std::pair<long, double>> values; // (k or cell count, approximation)
    std::string exact_reference;                 // decimal string when available
    std::vector<double> residuals;
    bool converged = true;
    // pi demo extras
    double value_over_3n = 0.0;
    double residual_vs_pi = 0.0;
    std::string pi_reference;
};

// Midpoint Riemann sums of f(t) = m(t) for t > beta else 0 over
// [-t0, t0], S_k = (2 t0 / k) * sum f(-t0 + 2 t0 (j+1/2)/k), with the
// beta comparison decided exactly.  Residuals are taken against `exact`,
// the only pipeline value the oracle reads.
OracleReport riemann_volume_r1(const Polynomial& m, const AlgebraicNumber& beta,
                               long t0, const RiemannSchedule& schedule,
                               const AlgebraicNumber& exact);

// 12 * integral over the standard 2-simplex of N * max(0, 1 - x^2 - y^2)
// with x = -2 l0 + 2 l1 + 4 l2 and y = -2 l0 - 2 l1 (barycenter rule on a
// uniform triangulation, refined until two levels agree within tolerance).
// Reports the approximation, the approximation over 3N, and the residual
// against pi.
OracleReport pi_demo(const PiDemoInput& input);

// The simplex integrand above at a single barycentric point.
double pi_demo_integrand(long n, double l1, double l2);

// Decimal rendering of an algebraic number, correct to `digits` digits.
std::string numeric_value(const AlgebraicNumber& a, int digits);

// Reference pi bracketed by a Machin-style arctangent series; width below
// 1e-30.
const Rational& pi_reference_rational();
std::string pi_reference_decimal(int digits);

struct ConvergenceSummary {
    bool pass = false;
    int tail_start = 0;     // residuals are non-increasing from this index
    double final_residual = 0.0;
    double empirical_order = 0.0;
    std::string note;
};

// Requires >= 3 entries with a doubling schedule.
ConvergenceSummary convergence_report(const OracleReport& report, double threshold);

} // namespace algvol

#endif

#ifndef ALGVOL_COMBINE_HPP
#define ALGVOL_COMBINE_HPP

#include "algvol/algebraic.hpp"

namespace algvol {

enum class CombineOp { product, sum };

// Exact minimal polynomial of a*b or a+b, primarily by first linear
// dependence among powers of x*y (resp. x+y) in Q[x,y]/(f_a, f_b), with an
// isolating interval obtained by interval arithmetic on the operand
// intervals.  Minimality is certified exactly (degree-1 operand, coprime
// degrees, rational value, complete decision up to degree 4, or the
// modular probe); an uncertifiable combination raises computation_error.
AlgebraicNumber min_poly_combine(const AlgebraicNumber& a, const AlgebraicNumber& b,
                                 CombineOp op);

// The raw annihilator from the composite algebra (squarefree, vanishing at
// the combined value, degree <= deg a * deg b) without the minimality
// selection; exposed for cross-checks.
Polynomial combine_annihilator(const AlgebraicNumber& a, const AlgebraicNumber& b,
                               CombineOp op);

// Exact irreducibility decision over Q for squarefree integer polynomials
// of degree <= 4 (degree >= 5 falls back to the modular probe and may
// return unproved).
enum class IrredDecision { irreducible, reducible, unknown };
IrredDecision decide_irreducible(const Polynomial& p);

} // namespace algvol

#endif

#ifndef ALGVOL_MODULAR_HPP
#define ALGVOL_MODULAR_HPP

#include "algvol/polynomial.hpp"

namespace algvol {

enum class IrredOutcome {
    proved,   // no proper factor degree is consistent across the probed primes
    unproved, // inconclusive; the polynomial may or may not be irreducible
};

// Sufficient-condition irreducibility test over Q: intersect the sets of
// factor degrees achievable from distinct-degree factorizations modulo
// several small primes.  Squarefree input of degree >= 1.
IrredOutcome modular_irreducibility_probe(const Polynomial& p);

} // namespace algvol

#endif

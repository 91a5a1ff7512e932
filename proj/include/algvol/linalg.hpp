#ifndef ALGVOL_LINALG_HPP
#define ALGVOL_LINALG_HPP

#include "algvol/rational.hpp"

#include <optional>
#include <vector>

namespace algvol {

// Incremental exact row reduction for first-linear-dependence detection.
// Stored combos express each reduced row in terms of the original vectors,
// so the dependence coefficients come out directly.
struct DependenceFinder {
    size_t dim;
    std::vector<size_t> pivot;
    std::vector<std::vector<Rational>> rows;
    std::vector<std::vector<Rational>> combos;

    explicit DependenceFinder(size_t d) : dim(d) {}

    // Returns c with v = sum c_j * original_j when v is dependent on the
    // vectors added so far (c.back() corresponds to v itself and is 1);
    // otherwise stores v and returns nullopt.
    std::optional<std::vector<Rational>> add(std::vector<Rational> v)
    {
        std::vector<Rational> combo(rows.size() + 1, Rational(0));
        combo.back() = 1;
        for (size_t r = 0; r < rows.size(); ++r) {
            const Rational& x = v[pivot[r]];
            if (x == 0)
                continue;
            Rational f = x / rows[r][pivot[r]];
            for (size_t i = 0; i < dim; ++i)
                v[i] -= f * rows[r][i];
            for (size_t i = 0; i < combos[r].size(); ++i)
                combo[i] -= f * combos[r][i];
        }
        size_t p = dim;
        for (size_t i = 0; i < dim; ++i)
            if (v[i] != 0) {
                p = i;
                break;
            }
        if (p == dim)
            return combo;
        pivot.push_back(p);
        rows.push_back(std::move(v));
        combos.push_back(std::move(combo));
        return std::nullopt;
    }
};

} // namespace algvol

#endif

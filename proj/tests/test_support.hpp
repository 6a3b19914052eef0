#pragma once

#include <random>
#include <vector>

#include "polymaj/harness.hpp"
#include "polymaj/polymaj.hpp"

namespace polymaj::test {

/// Worked degree-2 instance: lam = (2,-2), mu = (1,-1).
inline PolyPair pair2() { return PolyPair{RootList{2, -2}, RootList{1, -1}}; }

/// Worked degree-4 instance with an interior partial-sum tie at k = 2.
inline PolyPair pair4() { return PolyPair{RootList{5, 1, -1, -5}, RootList{4, 2, -2, -4}}; }

inline Rational rand_rational(std::mt19937_64& rng, long lo_units, long hi_units, long denom) {
    std::uniform_int_distribution<long> d(lo_units, hi_units);
    return rational(d(rng), denom);
}

/// Strictly decreasing random root list on the lattice (1/denom)Z.
inline RootList rand_simple_roots(std::mt19937_64& rng, int n, long denom = 16) {
    std::vector<Rational> roots;
    Rational top = rand_rational(rng, 8 * denom, 10 * denom, denom);
    for (int i = 0; i < n; ++i) {
        roots.push_back(top);
        top -= rand_rational(rng, 1, 2 * denom, denom);
    }
    return RootList(std::move(roots));
}

inline GenSpec spec_for(int degree, std::uint64_t seed, bool equalize) {
    GenSpec s;
    s.degree = degree;
    s.seed = seed;
    s.equalize_sums = equalize;
    return s;
}

/// Product-form residue oracle: prod_l (x_i - other_l) / prod_{l != i} (x_i - own_l),
/// evaluated straight from the root lists (no polynomial expansion involved).
inline Rational residue_oracle(const std::vector<Rational>& poles, const std::vector<Rational>& zeros,
                               int i) {
    Rational num(1), den(1);
    for (const auto& z : zeros) num *= poles[static_cast<size_t>(i)] - z;
    for (size_t l = 0; l < poles.size(); ++l)
        if (static_cast<int>(l) != i) den *= poles[static_cast<size_t>(i)] - poles[l];
    return num / den;
}

}  // namespace polymaj::test

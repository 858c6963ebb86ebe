#pragma once

#include "plumbing/graph.hpp"

#include <vector>

namespace plumbing {

// K = sum r_i E_i determined by adjunction: (I r)_i = 2 g_i - 2 - e_i.
struct CanonicalCycle {
    QVector coefficients;
    Rational k_squared;
    std::vector<BigInt> adjunction_rhs; // K . E_i

    bool k_squared_integral() const { return k_squared.is_integer(); }
};

// The graph must already have passed validate().
CanonicalCycle canonical_cycle(const PlumbingGraph& g);

} // namespace plumbing

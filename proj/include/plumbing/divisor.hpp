#pragma once

#include "plumbing/canonical.hpp"

#include <vector>

namespace plumbing {

// D = sum d_i E_i, indexed by vertex declaration order.
struct Cycle {
    std::vector<BigInt> coefficients;

    bool effective() const;
    bool nonzero() const;
    friend bool operator==(const Cycle&, const Cycle&) = default;
};

// n_v = -D . E_v, the number of binding circles over each vertex.
struct BindingVector {
    std::vector<BigInt> entries;

    bool positive() const;
    friend bool operator==(const BindingVector&, const BindingVector&) = default;
};

// Per-vertex value of (D + E + K) . E_i + 2; the condition holds when every
// entry is <= 0.
struct ConditionReport {
    bool holds = false;
    std::vector<BigInt> slack;
};

struct DivisorResult {
    Cycle divisor;
    BindingVector binding;
};

// I . d computed directly from the graph.
std::vector<BigInt> intersect(const PlumbingGraph& g, const std::vector<BigInt>& d);

BindingVector binding_of(const PlumbingGraph& g, const Cycle& d);

ConditionReport cnp_condition(const PlumbingGraph& g, const CanonicalCycle& k, const Cycle& d);
inline bool cnp_condition_holds(const PlumbingGraph& g, const CanonicalCycle& k, const Cycle& d) {
    return cnp_condition(g, k, d).holds;
}

// Pointwise-minimal d >= 1 satisfying the condition above together with
// n_v >= 1 at every vertex. Starts from d = (1,...,1) and raises the first
// violating coordinate (in declaration order) to the least value that
// satisfies its row; on an M-matrix system this climbs monotonically to the
// least feasible point.
DivisorResult minimal_cnp_divisor(const PlumbingGraph& g, const CanonicalCycle& k);

// k * D, re-verified against the condition. Scaling a feasible divisor can
// never break it; a failure throws ConsistencyError.
Cycle scale_divisor(const PlumbingGraph& g, const CanonicalCycle& k, const Cycle& d, const BigInt& factor);

} // namespace plumbing

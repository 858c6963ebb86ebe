#include "plumbing/canonical.hpp"

#include "plumbing/errors.hpp"

namespace plumbing {

CanonicalCycle canonical_cycle(const PlumbingGraph& g) {
    CanonicalCycle k;
    k.adjunction_rhs.reserve(g.size());
    for (const Vertex& v : g.vertices()) {
        k.adjunction_rhs.emplace_back(2 * BigInt(v.genus) - 2 - v.euler);
    }
    QVector rhs = to_qvector(k.adjunction_rhs);
    QMatrix I = intersection_matrix(g);
    k.coefficients = solve(I, rhs);
    if (I * k.coefficients != rhs) {
        throw ConsistencyError("canonical cycle fails the adjunction residual check");
    }
    k.k_squared = dot(k.coefficients, rhs);
    return k;
}

} // namespace plumbing

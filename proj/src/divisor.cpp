#include "plumbing/divisor.hpp"

#include "plumbing/errors.hpp"

#include <algorithm>

namespace plumbing {

namespace {

void require_length(const PlumbingGraph& g, std::size_t n, const char* what) {
    if (n != g.size()) {
        throw DimensionError(std::string(what) + " has " + std::to_string(n) + " entries, graph has " +
                             std::to_string(g.size()) + " vertices");
    }
}

// ceil(a / b) for b > 0.
BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (q * b < a) ++q;
    return q;
}

} // namespace

bool Cycle::effective() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](const BigInt& x) { return x >= 0; });
}

bool Cycle::nonzero() const {
    return std::any_of(coefficients.begin(), coefficients.end(), [](const BigInt& x) { return x != 0; });
}

bool BindingVector::positive() const {
    return std::all_of(entries.begin(), entries.end(), [](const BigInt& x) { return x >= 1; });
}

std::vector<BigInt> intersect(const PlumbingGraph& g, const std::vector<BigInt>& d) {
    require_length(g, d.size(), "cycle");
    std::vector<BigInt> out(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        out[v] = g.vertex(v).euler * d[v];
        for (std::size_t u : g.neighbors(v)) out[v] += d[u];
    }
    return out;
}

BindingVector binding_of(const PlumbingGraph& g, const Cycle& d) {
    BindingVector n{intersect(g, d.coefficients)};
    for (BigInt& x : n.entries) x = -x;
    return n;
}

ConditionReport cnp_condition(const PlumbingGraph& g, const CanonicalCycle& k, const Cycle& d) {
    require_length(g, d.coefficients.size(), "divisor");
    require_length(g, k.adjunction_rhs.size(), "canonical cycle");
    if (!d.effective() || !d.nonzero()) {
        throw ValidationError("divisor must be effective and nonzero");
    }
    std::vector<BigInt> dd = intersect(g, d.coefficients);
    std::vector<BigInt> ee = intersect(g, std::vector<BigInt>(g.size(), 1));
    ConditionReport r;
    r.holds = true;
    r.slack.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        BigInt s = dd[i] + ee[i] + k.adjunction_rhs[i] + 2;
        if (s > 0) r.holds = false;
        r.slack.push_back(std::move(s));
    }
    return r;
}

DivisorResult minimal_cnp_divisor(const PlumbingGraph& g, const CanonicalCycle& k) {
    validate(g);
    require_length(g, k.adjunction_rhs.size(), "canonical cycle");
    const std::size_t m = g.size();

    // Row bounds: (I d)_i <= bound_i.
    std::vector<BigInt> ee = intersect(g, std::vector<BigInt>(m, 1));
    std::vector<BigInt> bound(m);
    for (std::size_t i = 0; i < m; ++i) {
        BigInt c = -(ee[i] + k.adjunction_rhs[i] + 2);
        bound[i] = std::min(c, BigInt(-1));
    }

    std::vector<BigInt> d(m, 1);
    for (;;) {
        std::size_t violated = m;
        BigInt neighbor_sum;
        for (std::size_t i = 0; i < m; ++i) {
            neighbor_sum = 0;
            for (std::size_t u : g.neighbors(i)) neighbor_sum += d[u];
            if (g.vertex(i).euler * d[i] + neighbor_sum > bound[i]) {
                violated = i;
                break;
            }
        }
        if (violated == m) break;
        // e_i < 0 on a negative definite graph: raise d_i until
        // e_i d_i + neighbor_sum <= bound_i.
        BigInt magnitude = -g.vertex(violated).euler;
        d[violated] = ceil_div(neighbor_sum - bound[violated], magnitude);
    }

    DivisorResult out{Cycle{std::move(d)}, {}};
    out.binding = binding_of(g, out.divisor);
    if (!out.binding.positive() || !cnp_condition_holds(g, k, out.divisor)) {
        throw ConsistencyError("minimal divisor search ended at an infeasible point");
    }
    return out;
}

Cycle scale_divisor(const PlumbingGraph& g, const CanonicalCycle& k, const Cycle& d, const BigInt& factor) {
    if (factor < 1) {
        throw ValidationError("scale factor must be a positive integer");
    }
    if (!cnp_condition_holds(g, k, d)) {
        throw ValidationError("divisor does not satisfy the open-book existence condition");
    }
    Cycle scaled = d;
    for (BigInt& x : scaled.coefficients) x *= factor;
    if (!cnp_condition_holds(g, k, scaled)) {
        throw ConsistencyError("scaled divisor fails the open-book existence condition");
    }
    return scaled;
}

} // namespace plumbing

#pragma once

#include "plumbing/graph.hpp"

namespace plumbing {

// Hypersurface family (x^s + y^s)(x^t + y^{Nt}) + z^{N-1} = 0.
struct FamilyParams {
    long long s = 0;
    long long t = 0;
    long long n = 0; // N

    // t = 30N - 33 for s = 3: the specialization with closed-form invariants.
    static FamilyParams specialized(long long n) { return {3, 30 * n - 33, n}; }

    // Throws PreconditionError naming the first violated constraint:
    // positivity, N >= 3, (N-1) | (s+t), gcd(N-1, t) = 1, integral genera.
    void validate() const;
};

struct SmoothingInvariants {
    BigInt mu;
    BigInt sigma;
    BigInt p_g;
    BigInt k_squared;
    long long h = 0;
    long long m = 0;
    int b1 = 0; // always 0 for smoothings of normal surface singularities
};

// mu(x^a + y^b) = (a-1)(b-1); 0 when either exponent is 1.
BigInt brieskorn_mu(long long a, long long b);

// One blow-up of the plane curve (x^s+y^s)(x^t+y^{Nt}): multiplicity s+t,
// s+1 tangent lines, and a single singular point u^t + y^{(N-1)t} on the
// proper transform.
BigInt plane_curve_mu(const FamilyParams& p);

// mu(f + z^{N-1}) = mu(f) (N-2), no parameter checks.
BigInt suspension_mu(const BigInt& plane_mu, long long n);

BigInt surface_mu(const FamilyParams& p);

// Two curves meeting once: A (e = -N, g = (s-1)(N-2)/2), B (e = -1,
// g = (t-1)(N-2)/2).
PlumbingGraph family_resolution_graph(const FamilyParams& p);

// Durfee: mu = K^2 - h + m + 12 p_g and sigma = -(2 mu + K^2 + m + 2h)/3.
// p_g is solved from the first; divisibility and p_g >= 0 are enforced
// with ConsistencyError.
SmoothingInvariants durfee_invariants(const PlumbingGraph& g, const BigInt& mu);

struct ClosedForm {
    BigInt mu;
    Rational sigma;
};

// Quartics in N for the s = 3, t = 30N - 33 specialization. Requires N >= 3
// and 3 not dividing N - 1.
ClosedForm closed_form_check(long long n);

struct FamilyReport {
    FamilyParams params;
    PlumbingGraph graph;
    BigInt plane_mu;
    SmoothingInvariants invariants;
    // Only present for the s = 3, t = 30N - 33 specialization.
    bool has_closed_form = false;
    ClosedForm closed_form;
    bool closed_form_match = false;
};

FamilyReport evaluate_family(const FamilyParams& p);

} // namespace plumbing

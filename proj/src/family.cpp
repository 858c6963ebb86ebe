#include "plumbing/family.hpp"

#include "plumbing/canonical.hpp"
#include "plumbing/errors.hpp"

#include <numeric>
#include <string>

namespace plumbing {

void FamilyParams::validate() const {
    if (s < 1 || t < 1 || n < 1) {
        throw PreconditionError("family parameters s, t, N must be positive integers");
    }
    if (n < 3) {
        throw PreconditionError("family parameter N must be at least 3");
    }
    if ((s + t) % (n - 1) != 0) {
        throw PreconditionError("N-1 = " + std::to_string(n - 1) + " must divide s+t = " + std::to_string(s + t));
    }
    if (std::gcd(n - 1, t) != 1) {
        throw PreconditionError("gcd(N-1, t) = gcd(" + std::to_string(n - 1) + ", " + std::to_string(t) +
                                ") = " + std::to_string(std::gcd(n - 1, t)) + " must be 1");
    }
    if (((s - 1) * (n - 2)) % 2 != 0) {
        throw PreconditionError("genus (s-1)(N-2)/2 of curve A is not an integer");
    }
    if (((t - 1) * (n - 2)) % 2 != 0) {
        throw PreconditionError("genus (t-1)(N-2)/2 of curve B is not an integer");
    }
}

BigInt brieskorn_mu(long long a, long long b) {
    if (a < 1 || b < 1) {
        throw PreconditionError("Brieskorn exponents must be positive");
    }
    if (a == 1 || b == 1) return 0;
    return BigInt(a - 1) * (b - 1);
}

BigInt plane_curve_mu(const FamilyParams& p) {
    p.validate();
    BigInt d = BigInt(p.s) + p.t;
    BigInt r = BigInt(p.s) + 1;
    BigInt transform_mu = brieskorn_mu(p.t, (p.n - 1) * p.t);
    return d * (d - 1) + transform_mu + 1 - r;
}

BigInt suspension_mu(const BigInt& plane_mu, long long n) { return plane_mu * (n - 2); }

BigInt surface_mu(const FamilyParams& p) { return suspension_mu(plane_curve_mu(p), p.n); }

PlumbingGraph family_resolution_graph(const FamilyParams& p) {
    p.validate();
    PlumbingGraph g;
    g.add_vertex("A", -p.n, (p.s - 1) * (p.n - 2) / 2);
    g.add_vertex("B", -1, (p.t - 1) * (p.n - 2) / 2);
    g.add_edge(0, 1);
    return g;
}

SmoothingInvariants durfee_invariants(const PlumbingGraph& g, const BigInt& mu) {
    GraphSummary summary = validate(g);
    CanonicalCycle k = canonical_cycle(g);
    if (!k.k_squared_integral()) {
        throw ConsistencyError("K^2 = " + k.k_squared.str() + " is not an integer");
    }
    if (mu < 0) {
        throw ConsistencyError("Milnor number must be nonnegative");
    }

    SmoothingInvariants inv;
    inv.mu = mu;
    inv.k_squared = k.k_squared.to_integer();
    inv.h = summary.h;
    inv.m = static_cast<long long>(summary.m);

    BigInt sigma_num = 2 * inv.mu + inv.k_squared + inv.m + 2 * BigInt(inv.h);
    if (sigma_num % 3 != 0) {
        throw ConsistencyError("2 mu + K^2 + m + 2h = " + sigma_num.str() + " is not divisible by 3");
    }
    inv.sigma = -sigma_num / 3;

    BigInt pg_num = inv.mu - inv.k_squared + inv.h - inv.m;
    if (pg_num % 12 != 0) {
        throw ConsistencyError("mu - K^2 + h - m = " + pg_num.str() + " is not divisible by 12");
    }
    inv.p_g = pg_num / 12;
    if (inv.p_g < 0) {
        throw ConsistencyError("geometric genus came out negative: " + inv.p_g.str());
    }
    return inv;
}

ClosedForm closed_form_check(long long n) {
    if (n < 3 || (n - 1) % 3 == 0) {
        throw PreconditionError("closed forms need N >= 3 with N-1 not divisible by 3");
    }
    const BigInt x = n;
    const BigInt x2 = x * x;
    const BigInt x3 = x2 * x;
    const BigInt x4 = x3 * x;
    ClosedForm cf;
    cf.mu = 900 * x4 - 3810 * x3 + 5292 * x2 - 2705 * x + 322;
    cf.sigma = Rational(-300 * x4 + 960 * x3 - 2) - Rational(BigInt(2348) * x2, 3) + Rational(BigInt(379) * x, 3);
    if (!cf.sigma.is_integer()) {
        throw ConsistencyError("closed-form signature " + cf.sigma.str() + " is not an integer");
    }
    return cf;
}

FamilyReport evaluate_family(const FamilyParams& p) {
    FamilyReport r;
    r.params = p;
    r.graph = family_resolution_graph(p);
    r.plane_mu = plane_curve_mu(p);
    r.invariants = durfee_invariants(r.graph, suspension_mu(r.plane_mu, p.n));
    if (p.s == 3 && p.t == 30 * p.n - 33 && (p.n - 1) % 3 != 0) {
        r.has_closed_form = true;
        r.closed_form = closed_form_check(p.n);
        r.closed_form_match = r.closed_form.mu == r.invariants.mu && r.closed_form.sigma == Rational(r.invariants.sigma);
    }
    return r;
}

} // namespace plumbing

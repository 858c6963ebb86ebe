#include "plumbing/openbook.hpp"

#include "plumbing/errors.hpp"

namespace plumbing {

std::vector<BigInt> OpenBookDescription::multiplicities() const {
    std::vector<BigInt> out;
    out.reserve(vertices.size());
    for (const auto& v : vertices) out.push_back(v.multiplicity);
    return out;
}

std::vector<BigInt> OpenBookDescription::bindings() const {
    std::vector<BigInt> out;
    out.reserve(vertices.size());
    for (const auto& v : vertices) out.push_back(v.binding);
    return out;
}

QVector solve_multiplicities(const PlumbingGraph& g, const BindingVector& n) {
    if (n.entries.size() != g.size()) {
        throw DimensionError("binding vector length does not match the graph");
    }
    if (!n.positive()) {
        throw ValidationError("binding vector entries must all be >= 1");
    }
    QVector rhs;
    rhs.reserve(n.entries.size());
    for (const BigInt& x : n.entries) rhs.emplace_back(-x);
    // I is symmetric, so N I = -n and I N = -n coincide.
    QVector mult = solve(intersection_matrix(g), rhs);
    for (std::size_t v = 0; v < mult.size(); ++v) {
        if (mult[v].sign() <= 0) {
            throw ConsistencyError("multiplicity at vertex '" + g.vertex(v).id + "' is " + mult[v].str() +
                                   "; expected a positive value on a negative definite graph");
        }
    }
    return mult;
}

OpenBookDescription describe_open_book(const PlumbingGraph& g, const BigInt& scale,
                                       const std::vector<BigInt>& multiplicities,
                                       const std::vector<BigInt>& bindings) {
    if (multiplicities.size() != g.size() || bindings.size() != g.size()) {
        throw DimensionError("open book data does not match the graph");
    }
    OpenBookDescription ob;
    ob.scale = scale;
    ob.page.euler_characteristic = 0;
    ob.page.boundary_components = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Vertex& vx = g.vertex(i);
        VertexPiece p;
        p.id = vx.id;
        p.euler = vx.euler;
        p.genus = vx.genus;
        p.degree = g.degree(i);
        p.multiplicity = multiplicities[i];
        p.binding = bindings[i];
        p.outer_slope = {-vx.euler * p.multiplicity, p.multiplicity};
        BigInt base_chi = 2 - 2 * BigInt(vx.genus) - static_cast<long long>(p.degree) - p.binding;
        ob.page.euler_characteristic += p.multiplicity * base_chi;
        ob.page.boundary_components += p.binding;
        ob.vertices.push_back(std::move(p));
    }
    for (auto [u, v] : g.edges()) {
        const BigInt& mu = multiplicities[u];
        const BigInt& mv = multiplicities[v];
        ob.edges.push_back(EdgePiece{u, v, {mv, -mu}, {mu, -mv}, boost::multiprecision::gcd(mu, mv)});
    }
    return ob;
}

OpenBookDescription build_open_book(const PlumbingGraph& g, const BindingVector& n,
                                    std::optional<BigInt> explicit_scale) {
    QVector mult = solve_multiplicities(g, n);
    BigInt k = lcm_of_denominators(mult);
    if (explicit_scale) {
        if (*explicit_scale < 1 || *explicit_scale % k != 0) {
            throw ValidationError("scale " + explicit_scale->str() + " is not a positive multiple of the minimal scale " +
                                  k.str());
        }
        k = *explicit_scale;
    }
    std::vector<BigInt> m_int;
    std::vector<BigInt> b_int;
    for (std::size_t v = 0; v < g.size(); ++v) {
        m_int.push_back((mult[v] * Rational(k)).to_integer());
        b_int.push_back(n.entries[v] * k);
    }
    OpenBookDescription ob = describe_open_book(g, k, m_int, b_int);
    if (GluingReport r = verify_gluing(ob); !r.ok) {
        throw ConsistencyError("constructed open book fails gluing verification: " + r.diagnostics.front());
    }
    return ob;
}

GluingReport verify_gluing(const OpenBookDescription& ob) {
    GluingReport r;
    auto fail = [&r](std::string msg) {
        r.ok = false;
        r.diagnostics.push_back(std::move(msg));
    };
    const std::size_t m = ob.vertices.size();

    std::vector<BigInt> balance(m);
    for (std::size_t i = 0; i < m; ++i) {
        const VertexPiece& p = ob.vertices[i];
        if (p.multiplicity < 1) fail("vertex " + p.id + ": multiplicity " + p.multiplicity.str() + " < 1");
        if (p.binding < 1) fail("vertex " + p.id + ": binding count " + p.binding.str() + " < 1");
        if (p.outer_slope != CurveClass{-p.euler * p.multiplicity, p.multiplicity}) {
            fail("vertex " + p.id + ": outer slope does not match (-e M, M)");
        }
        balance[i] = p.euler * p.multiplicity + p.binding;
    }

    for (const EdgePiece& e : ob.edges) {
        if (e.u >= m || e.v >= m) {
            fail("edge references a vertex out of range");
            continue;
        }
        const VertexPiece& pu = ob.vertices[e.u];
        const VertexPiece& pv = ob.vertices[e.v];
        balance[e.u] += pv.multiplicity;
        balance[e.v] += pu.multiplicity;

        std::string name = "edge " + pu.id + "--" + pv.id;
        if (e.class_at_u != CurveClass{pv.multiplicity, -pu.multiplicity}) {
            fail(name + ": curve class at " + pu.id + " does not match (M_" + pv.id + ", -M_" + pu.id + ")");
        }
        if (e.class_at_v != CurveClass{pu.multiplicity, -pv.multiplicity}) {
            fail(name + ": curve class at " + pv.id + " does not match (M_" + pu.id + ", -M_" + pv.id + ")");
        }
        // gamma_u -> beta_v, beta_u -> gamma_v: a gamma_u + b beta_u becomes
        // (b, a) in (gamma_v, beta_v), which must be the reverse of v's curve.
        CurveClass swapped{e.class_at_u.second, e.class_at_u.first};
        CurveClass reversed{-e.class_at_v.first, -e.class_at_v.second};
        if (swapped != reversed) {
            fail(name + ": plumbing swap does not carry the page boundary at " + pu.id + " onto the one at " + pv.id);
        }
        if (e.components != boost::multiprecision::gcd(pu.multiplicity, pv.multiplicity)) {
            fail(name + ": component count is not gcd(M_u, M_v)");
        }
    }

    for (std::size_t i = 0; i < m; ++i) {
        if (balance[i] != 0) {
            r.condition_violations.push_back(i);
            fail("vertex " + ob.vertices[i].id + ": M_v e_v + sum of neighbor M_u + b_v = " + balance[i].str() +
                 ", expected 0");
        }
    }
    return r;
}

EquivalenceCertificate equivalence_certificate(const PlumbingGraph& g) {
    validate(g);
    CanonicalCycle k = canonical_cycle(g);
    DivisorResult dr = minimal_cnp_divisor(g, k);

    EquivalenceCertificate cert;
    cert.graph_hash = graph_hash(g);
    cert.divisor = dr.divisor;
    cert.binding = dr.binding;
    cert.configuration_side = build_open_book(g, dr.binding);
    cert.scale = cert.configuration_side.scale;

    Cycle scaled = scale_divisor(g, k, dr.divisor, cert.scale);
    BindingVector scaled_binding = binding_of(g, scaled);
    cert.milnor_side = describe_open_book(g, cert.scale, scaled.coefficients, scaled_binding.entries);
    if (!verify_gluing(cert.milnor_side).ok) {
        throw ConsistencyError("open book of the scaled divisor fails gluing verification");
    }

    std::vector<BigInt> lhs = cert.milnor_side.bindings();
    std::vector<BigInt> rhs = cert.configuration_side.bindings();
    cert.verdict = lhs == rhs && BindingVector{lhs}.positive();
    return cert;
}

} // namespace plumbing

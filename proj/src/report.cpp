#include "plumbing/report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace plumbing::report {

namespace {

Json ids(const PlumbingGraph& g) {
    Json out = Json::array();
    for (const Vertex& v : g.vertices()) out.push_back(v.id);
    return out;
}

Json integers(const std::vector<BigInt>& values) {
    Json out = Json::array();
    for (const BigInt& x : values) out.push_back(integer(x));
    return out;
}

Json rationals(const QVector& values) {
    Json out = Json::array();
    for (const Rational& x : values) out.push_back(rational(x));
    return out;
}

Json pair(const CurveClass& c) { return Json::array({integer(c.first), integer(c.second)}); }

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_boolean()) return j.get<bool>() ? "yes" : "no";
    return j.dump();
}

void render(const Json& j, int indent, std::ostringstream& out) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            out << pad << key << ":\n";
            render(value, indent + 1, out);
        } else if (value.is_array()) {
            bool flat = true;
            for (const Json& x : value) flat = flat && (is_scalar(x) || (x.is_array() && std::all_of(x.begin(), x.end(), is_scalar)));
            if (flat) {
                out << pad << key << ": (";
                bool first = true;
                for (const Json& x : value) {
                    if (!first) out << ", ";
                    first = false;
                    if (x.is_array()) {
                        out << '(';
                        for (std::size_t i = 0; i < x.size(); ++i) out << (i ? ", " : "") << scalar_text(x[i]);
                        out << ')';
                    } else {
                        out << scalar_text(x);
                    }
                }
                out << ")\n";
            } else {
                out << pad << key << ":\n";
                for (std::size_t i = 0; i < value.size(); ++i) {
                    out << pad << "  [" << i << "]\n";
                    if (value[i].is_object()) {
                        render(value[i], indent + 2, out);
                    } else {
                        out << pad << "    " << value[i].dump() << '\n';
                    }
                }
            }
        } else {
            out << pad << key << ": " << scalar_text(value) << '\n';
        }
    }
}

} // namespace

Json integer(const BigInt& value) {
    if (value >= std::numeric_limits<long long>::min() && value <= std::numeric_limits<long long>::max()) {
        return value.convert_to<long long>();
    }
    return value.str();
}

Json rational(const Rational& value) { return value.str(); }

Json summary_json(const PlumbingGraph& g, const GraphSummary& s) {
    Json j;
    j["report"] = "check";
    j["graph_hash"] = graph_hash(g);
    j["vertices"] = ids(g);
    j["m"] = s.m;
    j["edge_count"] = s.edge_count;
    j["h"] = s.h;
    j["chi_neighborhood"] = s.chi_neighborhood;
    j["degrees"] = s.degrees;
    j["connected"] = true;
    j["negative_definite"] = true;
    j["cyclic_dual_graph"] = s.cyclic;
    return j;
}

Json canonical_json(const PlumbingGraph& g, const CanonicalCycle& k) {
    Json j;
    j["report"] = "canonical";
    j["vertices"] = ids(g);
    j["adjunction_rhs"] = integers(k.adjunction_rhs);
    j["coefficients"] = rationals(k.coefficients);
    j["k_squared"] = rational(k.k_squared);
    j["k_squared_integral"] = k.k_squared_integral();
    return j;
}

Json divisor_json(const PlumbingGraph& g, const DivisorResult& d, const ConditionReport& condition) {
    Json j;
    j["report"] = "divisor";
    j["vertices"] = ids(g);
    j["divisor"] = integers(d.divisor.coefficients);
    j["binding"] = integers(d.binding.entries);
    j["condition_holds"] = condition.holds;
    j["slack"] = integers(condition.slack);
    return j;
}

Json scaled_divisor_json(const BigInt& factor, const Cycle& scaled, const ConditionReport& condition) {
    Json j;
    j["factor"] = integer(factor);
    j["divisor"] = integers(scaled.coefficients);
    j["condition_holds"] = condition.holds;
    j["slack"] = integers(condition.slack);
    return j;
}

Json openbook_json(const PlumbingGraph& g, const OpenBookDescription& ob, const GluingReport& gluing) {
    Json j;
    j["report"] = "openbook";
    j["vertices"] = ids(g);
    j["scale"] = integer(ob.scale);
    j["multiplicities"] = integers(ob.multiplicities());
    j["bindings"] = integers(ob.bindings());
    Json slopes = Json::array();
    for (const VertexPiece& p : ob.vertices) slopes.push_back(pair(p.outer_slope));
    j["outer_slopes_alpha_beta"] = slopes;
    Json edges = Json::array();
    for (const EdgePiece& e : ob.edges) {
        Json ej;
        ej["u"] = g.vertex(e.u).id;
        ej["v"] = g.vertex(e.v).id;
        ej["class_at_u_gamma_beta"] = pair(e.class_at_u);
        ej["class_at_v_gamma_beta"] = pair(e.class_at_v);
        ej["components"] = integer(e.components);
        edges.push_back(ej);
    }
    j["edges"] = edges;
    Json page;
    page["euler_characteristic"] = integer(ob.page.euler_characteristic);
    page["euler_characteristic_source"] = "implementation-derived count";
    page["boundary_components"] = integer(ob.page.boundary_components);
    j["page"] = page;
    j["verify_gluing"] = gluing.ok;
    if (!gluing.ok) j["gluing_diagnostics"] = gluing.diagnostics;
    j["cyclic_dual_graph"] = g.edge_count() + 1 > g.size();
    return j;
}

Json certificate_json(const PlumbingGraph& g, const EquivalenceCertificate& cert) {
    Json j;
    j["report"] = "certificate";
    j["graph_hash"] = cert.graph_hash;
    j["vertices"] = ids(g);
    j["divisor"] = integers(cert.divisor.coefficients);
    j["binding"] = integers(cert.binding.entries);
    j["scale"] = integer(cert.scale);
    Json milnor;
    milnor["multiplicities"] = integers(cert.milnor_side.multiplicities());
    milnor["bindings"] = integers(cert.milnor_side.bindings());
    j["milnor_side"] = milnor;
    Json config;
    config["multiplicities"] = integers(cert.configuration_side.multiplicities());
    config["bindings"] = integers(cert.configuration_side.bindings());
    j["configuration_side"] = config;
    j["verdict"] = cert.verdict;
    j["cyclic_dual_graph"] = g.edge_count() + 1 > g.size();
    return j;
}

Json family_json(const FamilyReport& r) {
    Json j;
    j["report"] = "family";
    j["s"] = r.params.s;
    j["t"] = r.params.t;
    j["N"] = r.params.n;
    Json graph;
    for (const Vertex& v : r.graph.vertices()) {
        graph[v.id] = Json{{"e", v.euler}, {"g", v.genus}};
    }
    j["resolution_graph"] = graph;
    j["plane_curve_mu"] = integer(r.plane_mu);
    j["mu"] = integer(r.invariants.mu);
    j["sigma"] = integer(r.invariants.sigma);
    j["p_g"] = integer(r.invariants.p_g);
    j["k_squared"] = integer(r.invariants.k_squared);
    j["h"] = r.invariants.h;
    j["m"] = r.invariants.m;
    j["b1"] = r.invariants.b1;
    if (r.has_closed_form) {
        Json cf;
        cf["mu"] = integer(r.closed_form.mu);
        cf["sigma"] = rational(r.closed_form.sigma);
        cf["match"] = r.closed_form_match;
        j["closed_form"] = cf;
    }
    return j;
}

Json surgery_json(const AmbientData& ambient, const GraphSummary& s, const SmoothingInvariants& inv,
                  const SurgeryReport& r) {
    Json j;
    j["report"] = "surgery";
    Json in;
    in["chi_X"] = ambient.chi_x;
    in["sigma_X"] = ambient.sigma_x;
    if (!ambient.description.empty()) in["description"] = ambient.description;
    in["chi_neighborhood"] = s.chi_neighborhood;
    in["m"] = s.m;
    in["mu"] = integer(inv.mu);
    in["sigma_milnor_fiber"] = integer(inv.sigma);
    j["inputs"] = in;
    j["chi"] = integer(r.chi);
    j["sigma"] = integer(r.sigma);
    j["c1_squared"] = integer(r.c1_squared);
    j["chi_h"] = rational(r.chi_h);
    j["chi_h_integral"] = r.chi_h_integral();
    j["bmy_defect"] = rational(r.bmy_defect);
    j["b1_note"] = r.b1_note;
    return j;
}

std::string render_text(const Json& report) {
    std::ostringstream out;
    render(report, 0, out);
    return out.str();
}

std::string render_json(const Json& report) { return report.dump() + "\n"; }

} // namespace plumbing::report

#pragma once

#include "plumbing/divisor.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace plumbing {

// Integer pair (first, second) in a boundary-torus basis.
using CurveClass = std::pair<BigInt, BigInt>;

// Coordinates follow the fibered decomposition of each vertex piece
// A_v x S^1: beta is the circle fiber, alpha the outer boundary of the disk
// D^2 (boundary orientation), gamma_j the boundary of the j-th removed disk.
// The vertex piece is glued to the punctured surface via
//   alpha_v + e_v beta_v -> m_v,  beta_v -> l_v,
// and plumbing along an edge swaps gamma_u <-> beta_v.
struct VertexPiece {
    std::string id;
    long long euler = 0;
    long long genus = 0;
    std::size_t degree = 0;
    BigInt multiplicity;  // M_v = k N_v
    BigInt binding;       // b_v = k n_v
    CurveClass outer_slope; // (-e_v M_v, M_v) in (alpha, beta)
};

struct EdgePiece {
    std::size_t u = 0; // u < v in declaration order
    std::size_t v = 0;
    CurveClass class_at_u; // (M_v, -M_u) in (gamma, beta) at u's torus
    CurveClass class_at_v; // (M_u, -M_v) in (gamma, beta) at v's torus
    BigInt components;     // gcd(M_u, M_v)
};

struct PageSummary {
    // Sum over vertices of M_v (2 - 2g_v - deg v - b_v): each vertex piece
    // contributes an M_v-sheeted cover of the surface minus edge disks and
    // binding disks; binding collars and edge annuli add nothing. This
    // count is implementation-derived and reported with that label.
    BigInt euler_characteristic;
    BigInt boundary_components; // sum of b_v
};

struct OpenBookDescription {
    BigInt scale; // k
    std::vector<VertexPiece> vertices;
    std::vector<EdgePiece> edges;
    PageSummary page;

    std::vector<BigInt> multiplicities() const;
    std::vector<BigInt> bindings() const;
};

struct GluingReport {
    bool ok = true;
    std::vector<std::string> diagnostics;
    std::vector<std::size_t> condition_violations; // vertex indices
};

// N = -I^{-1} n. Every entry must come out strictly positive; otherwise a
// ConsistencyError is thrown.
QVector solve_multiplicities(const PlumbingGraph& g, const BindingVector& n);

// Minimal k making k N integral unless `explicit_scale` is given, in which
// case it must be a positive multiple of the minimal k.
OpenBookDescription build_open_book(const PlumbingGraph& g, const BindingVector& n,
                                    std::optional<BigInt> explicit_scale = std::nullopt);

// Assembles a description from integral multiplicities and bindings; no
// checks beyond dimensions.
OpenBookDescription describe_open_book(const PlumbingGraph& g, const BigInt& scale,
                                       const std::vector<BigInt>& multiplicities,
                                       const std::vector<BigInt>& bindings);

GluingReport verify_gluing(const OpenBookDescription& ob);

struct EquivalenceCertificate {
    std::string graph_hash;
    Cycle divisor;
    BindingVector binding;
    BigInt scale;
    OpenBookDescription milnor_side;
    OpenBookDescription configuration_side;
    bool verdict = false;
};

// Milnor side: open book of the divisor k D (multiplicities k d, bindings
// -I k d). Configuration side: build_open_book(g, n) with n = -I D. The
// verdict holds when both sides carry the same strictly positive bindings.
EquivalenceCertificate equivalence_certificate(const PlumbingGraph& g);

} // namespace plumbing

#pragma once

#include "plumbing/linear_algebra.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace plumbing {

struct Vertex {
    std::string id;
    long long euler = 0; // self-intersection e_v
    long long genus = 0; // g_v >= 0

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Weighted plumbing graph. Vertices keep declaration order, which fixes the
// indexing of every matrix and vector derived from the graph. Edges are
// stored as index pairs (u < v); loops and repeated edges are rejected.
class PlumbingGraph {
  public:
    std::size_t add_vertex(std::string id, long long euler, long long genus);
    void add_edge(std::string_view a, std::string_view b);
    void add_edge(std::size_t u, std::size_t v);

    std::size_t size() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
    const std::set<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }

    std::optional<std::size_t> find(std::string_view id) const;
    std::size_t index_of(std::string_view id) const; // throws ValidationError

    bool adjacent(std::size_t u, std::size_t v) const;
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }
    std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }

    bool is_connected() const;

    friend bool operator==(const PlumbingGraph& a, const PlumbingGraph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

  private:
    std::vector<Vertex> vertices_;
    std::set<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::unordered_map<std::string, std::size_t> index_;
};

struct GraphSummary {
    std::size_t m = 0;
    std::size_t edge_count = 0;
    long long h = 0;                // rank H_1 of the exceptional divisor
    long long chi_neighborhood = 0; // Euler characteristic of the plumbed 4-manifold
    std::vector<std::size_t> degrees;
    bool cyclic = false; // dual graph has a cycle
};

// Text format, one statement per line:
//   vertex <id> e=<int> g=<uint>
//   edge <id> <id>
// '#' starts a comment; blank lines are ignored; ids match [A-Za-z0-9_]+.
PlumbingGraph parse_graph(std::string_view text);

// Vertices in declaration order, then edges sorted lexicographically by id.
std::string serialize_graph(const PlumbingGraph& g);

// Diagonal e_v, off-diagonal 1 per edge.
QMatrix intersection_matrix(const PlumbingGraph& g);

// Connectivity and negative definiteness; throws ValidationError with a
// distinct message for each failure.
GraphSummary validate(const PlumbingGraph& g);

// Stable FNV-1a digest of the canonical serialization, as 16 hex digits.
std::string graph_hash(const PlumbingGraph& g);

} // namespace plumbing

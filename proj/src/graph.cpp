#include "plumbing/graph.hpp"

#include "plumbing/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <queue>
#include <sstream>

namespace plumbing {

namespace {

bool valid_id(std::string_view id) {
    if (id.empty()) return false;
    return std::all_of(id.begin(), id.end(), [](char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    });
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long parse_int(std::string_view text, std::size_t line, std::string_view what) {
    long long value = 0;
    std::string_view digits = text;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw ParseError(line, "invalid integer for " + std::string(what) + ": '" + std::string(text) + "'");
    }
    return value;
}

// Parses "key=value" with the given key.
long long parse_attribute(std::string_view token, std::string_view key, std::size_t line) {
    if (token.size() <= key.size() + 1 || token.substr(0, key.size()) != key || token[key.size()] != '=') {
        throw ParseError(line, "expected " + std::string(key) + "=<int>, got '" + std::string(token) + "'");
    }
    return parse_int(token.substr(key.size() + 1), line, key);
}

} // namespace

std::size_t PlumbingGraph::add_vertex(std::string id, long long euler, long long genus) {
    if (!valid_id(id)) {
        throw ValidationError("invalid vertex id '" + id + "'");
    }
    if (genus < 0) {
        throw ValidationError("vertex " + id + ": genus must be nonnegative");
    }
    if (index_.contains(id)) {
        throw ValidationError("duplicate vertex id '" + id + "'");
    }
    std::size_t idx = vertices_.size();
    index_.emplace(id, idx);
    vertices_.push_back(Vertex{std::move(id), euler, genus});
    adjacency_.emplace_back();
    return idx;
}

void PlumbingGraph::add_edge(std::string_view a, std::string_view b) {
    auto u = find(a);
    if (!u) throw ValidationError("edge endpoint '" + std::string(a) + "' is not a declared vertex");
    auto v = find(b);
    if (!v) throw ValidationError("edge endpoint '" + std::string(b) + "' is not a declared vertex");
    add_edge(*u, *v);
}

void PlumbingGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= size() || v >= size()) {
        throw ValidationError("edge endpoint out of range");
    }
    if (u == v) {
        throw ValidationError("loop at vertex '" + vertices_[u].id + "'");
    }
    auto key = std::minmax(u, v);
    if (!edges_.emplace(key.first, key.second).second) {
        throw ValidationError("repeated edge '" + vertices_[u].id + "' -- '" + vertices_[v].id + "'");
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
}

std::optional<std::size_t> PlumbingGraph::find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t PlumbingGraph::index_of(std::string_view id) const {
    auto idx = find(id);
    if (!idx) throw ValidationError("unknown vertex id '" + std::string(id) + "'");
    return *idx;
}

bool PlumbingGraph::adjacent(std::size_t u, std::size_t v) const {
    auto key = std::minmax(u, v);
    return edges_.contains({key.first, key.second});
}

bool PlumbingGraph::is_connected() const {
    if (vertices_.empty()) return false;
    std::vector<bool> seen(size(), false);
    std::queue<std::size_t> pending;
    pending.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!pending.empty()) {
        std::size_t v = pending.front();
        pending.pop();
        for (std::size_t u : adjacency_[v]) {
            if (!seen[u]) {
                seen[u] = true;
                ++reached;
                pending.push(u);
            }
        }
    }
    return reached == size();
}

PlumbingGraph parse_graph(std::string_view text) {
    PlumbingGraph g;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = (nl == std::string_view::npos) ? std::string_view{} : text.substr(nl + 1);

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tokens = split_ws(line);
        if (tokens.empty()) continue;

        try {
            if (tokens[0] == "vertex") {
                if (tokens.size() != 4) {
                    throw ParseError(line_no, "expected 'vertex <id> e=<int> g=<uint>'");
                }
                if (!valid_id(tokens[1])) {
                    throw ParseError(line_no, "invalid vertex id '" + std::string(tokens[1]) + "'");
                }
                long long e = parse_attribute(tokens[2], "e", line_no);
                long long genus = parse_attribute(tokens[3], "g", line_no);
                g.add_vertex(std::string(tokens[1]), e, genus);
            } else if (tokens[0] == "edge") {
                if (tokens.size() != 3) {
                    throw ParseError(line_no, "expected 'edge <id> <id>'");
                }
                g.add_edge(tokens[1], tokens[2]);
            } else {
                throw ParseError(line_no, "unknown statement '" + std::string(tokens[0]) + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const ValidationError& e) {
            throw ParseError(line_no, e.what());
        }
    }
    return g;
}

std::string serialize_graph(const PlumbingGraph& g) {
    std::ostringstream out;
    for (const Vertex& v : g.vertices()) {
        out << "vertex " << v.id << " e=" << v.euler << " g=" << v.genus << '\n';
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [u, v] : g.edges()) {
        auto a = g.vertex(u).id;
        auto b = g.vertex(v).id;
        if (b < a) std::swap(a, b);
        edges.emplace_back(std::move(a), std::move(b));
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b] : edges) {
        out << "edge " << a << ' ' << b << '\n';
    }
    return out.str();
}

QMatrix intersection_matrix(const PlumbingGraph& g) {
    QMatrix m(g.size(), g.size());
    for (std::size_t i = 0; i < g.size(); ++i) m(i, i) = g.vertex(i).euler;
    for (auto [u, v] : g.edges()) {
        m(u, v) = 1;
        m(v, u) = 1;
    }
    return m;
}

GraphSummary validate(const PlumbingGraph& g) {
    if (g.size() == 0) {
        throw ValidationError("graph has no vertices");
    }
    if (!g.is_connected()) {
        throw ValidationError("graph is disconnected");
    }
    if (!is_negative_definite(intersection_matrix(g))) {
        throw ValidationError("intersection matrix is not negative definite");
    }

    GraphSummary s;
    s.m = g.size();
    s.edge_count = g.edge_count();
    long long genus_sum = 0;
    long long chi = 0;
    for (std::size_t v = 0; v < g.size(); ++v) {
        genus_sum += g.vertex(v).genus;
        chi += 2 - 2 * g.vertex(v).genus;
        s.degrees.push_back(g.degree(v));
    }
    long long cycle_rank = static_cast<long long>(s.edge_count) - static_cast<long long>(s.m) + 1;
    s.h = 2 * genus_sum + cycle_rank;
    s.chi_neighborhood = chi - static_cast<long long>(s.edge_count);
    s.cyclic = cycle_rank > 0;
    return s;
}

std::string graph_hash(const PlumbingGraph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : serialize_graph(g)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace plumbing

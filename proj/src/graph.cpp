#include "klab/graph.hpp"

#include "klab/errors.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace klab {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, std::map<Vertex, std::string> labels)
    : vertex_count_(vertex_count), edges_(std::move(edges)), adjacency_(vertex_count),
      labels_(std::move(labels)) {
    for (auto& [u, v] : edges_) {
        if (u >= vertex_count_ || v >= vertex_count_)
            throw InvalidInput("edge endpoint out of range");
        if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InvalidInput("duplicate edge");
    for (const auto& [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
    for (const auto& [v, _] : labels_)
        if (v >= vertex_count_) throw InvalidInput("label for a vertex out of range");
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> out(vertex_count_);
    for (Vertex v = 0; v < vertex_count_; ++v) out[v] = adjacency_[v].size();
    return out;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u >= vertex_count_ || v >= vertex_count_) return false;
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::string Graph::label(Vertex v) const {
    auto it = labels_.find(v);
    return it == labels_.end() ? std::to_string(v) : it->second;
}

Graph Graph::without_edges(const std::vector<Edge>& removed) const {
    std::vector<Edge> doomed;
    for (auto [u, v] : removed) {
        if (u > v) std::swap(u, v);
        if (!has_edge(u, v))
            throw InvalidParameter("cannot remove missing edge " + std::to_string(u) + "-" + std::to_string(v));
        doomed.emplace_back(u, v);
    }
    std::sort(doomed.begin(), doomed.end());
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    std::set_difference(edges_.begin(), edges_.end(), doomed.begin(), doomed.end(), std::back_inserter(kept));
    return Graph(vertex_count_, std::move(kept), labels_);
}

void FamilySpec::validate() const {
    if (n < 2) throw InvalidParameter("n must be at least 2, got " + std::to_string(n));
    for (int i : deleted)
        if (i < 1 || i > n)
            throw InvalidParameter("deleted index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    if (r() >= n) throw DisconnectedFamily("deleting all " + std::to_string(n) + " vertical edges disconnects the graph");
}

Graph star(int n) {
    if (n < 1) throw InvalidParameter("star order must be at least 1");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, static_cast<Vertex>(i));
    return Graph(static_cast<std::size_t>(n), std::move(edges));
}

Graph complete(int n) {
    if (n < 1) throw InvalidParameter("complete graph order must be at least 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(static_cast<std::size_t>(n), std::move(edges));
}

namespace {

void require_nonempty(const Graph& g, const Graph& h) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw InvalidParameter("product with an empty factor");
}

} // namespace

Graph cartesian_product(const Graph& g, const Graph& h) {
    require_nonempty(g, h);
    const std::size_t ng = g.vertex_count();
    const auto id = [ng](Vertex u, Vertex v) { return v * ng + u; };
    std::vector<Edge> edges;
    edges.reserve(ng * h.edge_count() + h.vertex_count() * g.edge_count());
    for (Vertex u = 0; u < ng; ++u)
        for (const auto& [v1, v2] : h.edges()) edges.emplace_back(id(u, v1), id(u, v2));
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        for (const auto& [u1, u2] : g.edges()) edges.emplace_back(id(u1, v), id(u2, v));
    return Graph(ng * h.vertex_count(), std::move(edges));
}

Graph strong_product(const Graph& g, const Graph& h) {
    require_nonempty(g, h);
    const std::size_t ng = g.vertex_count();
    const std::size_t total = ng * h.vertex_count();
    std::vector<Edge> edges;
    for (Vertex a = 0; a < total; ++a) {
        for (Vertex b = a + 1; b < total; ++b) {
            const Vertex u1 = a % ng, v1 = a / ng;
            const Vertex u2 = b % ng, v2 = b / ng;
            const bool first_ok = u1 == u2 || g.has_edge(u1, u2);
            const bool second_ok = v1 == v2 || h.has_edge(v1, v2);
            if (first_ok && second_ok) edges.emplace_back(a, b);
        }
    }
    return Graph(total, std::move(edges));
}

Graph make_snr2(const FamilySpec& spec) {
    spec.validate();
    const auto n = static_cast<std::size_t>(spec.n);
    const Graph full = cartesian_product(star(spec.n), complete(2));

    std::vector<Edge> removed;
    for (int i : spec.deleted) {
        const auto v = static_cast<Vertex>(i - 1);
        removed.emplace_back(v, v + n);
    }
    std::map<Vertex, std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = std::to_string(i + 1);
        labels[i + n] = std::to_string(i + 1) + "'";
    }
    const Graph pruned = full.without_edges(removed);
    return Graph(pruned.vertex_count(), pruned.edges(), std::move(labels));
}

DistanceMatrix distance_matrix(const Graph& g) {
    const std::size_t n = g.vertex_count();
    constexpr std::int64_t unreached = -1;
    DistanceMatrix dist(n, std::vector<std::int64_t>(n, unreached));
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        auto& row = dist[s];
        row[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(u)) {
                if (row[w] != unreached) continue;
                row[w] = row[u] + 1;
                queue.push_back(w);
            }
        }
        if (std::find(row.begin(), row.end(), unreached) != row.end())
            throw NotConnected("graph is not connected");
    }
    return dist;
}

bool is_connected(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::deque<Vertex> queue{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (seen[w]) continue;
            seen[w] = true;
            ++reached;
            queue.push_back(w);
        }
    }
    return reached == n;
}

} // namespace klab

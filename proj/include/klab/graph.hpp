#ifndef KLAB_GRAPH_HPP
#define KLAB_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace klab {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/*
 * Immutable simple undirected graph.
 *
 * Edges are stored normalized (first < second) and sorted; the constructor
 * rejects self-loops, duplicates and out-of-range endpoints. Degrees and
 * adjacency lists are built once at construction.
 */
class Graph {
public:
    Graph() = default;
    Graph(std::size_t vertex_count, std::vector<Edge> edges,
          std::map<Vertex, std::string> labels = {});

    [[nodiscard]] std::size_t vertex_count() const { return vertex_count_; }
    [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
    [[nodiscard]] const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
    [[nodiscard]] std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    [[nodiscard]] std::vector<std::size_t> degrees() const;
    [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;

    [[nodiscard]] const std::map<Vertex, std::string>& labels() const { return labels_; }
    /// Stored label, or the 0-based index rendered as text.
    [[nodiscard]] std::string label(Vertex v) const;

    /// Copy with the given edges removed. Throws InvalidParameter for a missing edge.
    [[nodiscard]] Graph without_edges(const std::vector<Edge>& removed) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::map<Vertex, std::string> labels_;
};

/*
 * One member of the vertical-edge-deleted family of S_n x K_2.
 *
 * `deleted` holds 1-based star indices i whose vertical edge i-i' is
 * removed; index 1 is the star center.
 */
struct FamilySpec {
    int n = 2;
    std::set<int> deleted;

    [[nodiscard]] int r() const { return static_cast<int>(deleted.size()); }
    [[nodiscard]] bool center_deleted() const { return deleted.count(1) != 0; }

    /// Throws InvalidParameter for n < 2 or indices outside 1..n,
    /// DisconnectedFamily when all n vertical edges are deleted.
    void validate() const;
};

Graph star(int n);
Graph complete(int n);

// Vertex (u, v) of the product is numbered v * |V(G)| + u, so for H = K_2
// the second copy of G is offset by |V(G)|.
Graph cartesian_product(const Graph& g, const Graph& h);
Graph strong_product(const Graph& g, const Graph& h);

/// S_n x K_2 with the vertical edges in spec.deleted removed. Vertex i-1 is
/// labelled "i", vertex n+i-1 is labelled "i'".
Graph make_snr2(const FamilySpec& spec);

using DistanceMatrix = std::vector<std::vector<std::int64_t>>;

/// BFS all-pairs distances. Throws NotConnected on disconnected input.
DistanceMatrix distance_matrix(const Graph& g);

bool is_connected(const Graph& g);

} // namespace klab

#endif // KLAB_GRAPH_HPP

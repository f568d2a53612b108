#pragma once

#include "evenpair/bitset.hpp"

#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace evenpair {

using VertexId = int;

// Structural misuse of the graph API: unknown ids, contracting an edge,
// malformed input, and similar caller errors.
struct GraphError : std::runtime_error {
    explicit GraphError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Sorted set of vertex ids with deterministic (ascending) iteration.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<VertexId> ids);
    VertexSet(std::initializer_list<VertexId> ids);

    bool contains(VertexId v) const;
    void add(VertexId v);
    void remove(VertexId v);

    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }

    const std::vector<VertexId>& ids() const { return ids_; }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<VertexId> ids_; // sorted, unique
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

/// Vertex sequence; consecutive vertices are adjacent in the host graph.
struct Path {
    std::vector<VertexId> verts;

    Path() = default;
    explicit Path(std::vector<VertexId> vs) : verts(std::move(vs)) {}

    // number of edges
    int length() const { return static_cast<int>(verts.size()) - 1; }
    bool empty() const { return verts.empty(); }
    VertexId front() const { return verts.front(); }
    VertexId back() const { return verts.back(); }

    friend bool operator==(const Path&, const Path&) = default;
};

// Immutable simple undirected graph with stable vertex ids. Ids need not
// be contiguous (contraction retires two ids and mints a fresh one), so
// every operation that returns a graph preserves the ids of the vertices
// it keeps. Adjacency is stored as dense bit rows over the index space
// 0..n-1 given by ascending id order.
class Graph {
public:
    Graph() = default;

    /// Vertices 0..n-1 with the given edge list.
    static Graph from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges);

    /// Explicit id set (any non-negative ids) with the given edge list.
    static Graph from_vertices(std::vector<VertexId> ids,
        const std::vector<std::pair<VertexId, VertexId>>& edges);

    std::size_t vertex_count() const { return ids_.size(); }
    std::size_t edge_count() const;
    const std::vector<VertexId>& vertices() const { return ids_; }

    bool has_vertex(VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const;
    int degree(VertexId v) const;

    /// Edges as (u, v) pairs with u < v, sorted.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    VertexId max_id() const;

    // index-space access for the search kernels
    int index_of(VertexId v) const; // throws GraphError on unknown id
    VertexId id_at(int idx) const { return ids_[static_cast<std::size_t>(idx)]; }
    const Bitset64& row(int idx) const { return adj_[static_cast<std::size_t>(idx)]; }

    const std::map<VertexId, std::string>& labels() const { return labels_; }
    void set_label(VertexId v, std::string label);
    std::optional<std::string> label(VertexId v) const;

    /// Structural equality on ids and edges; labels are ignored.
    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.ids_ == b.ids_ && a.adj_ == b.adj_;
    }

private:
    std::vector<VertexId> ids_; // ascending
    std::vector<Bitset64> adj_; // index space
    std::map<VertexId, std::string> labels_;
};

// --- structural primitives -------------------------------------------------

VertexSet neighbors(const Graph& g, VertexId v);

Graph complement(const Graph& g);

Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// Merge non-adjacent x, y into a fresh vertex (max id + 1) adjacent to
/// N(x) ∪ N(y). Returns the new graph and the fresh id.
std::pair<Graph, VertexId> contract(const Graph& g, VertexId x, VertexId y);

/// True for the empty set and singletons.
bool is_clique(const Graph& g, const VertexSet& s);

/// Whether the complement of g restricted to t is connected; t nonempty.
bool is_co_connected(const Graph& g, const VertexSet& t);

/// All vertices outside t adjacent to every vertex of t; t nonempty.
VertexSet complete_set(const Graph& g, const VertexSet& t);

bool is_simplicial(const Graph& g, VertexId v);

bool is_disjoint_union_of_cliques(const Graph& g);

/// Shortest u-v path avoiding the forbidden set, BFS expanding neighbors
/// in ascending id order. Any shortest path is chordless. u, v must not
/// be forbidden.
std::optional<Path> shortest_path(const Graph& g, VertexId u, VertexId v,
    const VertexSet& forbidden = {});

/// Consecutive vertices adjacent, all distinct.
bool is_path(const Graph& g, const Path& p);

/// is_path and no edge between non-consecutive vertices.
bool is_chordless_path(const Graph& g, const Path& p);

std::vector<VertexSet> connected_components(const Graph& g);

} // namespace evenpair

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "netgeo/matrix.hpp"

namespace netgeo {

// Simple undirected graph. Adjacency lists are kept sorted and duplicate-free;
// self-loops and multi-edges are rejected at insertion.
class Graph {
public:
    Graph() = default;
    explicit Graph(int32_t n);

    static Graph from_edges(int32_t n, std::span<const std::pair<int32_t, int32_t>> edges);

    int32_t node_count() const noexcept { return n_; }
    int64_t edge_count() const noexcept { return edges_; }

    void add_edge(int32_t u, int32_t v);
    bool has_edge(int32_t u, int32_t v) const;
    const std::vector<int32_t>& neighbors(int32_t u) const { return adj_[u]; }
    int32_t degree(int32_t u) const { return static_cast<int32_t>(adj_[u].size()); }

    // Unordered (u, v) pairs with u < v, ascending.
    std::vector<std::pair<int32_t, int32_t>> edges() const;

private:
    int32_t n_ = 0;
    int64_t edges_ = 0;
    std::vector<std::vector<int32_t>> adj_;
};

// Simple undirected graph whose edges carry positive symmetric weights
// (distances). Weight storage parallels the sorted adjacency lists, so
// iterating neighbors yields the edge weight with no lookup.
class WeightedGraph {
public:
    WeightedGraph() = default;
    explicit WeightedGraph(int32_t n) : graph_(n), w_(n) {}

    // Weights taken from a dense symmetric distance table (e.g. geodesics).
    static WeightedGraph from_distances(const Graph& g, const DistMatrix& dist);

    int32_t node_count() const noexcept { return graph_.node_count(); }
    int64_t edge_count() const noexcept { return graph_.edge_count(); }
    const Graph& graph() const noexcept { return graph_; }

    void add_edge(int32_t u, int32_t v, double weight);
    double weight(int32_t u, int32_t v) const;  // edge must exist
    const std::vector<double>& neighbor_weights(int32_t u) const { return w_[u]; }

private:
    Graph graph_;
    std::vector<std::vector<double>> w_;
};

// Connected components as per-node labels, 0-based in discovery order from
// node 0. Component count goes in *count when non-null.
std::vector<int32_t> connected_components(const Graph& g, int32_t* count = nullptr);

// Nodes of the largest component (ties broken by lowest contained node id),
// ascending.
std::vector<int32_t> giant_component(const Graph& g);

// Subgraph induced on `nodes` (ascending ids); node k of the result is
// nodes[k].
Graph induced_subgraph(const Graph& g, std::span<const int32_t> nodes);
WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const int32_t> nodes);

// Mean local clustering coefficient; degree<2 nodes contribute 0.
double mean_local_clustering(const Graph& g);

double mean_degree(const Graph& g);

}  // namespace netgeo

#include "netgeo/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "netgeo/errors.hpp"

namespace netgeo {

Graph::Graph(int32_t n) : n_(n), adj_(static_cast<size_t>(n)) {
    if (n < 0) throw UsageError("graph: negative node count");
}

Graph Graph::from_edges(int32_t n, std::span<const std::pair<int32_t, int32_t>> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int32_t u, int32_t v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw UsageError("add_edge: node id out of range");
    if (u == v) throw UsageError("add_edge: self-loop rejected");
    auto& au = adj_[u];
    const auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) throw UsageError("add_edge: duplicate edge rejected");
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edges_;
}

bool Graph::has_edge(int32_t u, int32_t v) const {
    const auto& au = adj_[u];
    return std::binary_search(au.begin(), au.end(), v);
}

std::vector<std::pair<int32_t, int32_t>> Graph::edges() const {
    std::vector<std::pair<int32_t, int32_t>> out;
    out.reserve(static_cast<size_t>(edges_));
    for (int32_t u = 0; u < n_; ++u)
        for (int32_t v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

WeightedGraph WeightedGraph::from_distances(const Graph& g, const DistMatrix& dist) {
    WeightedGraph wg(g.node_count());
    for (const auto& [u, v] : g.edges()) wg.add_edge(u, v, dist(u, v));
    return wg;
}

void WeightedGraph::add_edge(int32_t u, int32_t v, double weight) {
    if (!(weight > 0.0))
        throw DataError("weighted edge (" + std::to_string(u) + ", " + std::to_string(v) +
                        "): weight must be positive, got " + std::to_string(weight));
    graph_.add_edge(u, v);
    // mirror the sorted insertion positions
    const auto& au = graph_.neighbors(u);
    const auto pu = std::lower_bound(au.begin(), au.end(), v) - au.begin();
    w_[u].insert(w_[u].begin() + pu, weight);
    const auto& av = graph_.neighbors(v);
    const auto pv = std::lower_bound(av.begin(), av.end(), u) - av.begin();
    w_[v].insert(w_[v].begin() + pv, weight);
}

double WeightedGraph::weight(int32_t u, int32_t v) const {
    const auto& au = graph_.neighbors(u);
    const auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it == au.end() || *it != v) throw UsageError("weight: edge does not exist");
    return w_[u][static_cast<size_t>(it - au.begin())];
}

std::vector<int32_t> connected_components(const Graph& g, int32_t* count) {
    const int32_t n = g.node_count();
    std::vector<int32_t> label(static_cast<size_t>(n), -1);
    std::vector<int32_t> queue;
    int32_t next = 0;
    for (int32_t s = 0; s < n; ++s) {
        if (label[s] != -1) continue;
        label[s] = next;
        queue.assign(1, s);
        for (size_t head = 0; head < queue.size(); ++head) {
            for (int32_t v : g.neighbors(queue[head])) {
                if (label[v] == -1) {
                    label[v] = next;
                    queue.push_back(v);
                }
            }
        }
        ++next;
    }
    if (count) *count = next;
    return label;
}

std::vector<int32_t> giant_component(const Graph& g) {
    int32_t count = 0;
    const auto label = connected_components(g, &count);
    std::vector<int64_t> size(static_cast<size_t>(count), 0);
    for (int32_t l : label) ++size[l];
    // discovery order means the first component of maximal size also contains
    // the lowest node id among the ties
    int32_t best = 0;
    for (int32_t c = 1; c < count; ++c)
        if (size[c] > size[best]) best = c;
    std::vector<int32_t> nodes;
    nodes.reserve(static_cast<size_t>(size[best]));
    for (int32_t v = 0; v < g.node_count(); ++v)
        if (label[v] == best) nodes.push_back(v);
    return nodes;
}

Graph induced_subgraph(const Graph& g, std::span<const int32_t> nodes) {
    std::vector<int32_t> pos(static_cast<size_t>(g.node_count()), -1);
    for (size_t k = 0; k < nodes.size(); ++k) pos[nodes[k]] = static_cast<int32_t>(k);
    Graph sub(static_cast<int32_t>(nodes.size()));
    for (int32_t u : nodes)
        for (int32_t v : g.neighbors(u))
            if (u < v && pos[v] != -1) sub.add_edge(pos[u], pos[v]);
    return sub;
}

WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const int32_t> nodes) {
    std::vector<int32_t> pos(static_cast<size_t>(g.node_count()), -1);
    for (size_t k = 0; k < nodes.size(); ++k) pos[nodes[k]] = static_cast<int32_t>(k);
    WeightedGraph sub(static_cast<int32_t>(nodes.size()));
    for (int32_t u : nodes) {
        const auto& nbrs = g.graph().neighbors(u);
        const auto& ws = g.neighbor_weights(u);
        for (size_t k = 0; k < nbrs.size(); ++k)
            if (u < nbrs[k] && pos[nbrs[k]] != -1) sub.add_edge(pos[u], pos[nbrs[k]], ws[k]);
    }
    return sub;
}

double mean_local_clustering(const Graph& g) {
    const int32_t n = g.node_count();
    if (n == 0) return 0.0;
    double total = 0.0;
    for (int32_t u = 0; u < n; ++u) {
        const auto& nbrs = g.neighbors(u);
        const auto k = static_cast<int64_t>(nbrs.size());
        if (k < 2) continue;
        int64_t links = 0;
        for (size_t a = 0; a < nbrs.size(); ++a)
            for (size_t b = a + 1; b < nbrs.size(); ++b)
                if (g.has_edge(nbrs[a], nbrs[b])) ++links;
        total += 2.0 * static_cast<double>(links) / (static_cast<double>(k) * (k - 1));
    }
    return total / n;
}

double mean_degree(const Graph& g) {
    if (g.node_count() == 0) return 0.0;
    return 2.0 * static_cast<double>(g.edge_count()) / g.node_count();
}

}  // namespace netgeo

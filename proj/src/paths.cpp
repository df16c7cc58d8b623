#include "netgeo/paths.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "netgeo/errors.hpp"
#include "netgeo/threading.hpp"

namespace netgeo {

HopMatrix tsp_lengths(const Graph& g, int threads) {
    const int32_t n = g.node_count();
    HopMatrix hops(n, kUnreachableHops);
    parallel_for(n, threads, [&](int64_t src) {
        const auto s = static_cast<int32_t>(src);
        hops(s, s) = 0;
        std::vector<int32_t> queue{s};
        for (size_t head = 0; head < queue.size(); ++head) {
            const int32_t u = queue[head];
            const int32_t du = hops(s, u);
            for (int32_t v : g.neighbors(u)) {
                if (hops(s, v) == kUnreachableHops) {
                    hops(s, v) = du + 1;
                    queue.push_back(v);
                }
            }
        }
    });
    return hops;
}

DistMatrix gsp_lengths(const WeightedGraph& g, int threads) {
    const int32_t n = g.node_count();
    DistMatrix dist(n, kInfDist);
    parallel_for(n, threads, [&](int64_t src) {
        const auto s = static_cast<int32_t>(src);
        using Item = std::pair<double, int32_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        dist(s, s) = 0.0;
        heap.emplace(0.0, s);
        while (!heap.empty()) {
            const auto [d, u] = heap.top();
            heap.pop();
            if (d > dist(s, u)) continue;
            const auto& nbrs = g.graph().neighbors(u);
            const auto& ws = g.neighbor_weights(u);
            for (size_t k = 0; k < nbrs.size(); ++k) {
                const double nd = d + ws[k];
                if (nd < dist(s, nbrs[k])) {
                    dist(s, nbrs[k]) = nd;
                    heap.emplace(nd, nbrs[k]);
                }
            }
        }
    });
    return dist;
}

namespace {

struct TspWalker {
    const Graph& g;
    const HopMatrix& hops;
    const WeightedGraph* weights;
    int32_t source;
    int32_t target;
    int64_t cap;
    uint64_t count = 0;
    std::vector<int32_t> path;
    std::vector<double> partial;  // projection prefix, parallels path
    const std::function<void(std::span<const int32_t>, double)>& visit;

    void descend(int32_t u, int32_t remaining) {
        path.push_back(u);
        if (remaining == 0) {
            if (static_cast<int64_t>(++count) > cap)
                throw CapExceededError(source, target, cap);
            visit(std::span<const int32_t>(path), weights ? partial.back() : std::nan(""));
            path.pop_back();
            return;
        }
        if (weights) {
            const auto& nbrs = g.graph().neighbors(u);
            const auto& ws = g.neighbor_weights(u);
            for (size_t k = 0; k < nbrs.size(); ++k) {
                if (hops(nbrs[k], target) != remaining - 1) continue;
                partial.push_back(partial.back() + ws[k]);
                descend(nbrs[k], remaining - 1);
                partial.pop_back();
            }
        } else {
            for (int32_t v : g.neighbors(u)) {
                if (hops(v, target) != remaining - 1) continue;
                descend(v, remaining - 1);
            }
        }
        path.pop_back();
    }
};

}  // namespace

uint64_t for_each_tsp(const Graph& g, int32_t source, int32_t target, const HopMatrix& hops,
                      int64_t cap, const WeightedGraph* weights,
                      const std::function<void(std::span<const int32_t>, double)>& visit) {
    const int32_t n = g.node_count();
    if (source < 0 || target < 0 || source >= n || target >= n)
        throw UsageError("for_each_tsp: node id out of range");
    const int32_t length = hops(source, target);
    if (length == kUnreachableHops)
        throw UsageError("for_each_tsp: pair (" + std::to_string(source) + ", " +
                         std::to_string(target) + ") is disconnected");
    if (cap <= 0) throw UsageError("for_each_tsp: cap must be positive");
    TspWalker walker{g, hops, weights, source, target, cap, 0, {}, {0.0}, visit};
    walker.path.reserve(static_cast<size_t>(length) + 1);
    walker.descend(source, length);
    return walker.count;
}

PathEnumeration enumerate_tsp(const Graph& g, int32_t source, int32_t target,
                              const HopMatrix& hops, int64_t cap) {
    PathEnumeration e;
    e.source = source;
    e.target = target;
    e.length = hops(source, target);
    for_each_tsp(g, source, target, hops, cap, nullptr,
                 [&](std::span<const int32_t> path, double) {
                     e.paths.emplace_back(path.begin(), path.end());
                 });
    return e;
}

double mean_ptsp(const PathEnumeration& e, const WeightedGraph& weights) {
    if (e.paths.empty()) throw DomainError("mean_ptsp: empty enumeration");
    double total = 0.0;
    for (const auto& path : e.paths) {
        double proj = 0.0;
        for (size_t k = 0; k + 1 < path.size(); ++k)
            proj += weights.weight(path[k], path[k + 1]);
        total += proj;
    }
    return total / static_cast<double>(e.paths.size());
}

PairSweepResult pair_records(const WeightedGraph& g, const DistMatrix* geodesics,
                             const PairSweepOptions& options) {
    const int32_t n = g.node_count();
    PairSweepResult result;
    result.hops = tsp_lengths(g.graph(), options.threads);
    result.gsp = gsp_lengths(g, options.threads);

    std::vector<std::vector<PairRecord>> rows(static_cast<size_t>(n));
    std::vector<int64_t> skipped(static_cast<size_t>(n), 0);
    parallel_for(n, options.threads, [&](int64_t src) {
        const auto i = static_cast<int32_t>(src);
        auto& out = rows[static_cast<size_t>(src)];
        for (int32_t j = i + 1; j < n; ++j) {
            const int32_t len = result.hops(i, j);
            if (len <= 1) continue;  // self or adjacent
            if (len == kUnreachableHops) {
                ++skipped[static_cast<size_t>(src)];
                continue;
            }
            PairRecord rec;
            rec.i = i;
            rec.j = j;
            rec.tsp_len = len;
            double sum = 0.0;
            double lo = kInfDist;
            double hi = 0.0;
            rec.n_tsp = for_each_tsp(g.graph(), i, j, result.hops, options.path_cap, &g,
                                     [&](std::span<const int32_t>, double proj) {
                                         sum += proj;
                                         lo = std::min(lo, proj);
                                         hi = std::max(hi, proj);
                                     });
            rec.mean_ptsp = sum / static_cast<double>(rec.n_tsp);
            rec.min_ptsp = lo;
            rec.max_ptsp = hi;
            rec.gsp = result.gsp(i, j);
            if (geodesics) rec.geo = (*geodesics)(i, j);
            out.push_back(rec);
        }
    });
    size_t total = 0;
    for (const auto& row : rows) total += row.size();
    result.records.reserve(total);
    for (auto& row : rows)
        result.records.insert(result.records.end(), row.begin(), row.end());
    for (int64_t s : skipped) result.disconnected_pairs += s;
    return result;
}

}  // namespace netgeo

#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "netgeo/graph.hpp"
#include "netgeo/matrix.hpp"

namespace netgeo {

// Hop-count sentinel for disconnected pairs.
inline constexpr int32_t kUnreachableHops = std::numeric_limits<int32_t>::max();
inline constexpr double kInfDist = std::numeric_limits<double>::infinity();

// All-pairs topological shortest path lengths (hop counts) via per-source
// breadth-first search. Symmetric, zero diagonal, kUnreachableHops where no
// path exists.
HopMatrix tsp_lengths(const Graph& g, int threads = 1);

// All-pairs geometrical shortest path lengths (minimum total edge distance)
// via per-source binary-heap relaxation; weights must be positive, which the
// WeightedGraph type already guarantees at insertion.
DistMatrix gsp_lengths(const WeightedGraph& g, int threads = 1);

// All simple paths of exactly `length` hops from source to target, where
// `length` is the topological shortest path length of the pair.
struct PathEnumeration {
    int32_t source = 0;
    int32_t target = 0;
    int32_t length = 0;
    std::vector<std::vector<int32_t>> paths;
};

inline constexpr int64_t kDefaultPathCap = 1'000'000;

// Streaming enumeration of every TSP between source and target. The search
// descends from u only into neighbors v with hops(v, target) == hops(u,
// target) - 1, i.e. it walks the shortest-path DAG toward the target; no
// dead end is ever entered and emitted paths cannot repeat a node because
// the distance-to-target strictly decreases at each hop. Neighbors are
// visited in ascending id, so paths arrive in lexicographic order.
//
// `visit` receives each path as a node span plus its projection (summed edge
// distances) when `weights` is non-null, NaN otherwise. Throws
// CapExceededError as soon as more than `cap` paths would be emitted.
// Returns the path count.
uint64_t for_each_tsp(const Graph& g, int32_t source, int32_t target, const HopMatrix& hops,
                      int64_t cap, const WeightedGraph* weights,
                      const std::function<void(std::span<const int32_t>, double)>& visit);

// Materialized variant of for_each_tsp.
PathEnumeration enumerate_tsp(const Graph& g, int32_t source, int32_t target,
                              const HopMatrix& hops, int64_t cap = kDefaultPathCap);

// Mean projection of an enumeration: arithmetic mean over paths of summed
// edge distances. Domain error on an empty enumeration.
double mean_ptsp(const PathEnumeration& e, const WeightedGraph& weights);

// Per-pair summary for one unordered nonadjacent pair.
struct PairRecord {
    int32_t i = 0;
    int32_t j = 0;
    int32_t tsp_len = 0;
    uint64_t n_tsp = 0;
    double mean_ptsp = 0.0;
    double min_ptsp = 0.0;  // equals the GSP length when hop counts agree
    double max_ptsp = 0.0;
    double geo = std::numeric_limits<double>::quiet_NaN();  // NaN when no coordinates exist
    double gsp = 0.0;
};

struct PairSweepOptions {
    int64_t path_cap = kDefaultPathCap;
    int threads = 1;
};

struct PairSweepResult {
    std::vector<PairRecord> records;    // i < j, ascending (i, j)
    int64_t disconnected_pairs = 0;     // nonadjacent pairs with no path, excluded
    HopMatrix hops;                     // kept for downstream reuse
    DistMatrix gsp;
};

// Sweeps every unordered nonadjacent pair of the weighted graph: TSP length,
// TSP count, mean/min/max projection, GSP length, and the geodesic when a
// reference table is supplied. Parallelizes over source rows; the output
// ordering is independent of the worker count.
PairSweepResult pair_records(const WeightedGraph& g, const DistMatrix* geodesics,
                             const PairSweepOptions& options = {});

}  // namespace netgeo

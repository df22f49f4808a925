#pragma once

#include "pickroute/geometry.hpp"

namespace pickroute {

// Exact length of the shortest closed walk through the depot and all
// picks, computed independently of the DP solvers: Dijkstra over the full
// warehouse graph gives all-pairs shortest paths among the required
// vertices, and a Held-Karp sweep solves the closed-walk TSP on that
// metric.  Revisits are free under shortest-path distances, so the metric
// closure is exact for closed walks.  Caps at 12 picks.
Length oracle_optimal(const PickInstance& inst);

// Shortest-path distance from the depot to each pick (same graph);
// exposed for sanity properties.
std::vector<Length> oracle_depot_distances(const PickInstance& inst);

constexpr int kOracleMaxPicks = 12;

} // namespace pickroute

#include "pickroute/oracle.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

namespace pickroute {

namespace {

constexpr Length LINF = std::numeric_limits<Length>::max() / 4;

struct Graph {
    int n = 0;
    std::vector<std::vector<std::pair<int, Length>>> adj;
    std::vector<int> required; // depot first, then picks

    int add_vertex() {
        adj.emplace_back();
        return n++;
    }
    void add_edge(int u, int v, Length len) {
        adj[static_cast<size_t>(u)].push_back({v, len});
        adj[static_cast<size_t>(v)].push_back({u, len});
    }
};

// Full warehouse graph: cross-aisle vertices per aisle and level, pick
// vertices threaded into their subaisle chains, cross-aisle segments of
// width w between adjacent aisles.
Graph build_graph(const NormalizedInstance& norm) {
    Graph g;
    const WarehouseLayout& lay = norm.layout;
    int m = lay.aisles;
    int levels = lay.blocks == 2 ? 3 : 2;
    Length L = lay.subaisle_length();
    Length w = lay.spacing();

    // cross vertices: id = aisle*levels + level (level 0 back .. front)
    std::vector<int> cross(static_cast<size_t>(m) * static_cast<size_t>(levels));
    for (int a = 0; a < m; ++a)
        for (int l = 0; l < levels; ++l) cross[static_cast<size_t>(a * levels + l)] = g.add_vertex();

    for (int l = 0; l < levels; ++l)
        for (int a = 0; a + 1 < m; ++a)
            g.add_edge(cross[static_cast<size_t>(a * levels + l)],
                       cross[static_cast<size_t>((a + 1) * levels + l)], w);

    auto chain = [&](int front_vertex, int back_vertex, const SubaislePicks& picks,
                     std::vector<int>* pick_ids) {
        Length prev_pos = 0;
        int prev = front_vertex;
        for (size_t i = 0; i < picks.pos.size(); ++i) {
            int v;
            if (picks.pos[i] == 0)
                v = front_vertex;
            else if (picks.pos[i] == L)
                v = back_vertex;
            else
                v = g.add_vertex();
            if (pick_ids && picks.slot[i] >= 0) pick_ids->push_back(v);
            if (v != prev) g.add_edge(prev, v, picks.pos[i] - prev_pos);
            prev = v;
            prev_pos = picks.pos[i];
        }
        if (back_vertex != prev) g.add_edge(prev, back_vertex, L - prev_pos);
    };

    std::vector<int> pick_vertices;
    for (int a = 0; a < m; ++a) {
        const AisleContents& contents = norm.aisles[static_cast<size_t>(a)];
        if (levels == 2) {
            chain(cross[static_cast<size_t>(a * 2 + 1)], cross[static_cast<size_t>(a * 2)],
                  contents.lower, &pick_vertices);
        } else {
            chain(cross[static_cast<size_t>(a * 3 + 2)], cross[static_cast<size_t>(a * 3 + 1)],
                  contents.lower, &pick_vertices);
            chain(cross[static_cast<size_t>(a * 3 + 1)], cross[static_cast<size_t>(a * 3)],
                  contents.upper, &pick_vertices);
        }
    }

    int depot_level = norm.depot.cross == CrossAisle::Front    ? levels - 1
                      : norm.depot.cross == CrossAisle::Middle ? 1
                                                               : 0;
    g.required.push_back(cross[static_cast<size_t>((norm.depot.aisle - 1) * levels + depot_level)]);
    for (int v : pick_vertices) g.required.push_back(v);
    return g;
}

std::vector<Length> dijkstra(const Graph& g, int src) {
    std::vector<Length> dist(static_cast<size_t>(g.n), LINF);
    std::priority_queue<std::pair<Length, int>, std::vector<std::pair<Length, int>>, std::greater<>> pq;
    dist[static_cast<size_t>(src)] = 0;
    pq.push({0, src});
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d != dist[static_cast<size_t>(u)]) continue;
        for (auto [v, len] : g.adj[static_cast<size_t>(u)]) {
            if (d + len < dist[static_cast<size_t>(v)]) {
                dist[static_cast<size_t>(v)] = d + len;
                pq.push({d + len, v});
            }
        }
    }
    return dist;
}

} // namespace

Length oracle_optimal(const PickInstance& inst) {
    NormalizedInstance norm = normalize_instance(inst);
    if (inst.picks.size() > kOracleMaxPicks)
        throw ValidationError("oracle size cap exceeded: " + std::to_string(inst.picks.size()) +
                              " picks > " + std::to_string(kOracleMaxPicks));
    Graph g = build_graph(norm);
    int n = static_cast<int>(g.required.size());
    if (n <= 1) return 0;

    std::vector<std::vector<Length>> d(static_cast<size_t>(n), std::vector<Length>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) {
        std::vector<Length> dist = dijkstra(g, g.required[static_cast<size_t>(i)]);
        for (int j = 0; j < n; ++j) d[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            dist[static_cast<size_t>(g.required[static_cast<size_t>(j)])];
    }

    // Held-Karp over {1..n-1}, vertex 0 is the depot.
    int k = n - 1;
    size_t masks = static_cast<size_t>(1) << k;
    std::vector<std::vector<Length>> dp(masks, std::vector<Length>(static_cast<size_t>(k), LINF));
    for (int j = 0; j < k; ++j)
        dp[static_cast<size_t>(1) << j][static_cast<size_t>(j)] =
            d[0][static_cast<size_t>(j + 1)];
    for (size_t mask = 1; mask < masks; ++mask) {
        for (int j = 0; j < k; ++j) {
            if (!(mask & (static_cast<size_t>(1) << j))) continue;
            Length cur = dp[mask][static_cast<size_t>(j)];
            if (cur >= LINF) continue;
            for (int t = 0; t < k; ++t) {
                if (mask & (static_cast<size_t>(1) << t)) continue;
                size_t nm = mask | (static_cast<size_t>(1) << t);
                Length cand = cur + d[static_cast<size_t>(j + 1)][static_cast<size_t>(t + 1)];
                if (cand < dp[nm][static_cast<size_t>(t)]) dp[nm][static_cast<size_t>(t)] = cand;
            }
        }
    }
    Length best = LINF;
    for (int j = 0; j < k; ++j) {
        Length cand = dp[masks - 1][static_cast<size_t>(j)] + d[static_cast<size_t>(j + 1)][0];
        best = std::min(best, cand);
    }
    return best;
}

std::vector<Length> oracle_depot_distances(const PickInstance& inst) {
    NormalizedInstance norm = normalize_instance(inst);
    Graph g = build_graph(norm);
    std::vector<Length> dist = dijkstra(g, g.required[0]);
    std::vector<Length> out;
    for (size_t i = 1; i < g.required.size(); ++i)
        out.push_back(dist[static_cast<size_t>(g.required[i])]);
    return out;
}

} // namespace pickroute

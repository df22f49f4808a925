#include "pickroute/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <unordered_map>

#include "json.hpp"

namespace pickroute {

namespace {

constexpr Length LINF = std::numeric_limits<Length>::max() / 4;

// ---- tour-graph vertex encoding ------------------------------------------

// level: 0 back, 1 middle, 2 front
using VertexId = std::int64_t;

VertexId cross_vertex(int aisle, int level) {
    return (static_cast<std::int64_t>(0) << 56) | (static_cast<std::int64_t>(aisle) << 16) | level;
}

VertexId pick_vertex(int aisle, int sub_index, int slot) {
    return (static_cast<std::int64_t>(1) << 56) | (static_cast<std::int64_t>(aisle) << 16) |
           (static_cast<std::int64_t>(sub_index) << 8) | slot;
}

std::string vertex_label(VertexId v, int blocks) {
    int kind = static_cast<int>(v >> 56);
    int aisle = static_cast<int>((v >> 16) & 0xffffff);
    if (kind == 0) {
        int level = static_cast<int>(v & 0xff);
        const char* name = level == 0 ? "a" : (level == 1 ? "b" : (blocks == 2 ? "c" : "b"));
        return std::string(name) + std::to_string(aisle);
    }
    int sub = static_cast<int>((v >> 8) & 0xff);
    int slot = static_cast<int>(v & 0xff);
    if (blocks == 1) return "p" + std::to_string(aisle) + "." + std::to_string(slot);
    return "p" + std::to_string(aisle) + (sub == 0 ? ".upper." : ".lower.") + std::to_string(slot);
}

int front_level(int levels, int sub_index) {
    if (levels == 2) return 2;
    return sub_index == 0 ? 1 : 2;
}

int back_level(int levels, int sub_index) {
    if (levels == 2) return 0;
    return sub_index == 0 ? 0 : 1;
}

int level_of_segment(int levels, int k_index) {
    if (levels == 2) return k_index == 0 ? 0 : 2;
    return k_index;
}

// ---- sweep plan ------------------------------------------------------------

struct SweepAisle {
    int orig_index = 1;    // 1-based
    int next_orig_index = 0; // 0 when last
    int span_after = 1;
    SubaisleInfo sub[2]; // [0] upper / only, [1] lower
    bool items_right = false;
};

struct StageSpec {
    const TransitionTable* table = nullptr;
    int aisle = 0; // index into SweepAisle list
    bool rescue = false;
};

struct Cell {
    Length cost = LINF;
    int prev = -1;
    VerticalConfig vcfg = VerticalConfig::None;
    HorizontalConfig hcfg;
    VerticalConfig dv[2] = {VerticalConfig::None, VerticalConfig::None};
};

struct SweepPlan {
    const StateSpace* space = nullptr;
    int levels = 2;
    Length width = 0; // half-units
    std::vector<SweepAisle> aisles;
    std::vector<StageSpec> stages;
    // anchor-stub rescue rows (two-block pruned horizontal table only)
    std::vector<std::vector<HorizontalConfig>> rescue_rows;
};

void build_rescue_rows(SweepPlan& plan, const TransitionTable& htable, const SweepAisle& depot_aisle) {
    const StateSpace& space = *plan.space;
    plan.rescue_rows.assign(static_cast<size_t>(space.size()), {});
    bool anchor[3] = {};
    anchor[0] = depot_aisle.sub[0].anchor_back;
    anchor[1] = depot_aisle.sub[0].anchor_front || depot_aisle.sub[1].anchor_back;
    anchor[2] = depot_aisle.sub[1].anchor_front;
    for (int sid = 0; sid < space.size(); ++sid) {
        const StateKey& s = space.state(sid);
        for (const HorizontalConfig& cfg : two_horizontals()) {
            if (cfg.all_zero()) continue;
            bool stub_to_anchor = false;
            for (int lvl = 0; lvl < 3; ++lvl)
                if (anchor[lvl] && cfg.k[static_cast<size_t>(lvl)] == 2 &&
                    s.par[static_cast<size_t>(lvl)] == Parity::Zero)
                    stub_to_anchor = true;
            if (!stub_to_anchor) continue;
            bool in_table = false;
            for (int ridx : htable.rows_by_state[static_cast<size_t>(sid)])
                if (htable.rows[static_cast<size_t>(ridx)].horizontal == cfg) in_table = true;
            if (!in_table) plan.rescue_rows[static_cast<size_t>(sid)].push_back(cfg);
        }
    }
}

struct SweepResult {
    Length length = 0;
    std::vector<std::vector<Cell>> snapshots; // filled when requested
};

SweepResult run_sweep(const SweepPlan& plan, Counters* counters, bool keep_snapshots) {
    const StateSpace& space = *plan.space;
    const int n = space.size();
    const int initial = space.initial_id();

    SweepResult result;
    std::vector<Cell> cur(static_cast<size_t>(n));
    cur[static_cast<size_t>(initial)].cost = 0;
    std::vector<Cell> next(static_cast<size_t>(n));

    for (const StageSpec& stage : plan.stages) {
        const TransitionTable& table = *stage.table;
        const SweepAisle& aisle = plan.aisles[static_cast<size_t>(stage.aisle)];
        bool last_aisle = aisle.next_orig_index == 0;

        TransitionCtx ctx;
        ctx.levels = plan.levels;
        ctx.sub[0] = &aisle.sub[0];
        ctx.sub[1] = plan.levels == 3 ? &aisle.sub[1] : nullptr;
        ctx.items_right = aisle.items_right;

        for (auto& cell : next) cell = Cell{};
        if (counters) ++counters->stages;

        for (int sid = 0; sid < n; ++sid) {
            const Cell& from = cur[static_cast<size_t>(sid)];
            if (from.cost >= LINF) continue;
            const StateKey& state = space.state(sid);

            auto consider = [&](const TableRow& row) {
                if (row.kind != StageKind::Vertical) {
                    if (row.final_only && ctx.items_right && sid != initial) return;
                    if (!row.final_only && last_aisle) return; // no aisle to the right
                }
                Length cost = from.cost;
                int next_id = -1;
                Cell cand;
                switch (row.kind) {
                    case StageKind::Vertical: {
                        if (counters) ++counters->evals_vertical;
                        const SubaisleInfo& sub = aisle.sub[table.sub_index];
                        auto to = step_vertical(state, table.sub_index, row.vertical, sub);
                        if (!to) return;
                        cost += sub.cost[static_cast<int>(row.vertical)];
                        next_id = space.id(*to);
                        cand.vcfg = row.vertical;
                        break;
                    }
                    case StageKind::Horizontal: {
                        if (counters) ++counters->evals_horizontal;
                        auto to = step_horizontal(state, row.horizontal, ctx);
                        if (!to) return;
                        cost += horizontal_cost(row.horizontal, plan.width, aisle.span_after);
                        next_id = space.id(*to);
                        cand.hcfg = row.horizontal;
                        break;
                    }
                    case StageKind::Combined: {
                        if (counters) ++counters->evals_combined;
                        auto to = step_combined(state, row.horizontal, ctx);
                        if (!to) return;
                        cost += to->vertical_cost +
                                horizontal_cost(row.horizontal, plan.width, aisle.span_after);
                        next_id = space.id(to->next);
                        cand.hcfg = row.horizontal;
                        cand.dv[0] = to->vertical[0];
                        cand.dv[1] = to->vertical[1];
                        break;
                    }
                }
                Cell& slot = next[static_cast<size_t>(next_id)];
                if (cost < slot.cost) {
                    cand.cost = cost;
                    cand.prev = sid;
                    slot = cand;
                }
            };

            for (int ridx : table.rows_by_state[static_cast<size_t>(sid)])
                consider(table.rows[static_cast<size_t>(ridx)]);
            if (stage.rescue) {
                for (const HorizontalConfig& cfg : plan.rescue_rows[static_cast<size_t>(sid)]) {
                    TableRow row;
                    row.state_id = sid;
                    row.kind = StageKind::Horizontal;
                    row.horizontal = cfg;
                    consider(row);
                }
            }
        }
        cur.swap(next);
        if (keep_snapshots) result.snapshots.push_back(cur);
    }

    const Cell& term = cur[static_cast<size_t>(space.terminal_id())];
    if (term.cost >= LINF) throw std::logic_error("DP reached no terminal state");
    result.length = term.cost;
    return result;
}

// ---- reconstruction --------------------------------------------------------

struct EdgeAcc {
    std::map<std::pair<VertexId, VertexId>, std::pair<Length, int>> edges;

    void add(VertexId u, VertexId v, Length len, int mult) {
        if (u == v || len == 0 || mult == 0) return;
        if (v < u) std::swap(u, v);
        auto& slot = edges[{u, v}];
        slot.first = len;
        slot.second += mult;
    }
};

VertexId vertex_at(const SubaisleInfo& sub, int aisle, int sub_index, int levels, Length p) {
    if (p == 0) return cross_vertex(aisle, front_level(levels, sub_index));
    if (p == sub.L) return cross_vertex(aisle, back_level(levels, sub_index));
    const SubaislePicks& picks = *sub.picks;
    for (size_t i = 0; i < picks.pos.size(); ++i)
        if (picks.pos[i] == p) return pick_vertex(aisle, sub_index, picks.slot[i]);
    throw std::logic_error("no vertex at subaisle position");
}

void emit_run(EdgeAcc& acc, const SubaisleInfo& sub, int aisle, int sub_index, int levels,
              Length lo, Length hi, int mult) {
    if (lo >= hi) return;
    std::vector<Length> points;
    points.push_back(lo);
    for (Length p : sub.picks->pos)
        if (p > lo && p < hi) points.push_back(p);
    points.push_back(hi);
    for (size_t i = 0; i + 1 < points.size(); ++i) {
        VertexId u = vertex_at(sub, aisle, sub_index, levels, points[i]);
        VertexId v = vertex_at(sub, aisle, sub_index, levels, points[i + 1]);
        acc.add(u, v, points[i + 1] - points[i], mult);
    }
}

void emit_vertical(EdgeAcc& acc, const SubaisleInfo& sub, int aisle, int sub_index, int levels,
                   VerticalConfig cfg) {
    switch (cfg) {
        case VerticalConfig::None:
            return;
        case VerticalConfig::OnePass:
            emit_run(acc, sub, aisle, sub_index, levels, 0, sub.L, 1);
            return;
        case VerticalConfig::TwoPass:
            emit_run(acc, sub, aisle, sub_index, levels, 0, sub.L, 2);
            return;
        case VerticalConfig::Top:
            if (!sub.is_empty) emit_run(acc, sub, aisle, sub_index, levels, sub.min_pos, sub.L, 2);
            return;
        case VerticalConfig::Bottom:
            if (!sub.is_empty) emit_run(acc, sub, aisle, sub_index, levels, 0, sub.max_pos, 2);
            return;
        case VerticalConfig::Gap:
            if (!sub.is_empty) {
                emit_run(acc, sub, aisle, sub_index, levels, 0, sub.gap_bottom_hi, 2);
                emit_run(acc, sub, aisle, sub_index, levels, sub.gap_top_lo, sub.L, 2);
            }
            return;
    }
}

void emit_horizontal(EdgeAcc& acc, int from_aisle, int to_aisle, int levels, Length width,
                     const HorizontalConfig& cfg) {
    for (int i = 0; i < levels; ++i) {
        int k = cfg.k[static_cast<size_t>(i)];
        if (k == 0) continue;
        int level = level_of_segment(levels, i);
        for (int a = from_aisle; a < to_aisle; ++a)
            acc.add(cross_vertex(a, level), cross_vertex(a + 1, level), width, k);
    }
}

std::vector<std::string> eulerian_walk(const EdgeAcc& acc, VertexId start, int blocks) {
    // Expand the multiset, then extract a circuit with Hierholzer's method.
    struct HalfEdge {
        VertexId to;
        int edge;
    };
    std::unordered_map<VertexId, std::vector<HalfEdge>> adj;
    int edge_count = 0;
    for (const auto& [key, val] : acc.edges) {
        for (int i = 0; i < val.second; ++i) {
            adj[key.first].push_back({key.second, edge_count});
            adj[key.second].push_back({key.first, edge_count});
            ++edge_count;
        }
    }
    std::vector<bool> used(static_cast<size_t>(edge_count), false);
    std::unordered_map<VertexId, size_t> next_idx;
    std::vector<VertexId> stack{start};
    std::vector<VertexId> circuit;
    while (!stack.empty()) {
        VertexId v = stack.back();
        auto& list = adj[v];
        size_t& idx = next_idx[v];
        while (idx < list.size() && used[static_cast<size_t>(list[idx].edge)]) ++idx;
        if (idx == list.size()) {
            circuit.push_back(v);
            stack.pop_back();
        } else {
            used[static_cast<size_t>(list[idx].edge)] = true;
            stack.push_back(list[idx].to);
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    std::vector<std::string> walk;
    walk.reserve(circuit.size());
    for (VertexId v : circuit) walk.push_back(vertex_label(v, blocks));
    return walk;
}

VertexId depot_vertex(const NormalizedInstance& norm) {
    int level = norm.depot.cross == CrossAisle::Front    ? 2
                : norm.depot.cross == CrossAisle::Middle ? 1
                                                         : 0;
    if (norm.layout.blocks == 1 && norm.depot.cross == CrossAisle::Back) level = 0;
    return cross_vertex(norm.depot.aisle, level);
}

void validate_and_attach_tour(Solution& sol, const EdgeAcc& acc, const NormalizedInstance& norm) {
    Length total = 0;
    std::map<VertexId, long long> degree;
    for (const auto& [key, val] : acc.edges) {
        total += val.first * val.second;
        degree[key.first] += val.second;
        degree[key.second] += val.second;
    }
    if (total != sol.length)
        throw std::logic_error("reconstructed tour length " + format_length(total) +
                               " != DP optimum " + format_length(sol.length));
    for (const auto& [v, d] : degree)
        if (d % 2)
            throw std::logic_error("odd degree at " + vertex_label(v, norm.layout.blocks));

    // connectivity over vertices with incident edges
    if (!degree.empty()) {
        std::map<VertexId, VertexId> parent;
        for (const auto& [v, d] : degree) parent[v] = v;
        std::function<VertexId(VertexId)> find = [&](VertexId v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (const auto& [key, val] : acc.edges) parent[find(key.first)] = find(key.second);
        VertexId root = find(degree.begin()->first);
        for (const auto& [v, d] : degree)
            if (find(v) != root) throw std::logic_error("tour subgraph is disconnected");
        if (!degree.count(depot_vertex(norm)) || find(depot_vertex(norm)) != root)
            throw std::logic_error("tour subgraph misses the depot");
    }
    for (const Pick& p : norm.picks) {
        Block b = norm.layout.blocks == 2 ? p.block : Block::Lower;
        int sub_index = norm.layout.blocks == 2 && b == Block::Upper ? 0 : 1;
        if (norm.layout.blocks == 1) sub_index = 0;
        VertexId v = pick_vertex(p.aisle, sub_index, p.slot);
        if (!degree.count(v))
            throw std::logic_error("tour subgraph misses pick " +
                                   vertex_label(v, norm.layout.blocks));
    }

    for (const auto& [key, val] : acc.edges)
        sol.tour.push_back({vertex_label(key.first, norm.layout.blocks),
                            vertex_label(key.second, norm.layout.blocks), val.first, val.second});
    sol.walk = eulerian_walk(acc, depot_vertex(norm), norm.layout.blocks);
}

// ---- plan construction -----------------------------------------------------

const char* stage_name(StageKind kind, int sub_index, int levels) {
    switch (kind) {
        case StageKind::Vertical:
            if (levels == 2) return "vertical";
            return sub_index == 1 ? "vertical_lower" : "vertical_upper";
        case StageKind::Horizontal:
            return "horizontal";
        case StageKind::Combined:
            return "combined";
    }
    return "?";
}

SweepPlan plan_single(const NormalizedInstance& norm, const CompressedInstance& comp,
                      SingleVariant variant, Counters* counters) {
    SweepPlan plan;
    plan.space = &StateSpace::single();
    plan.levels = 2;
    plan.width = norm.layout.spacing();

    auto t0 = std::chrono::steady_clock::now();
    Length L = norm.layout.subaisle_length();
    size_t m = comp.aisles.size();
    plan.aisles.resize(m);
    for (size_t j = 0; j < m; ++j) {
        SweepAisle& a = plan.aisles[j];
        a.orig_index = comp.orig_index[j];
        a.next_orig_index = j + 1 < m ? comp.orig_index[j + 1] : 0;
        a.span_after = j + 1 < m ? comp.span[j + 1] : 1;
        a.sub[0] = build_subaisle_info(comp.aisles[j]->lower, L);
        a.items_right = j + 1 < m; // compressed aisles are all non-empty
    }
    if (counters) {
        counters->precompute_ns +=
            std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0)
                .count();
    }

    for (size_t j = 0; j < m; ++j) {
        if (variant == SingleVariant::Original) {
            plan.stages.push_back(
                {&transition_table(TableVariant::SingleOriginalVertical), static_cast<int>(j), false});
            plan.stages.push_back(
                {&transition_table(TableVariant::SingleOriginalHorizontal), static_cast<int>(j), false});
        } else {
            plan.stages.push_back(
                {&transition_table(TableVariant::SingleCombined), static_cast<int>(j), false});
        }
    }
    return plan;
}

SweepPlan plan_two(const NormalizedInstance& norm, TwoVariant variant, Counters* counters) {
    SweepPlan plan;
    plan.space = &StateSpace::two();
    plan.levels = 3;
    plan.width = norm.layout.spacing();

    auto t0 = std::chrono::steady_clock::now();
    Length L = norm.layout.subaisle_length();
    size_t m = static_cast<size_t>(norm.layout.aisles);
    plan.aisles.resize(m);
    for (size_t j = 0; j < m; ++j) {
        SweepAisle& a = plan.aisles[j];
        a.orig_index = static_cast<int>(j) + 1;
        a.next_orig_index = j + 1 < m ? static_cast<int>(j) + 2 : 0;
        a.span_after = 1;
        a.sub[0] = build_subaisle_info(norm.aisles[j].upper, L);
        a.sub[1] = build_subaisle_info(norm.aisles[j].lower, L);
    }
    bool right = false;
    for (size_t j = m; j-- > 0;) {
        plan.aisles[j].items_right = right;
        if (!norm.aisles[j].lower.empty() || !norm.aisles[j].upper.empty()) right = true;
    }
    if (counters) {
        counters->precompute_ns +=
            std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0)
                .count();
    }

    int depot_aisle_idx = norm.depot.aisle - 1;
    const TransitionTable* htable = &transition_table(TableVariant::TwoOriginalHorizontal);
    for (size_t j = 0; j < m; ++j) {
        bool rescue = static_cast<int>(j) == depot_aisle_idx;
        switch (variant) {
            case TwoVariant::Original:
                plan.stages.push_back(
                    {&transition_table(TableVariant::TwoOriginalLower), static_cast<int>(j), false});
                plan.stages.push_back(
                    {&transition_table(TableVariant::TwoOriginalUpper), static_cast<int>(j), false});
                plan.stages.push_back({htable, static_cast<int>(j), rescue});
                break;
            case TwoVariant::Mod1:
                plan.stages.push_back(
                    {&transition_table(TableVariant::TwoMod1Lower), static_cast<int>(j), false});
                plan.stages.push_back(
                    {&transition_table(TableVariant::TwoMod1Upper), static_cast<int>(j), false});
                plan.stages.push_back({htable, static_cast<int>(j), rescue});
                break;
            case TwoVariant::Mod2:
                plan.stages.push_back(
                    {&transition_table(TableVariant::TwoCombined), static_cast<int>(j), false});
                break;
        }
    }
    build_rescue_rows(plan, *htable, plan.aisles[static_cast<size_t>(depot_aisle_idx)]);
    return plan;
}

Solution finish_solve(const SweepPlan& plan, const NormalizedInstance& norm,
                      const SolveOptions& opts, Counters counters) {
    auto t0 = std::chrono::steady_clock::now();
    SweepResult res = run_sweep(plan, &counters, opts.want_tour);
    counters.runtime_ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0)
            .count();

    if (opts.timing_repeats > 0) {
        auto t1 = std::chrono::steady_clock::now();
        for (int r = 0; r < opts.timing_repeats; ++r) run_sweep(plan, nullptr, false);
        auto dt = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t1)
                      .count();
        counters.runtime_ns = dt / opts.timing_repeats;
    }

    Solution sol;
    sol.length = res.length;
    sol.counters = counters;

    if (!opts.want_tour) return sol;

    // Backtrace, then replay the chosen actions into an edge multiset.
    const StateSpace& space = *plan.space;
    std::vector<std::pair<int, Cell>> chain; // (state reached, cell)
    int sid = space.terminal_id();
    for (size_t s = res.snapshots.size(); s-- > 0;) {
        const Cell& cell = res.snapshots[s][static_cast<size_t>(sid)];
        chain.push_back({sid, cell});
        sid = cell.prev;
    }
    std::reverse(chain.begin(), chain.end());

    EdgeAcc acc;
    for (size_t s = 0; s < chain.size(); ++s) {
        const StageSpec& spec = plan.stages[s];
        const TransitionTable& table = *spec.table;
        const SweepAisle& aisle = plan.aisles[static_cast<size_t>(spec.aisle)];
        const Cell& cell = chain[s].second;

        TraceStep step;
        step.aisle = aisle.orig_index;
        step.kind = table.kind;
        step.stage = stage_name(table.kind, table.sub_index, plan.levels);
        step.state = space.name(chain[s].first);
        switch (table.kind) {
            case StageKind::Vertical:
                step.vertical = vertical_name(cell.vcfg);
                emit_vertical(acc, aisle.sub[table.sub_index], aisle.orig_index, table.sub_index,
                              plan.levels, cell.vcfg);
                break;
            case StageKind::Horizontal:
                step.horizontal = cell.hcfg.name();
                if (aisle.next_orig_index > 0)
                    emit_horizontal(acc, aisle.orig_index, aisle.next_orig_index, plan.levels,
                                    plan.width, cell.hcfg);
                break;
            case StageKind::Combined:
                step.horizontal = cell.hcfg.name();
                step.vertical = vertical_name(cell.dv[0]);
                if (plan.levels == 3) step.vertical_lower = vertical_name(cell.dv[1]);
                emit_vertical(acc, aisle.sub[0], aisle.orig_index, 0, plan.levels, cell.dv[0]);
                if (plan.levels == 3)
                    emit_vertical(acc, aisle.sub[1], aisle.orig_index, 1, plan.levels, cell.dv[1]);
                if (aisle.next_orig_index > 0)
                    emit_horizontal(acc, aisle.orig_index, aisle.next_orig_index, plan.levels,
                                    plan.width, cell.hcfg);
                break;
        }
        sol.trace.push_back(step);
    }
    validate_and_attach_tour(sol, acc, norm);
    return sol;
}

} // namespace

bool needs_original_delegation(const NormalizedInstance& norm) {
    int non_empty = 0;
    for (const AisleContents& a : norm.aisles)
        if (!a.lower.empty() || !a.upper.empty()) ++non_empty;
    return non_empty <= 1;
}

Solution solve_single(const PickInstance& inst, SingleVariant variant, const SolveOptions& opts) {
    if (inst.layout.blocks != 1) throw ValidationError("single-block solver needs blocks = 1");
    NormalizedInstance norm = normalize_instance(inst);
    CompressedInstance comp = compress_empty_aisles(norm);
    Counters counters;
    SweepPlan plan = plan_single(norm, comp, variant, &counters);
    return finish_solve(plan, norm, opts, counters);
}

Solution solve_two(const PickInstance& inst, TwoVariant variant, const SolveOptions& opts) {
    if (inst.layout.blocks != 2) throw ValidationError("two-block solver needs blocks = 2");
    NormalizedInstance norm = normalize_instance(inst);
    Counters counters;
    bool delegated = variant != TwoVariant::Original && needs_original_delegation(norm);
    TwoVariant effective = delegated ? TwoVariant::Original : variant;
    SweepPlan plan = plan_two(norm, effective, &counters);
    Solution sol = finish_solve(plan, norm, opts, counters);
    sol.delegated = delegated;
    return sol;
}

Solution solve_instance(const PickInstance& inst, const std::string& algo, const SolveOptions& opts) {
    if (algo == "single-original") return solve_single(inst, SingleVariant::Original, opts);
    if (algo == "single-modified") return solve_single(inst, SingleVariant::Modified, opts);
    if (algo == "two-original") return solve_two(inst, TwoVariant::Original, opts);
    if (algo == "two-mod1") return solve_two(inst, TwoVariant::Mod1, opts);
    if (algo == "two-mod2") return solve_two(inst, TwoVariant::Mod2, opts);
    throw ValidationError("unknown algorithm: " + algo);
}

bool algo_matches_blocks(const std::string& algo, int blocks) {
    bool single = algo.rfind("single-", 0) == 0;
    return single == (blocks == 1);
}

std::vector<std::string> algos_for_blocks(int blocks) {
    if (blocks == 1) return {"single-original", "single-modified"};
    return {"two-original", "two-mod1", "two-mod2"};
}

std::string solution_to_json(const Solution& sol) {
    nlohmann::json doc;
    doc["length"] = static_cast<double>(sol.length) / 2.0;
    doc["delegated"] = sol.delegated;
    nlohmann::json trace = nlohmann::json::array();
    for (const TraceStep& s : sol.trace) {
        nlohmann::json js;
        js["aisle"] = s.aisle;
        js["stage"] = s.stage;
        js["state"] = s.state;
        if (!s.horizontal.empty()) js["horizontal"] = s.horizontal;
        if (!s.vertical.empty()) js["vertical"] = s.vertical;
        if (!s.vertical_lower.empty()) js["vertical_lower"] = s.vertical_lower;
        trace.push_back(js);
    }
    doc["trace"] = trace;
    nlohmann::json tour = nlohmann::json::array();
    for (const TourEdge& e : sol.tour) {
        nlohmann::json je;
        je["u"] = e.u;
        je["v"] = e.v;
        je["length"] = static_cast<double>(e.length) / 2.0;
        je["mult"] = e.mult;
        tour.push_back(je);
    }
    doc["tour"] = tour;
    doc["walk"] = sol.walk;
    doc["counters"] = {{"stages", sol.counters.stages},
                       {"evals_vertical", sol.counters.evals_vertical},
                       {"evals_horizontal", sol.counters.evals_horizontal},
                       {"evals_combined", sol.counters.evals_combined},
                       {"runtime_ns", sol.counters.runtime_ns},
                       {"precompute_ns", sol.counters.precompute_ns}};
    return doc.dump(2) + "\n";
}

} // namespace pickroute

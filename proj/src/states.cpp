#include "pickroute/states.hpp"

#include <algorithm>
#include <map>

namespace pickroute {

void StateKey::canonicalize() {
    // comp ids may arrive as raw union-find roots (0..6) before renumbering
    std::array<int, 8> remap{-1, -1, -1, -1, -1, -1, -1, -1};
    int next = 0;
    for (int i = 0; i < levels; ++i) {
        if (par[i] == Parity::Zero) {
            comp[i] = -1;
            continue;
        }
        size_t c = static_cast<size_t>(comp[i]) & 7;
        if (remap[c] < 0) remap[c] = next++;
        comp[i] = static_cast<std::int8_t>(remap[c]);
    }
    for (int i = levels; i < 3; ++i) {
        par[i] = Parity::Zero;
        comp[i] = -1;
    }
}

int StateKey::component_count() const {
    int maxc = -1;
    for (int i = 0; i < levels; ++i) maxc = std::max(maxc, static_cast<int>(comp[i]));
    return maxc + 1 + detached;
}

std::string StateKey::name() const {
    std::string s = "(";
    for (int i = 0; i < levels; ++i) {
        s += parity_char(par[i]);
        s += ',';
    }
    s += std::to_string(component_count());
    s += "C";
    // The component split is only ambiguous for (E,E,E,2C): name the
    // singleton vertex.
    if (levels == 3 && component_count() == 2 && par[0] == Parity::Even &&
        par[1] == Parity::Even && par[2] == Parity::Even) {
        static const char* tags[3] = {"a-bc", "b-ac", "c-ab"};
        for (int i = 0; i < 3; ++i) {
            int same = 0;
            for (int j = 0; j < 3; ++j)
                if (j != i && comp[j] == comp[i]) ++same;
            if (same == 0) {
                s += ",";
                s += tags[i];
                break;
            }
        }
    }
    s += ")";
    return s;
}

namespace {

// Every valid class: per-component odd-degree counts must be even, and a
// detached (boundary-free) component exists only in the terminal class.
std::vector<StateKey> enumerate_classes(int levels) {
    std::vector<StateKey> out;
    std::array<Parity, 3> par{Parity::Zero, Parity::Zero, Parity::Zero};
    int combos = 1;
    for (int i = 0; i < levels; ++i) combos *= 3;
    for (int c = 0; c < combos; ++c) {
        int x = c;
        std::vector<int> touched;
        for (int i = 0; i < levels; ++i) {
            par[static_cast<size_t>(i)] = static_cast<Parity>(x % 3);
            if (par[static_cast<size_t>(i)] != Parity::Zero) touched.push_back(i);
            x /= 3;
        }
        // all partitions of the touched set via restricted growth strings
        size_t t = touched.size();
        std::vector<int> assign(t, 0);
        while (true) {
            StateKey key;
            key.levels = static_cast<std::uint8_t>(levels);
            key.par = par;
            key.comp = {-1, -1, -1};
            for (size_t i = 0; i < t; ++i)
                key.comp[static_cast<size_t>(touched[i])] = static_cast<std::int8_t>(assign[i]);
            key.canonicalize();
            int ncomp = key.component_count();
            std::vector<int> oddcount(static_cast<size_t>(std::max(ncomp, 1)), 0);
            bool ok = true;
            for (int i = 0; i < levels; ++i)
                if (key.par[static_cast<size_t>(i)] == Parity::Odd)
                    ++oddcount[static_cast<size_t>(key.comp[static_cast<size_t>(i)])];
            for (int v : oddcount)
                if (v % 2) ok = false;
            if (ok && std::find(out.begin(), out.end(), key) == out.end()) out.push_back(key);
            // next restricted growth string
            if (t == 0) break;
            size_t i = t - 1;
            while (true) {
                int maxprev = 0;
                for (size_t j = 0; j < i; ++j) maxprev = std::max(maxprev, assign[j] + 1);
                if (assign[i] < maxprev) {
                    ++assign[i];
                    for (size_t j = i + 1; j < t; ++j) assign[j] = 0;
                    break;
                }
                if (i == 0) goto done_partitions;
                --i;
            }
        }
    done_partitions:;
        // detached variants: only for the all-untouched parity combo
        if (touched.empty()) {
            StateKey key;
            key.levels = static_cast<std::uint8_t>(levels);
            key.par = par;
            key.comp = {-1, -1, -1};
            key.detached = 1;
            key.canonicalize();
            out.push_back(key);
        }
    }
    return out;
}

std::vector<std::string> paper_order(int levels) {
    if (levels == 2)
        return {"(U,U,1C)", "(E,0,1C)", "(0,E,1C)", "(E,E,1C)", "(E,E,2C)", "(0,0,0C)", "(0,0,1C)"};
    return {"(E,0,0,1C)", "(0,E,0,1C)", "(0,0,E,1C)", "(E,E,0,1C)", "(E,0,E,1C)",
            "(0,E,E,1C)", "(E,E,E,1C)", "(U,U,0,1C)", "(U,0,U,1C)", "(0,U,U,1C)",
            "(E,U,U,1C)", "(U,E,U,1C)", "(U,U,E,1C)", "(E,E,0,2C)", "(E,0,E,2C)",
            "(0,E,E,2C)", "(E,E,E,2C,a-bc)", "(E,E,E,2C,b-ac)", "(E,E,E,2C,c-ab)",
            "(E,U,U,2C)", "(U,E,U,2C)", "(U,U,E,2C)", "(E,E,E,3C)", "(0,0,0,0C)",
            "(0,0,0,1C)"};
}

} // namespace

StateSpace::StateSpace(int levels) : levels_(levels) {
    std::vector<StateKey> found = enumerate_classes(levels);
    std::vector<std::string> order = paper_order(levels);
    if (found.size() != order.size())
        throw std::logic_error("state enumeration size mismatch: " + std::to_string(found.size()));
    for (const std::string& want : order) {
        auto it = std::find_if(found.begin(), found.end(),
                               [&](const StateKey& k) { return k.name() == want; });
        if (it == found.end()) throw std::logic_error("state class missing: " + want);
        states_.push_back(*it);
        names_.push_back(want);
    }
    for (int i = 0; i < size(); ++i) {
        const StateKey& k = states_[static_cast<size_t>(i)];
        bool untouched = true;
        for (int v = 0; v < levels_; ++v)
            if (k.par[static_cast<size_t>(v)] != Parity::Zero) untouched = false;
        if (untouched && !k.detached) initial_ = i;
        if (untouched && k.detached) terminal_ = i;
    }
    for (int i = 0; i < size(); ++i)
        if (is_intermediate(i)) intermediate_.push_back(i);
}

const StateSpace& StateSpace::single() {
    static const StateSpace space(2);
    return space;
}

const StateSpace& StateSpace::two() {
    static const StateSpace space(3);
    return space;
}

int StateSpace::id(const StateKey& key) const {
    for (int i = 0; i < size(); ++i)
        if (states_[static_cast<size_t>(i)] == key) return i;
    return -1;
}

int StateSpace::id_by_name(const std::string& n) const {
    for (int i = 0; i < size(); ++i)
        if (names_[static_cast<size_t>(i)] == n) return i;
    return -1;
}

namespace {

// Working structure for one transition: the current aisle's vertices
// (0..2), the next aisle's (3..5), plus the detached component as node 6.
struct Micro {
    int levels = 2;
    bool touched[7] = {};
    bool odd[7] = {};
    int parent[7] = {0, 1, 2, 3, 4, 5, 6};
    bool has_detached = false;

    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }

    void init(const StateKey& key) {
        levels = key.levels;
        for (int i = 0; i < 7; ++i) parent[i] = i;
        for (int i = 0; i < levels; ++i) {
            if (key.par[static_cast<size_t>(i)] == Parity::Zero) continue;
            touched[i] = true;
            odd[i] = key.par[static_cast<size_t>(i)] == Parity::Odd;
            for (int j = 0; j < i; ++j)
                if (key.comp[static_cast<size_t>(j)] == key.comp[static_cast<size_t>(i)] &&
                    key.par[static_cast<size_t>(j)] != Parity::Zero)
                    unite(i, j);
        }
        has_detached = key.detached != 0;
    }

    void touch(int v, int add_degree) {
        touched[v] = true;
        if (add_degree % 2) odd[v] = !odd[v];
    }

    // One doubled or single run [lo, hi] of a vertical configuration on
    // the subaisle whose endpoints are back_v/front_v.
    void apply_run(int back_v, int front_v, Length lo, Length hi, Length L, int mult) {
        if (lo >= hi) return; // no edges
        bool at_front = lo == 0;
        bool at_back = hi == L;
        if (at_front) touch(front_v, mult);
        if (at_back) touch(back_v, mult);
        if (at_front && at_back) unite(front_v, back_v);
    }

    bool apply_vertical(int sub_index, VerticalConfig cfg, const SubaisleInfo& sub) {
        int back_v = sub_index == 0 ? 0 : 1;
        int front_v = sub_index == 0 ? (levels == 2 ? 1 : 1) : 2;
        if (levels == 2) {
            back_v = 0;
            front_v = 1;
        }
        switch (cfg) {
            case VerticalConfig::None:
                return sub.is_empty;
            case VerticalConfig::OnePass:
                apply_run(back_v, front_v, 0, sub.L, sub.L, 1);
                return true;
            case VerticalConfig::TwoPass:
                apply_run(back_v, front_v, 0, sub.L, sub.L, 2);
                return true;
            case VerticalConfig::Top:
                if (!sub.is_empty) apply_run(back_v, front_v, sub.min_pos, sub.L, sub.L, 2);
                return true;
            case VerticalConfig::Bottom:
                if (!sub.is_empty) apply_run(back_v, front_v, 0, sub.max_pos, sub.L, 2);
                return true;
            case VerticalConfig::Gap:
                if (!sub.is_empty) {
                    apply_run(back_v, front_v, 0, sub.gap_bottom_hi, sub.L, 2);
                    apply_run(back_v, front_v, sub.gap_top_lo, sub.L, sub.L, 2);
                }
                return true;
        }
        return false;
    }

    StateKey classify_left() const {
        StateKey key;
        key.levels = static_cast<std::uint8_t>(levels);
        key.detached = has_detached ? 1 : 0;
        Micro tmp = *this;
        for (int i = 0; i < levels; ++i) {
            if (!touched[i]) continue;
            key.par[static_cast<size_t>(i)] = odd[i] ? Parity::Odd : Parity::Even;
            key.comp[static_cast<size_t>(i)] = static_cast<std::int8_t>(tmp.find(i));
        }
        key.canonicalize();
        return key;
    }
};

bool anchors_required(const TransitionCtx& ctx, bool required[3]) {
    required[0] = required[1] = required[2] = false;
    bool any = false;
    if (ctx.levels == 2) {
        if (ctx.sub[0]) {
            required[0] = ctx.sub[0]->anchor_back;
            required[1] = ctx.sub[0]->anchor_front;
        }
    } else {
        if (ctx.sub[0]) {
            required[0] = ctx.sub[0]->anchor_back;
            required[1] = ctx.sub[0]->anchor_front;
        }
        if (ctx.sub[1]) {
            required[1] = required[1] || ctx.sub[1]->anchor_back;
            required[2] = ctx.sub[1]->anchor_front;
        }
    }
    any = required[0] || required[1] || required[2];
    return any;
}

// Finalizes the current aisle after horizontal edges have been added and
// classifies the next boundary.  Returns nullopt when the transition
// leaves an odd vertex behind, strands a component, or misses the depot.
std::optional<StateKey> finalize(Micro& m, const HorizontalConfig& cfg, const TransitionCtx& ctx) {
    int levels = ctx.levels;
    for (int i = 0; i < levels; ++i) {
        if (cfg.k[static_cast<size_t>(i)] > 0) {
            m.touch(i, cfg.k[static_cast<size_t>(i)]);
            m.touch(3 + i, cfg.k[static_cast<size_t>(i)]);
            m.odd[3 + i] = cfg.k[static_cast<size_t>(i)] % 2 == 1;
            m.unite(i, 3 + i);
        }
    }
    for (int i = 0; i < levels; ++i)
        if (m.touched[i] && m.odd[i]) return std::nullopt;

    bool terminal = cfg.all_zero() && !ctx.items_right;

    int comp_of[7];
    for (int i = 0; i < 7; ++i) comp_of[i] = m.find(i);
    bool comp_live[7] = {};
    for (int i = 0; i < levels; ++i)
        if (m.touched[3 + i]) comp_live[comp_of[3 + i]] = true;

    int total_comps = 0;
    int seen[7];
    int nseen = 0;
    auto note_comp = [&](int c) {
        for (int i = 0; i < nseen; ++i)
            if (seen[i] == c) return;
        seen[nseen++] = c;
        ++total_comps;
    };
    for (int i = 0; i < 6; ++i)
        if (m.touched[i]) note_comp(comp_of[i]);
    if (m.has_detached) ++total_comps;

    bool required[3];
    anchors_required(ctx, required);

    if (terminal) {
        // A single component closes the tour; zero components is the
        // empty tour of an anchor-only instance.
        if (total_comps > 1) return std::nullopt;
        if (total_comps == 1) {
            for (int i = 0; i < levels; ++i)
                if (required[i] && !m.touched[i]) return std::nullopt;
        }
        StateKey key;
        key.levels = static_cast<std::uint8_t>(levels);
        key.detached = 1;
        key.canonicalize();
        return key;
    }

    if (cfg.all_zero()) {
        // Pass-through left of the first pick: nothing may exist yet.
        if (m.has_detached) return std::nullopt;
        for (int i = 0; i < 6; ++i)
            if (m.touched[i]) return std::nullopt;
        for (int i = 0; i < levels; ++i)
            if (required[i]) return std::nullopt;
        StateKey key;
        key.levels = static_cast<std::uint8_t>(levels);
        key.canonicalize();
        return key;
    }

    if (m.has_detached) return std::nullopt;
    for (int i = 0; i < levels; ++i)
        if (required[i] && !m.touched[i]) return std::nullopt;
    for (int i = 0; i < levels; ++i)
        if (m.touched[i] && !comp_live[comp_of[i]]) return std::nullopt;

    StateKey key;
    key.levels = static_cast<std::uint8_t>(levels);
    Micro tmp = m;
    for (int i = 0; i < levels; ++i) {
        if (!m.touched[3 + i]) continue;
        key.par[static_cast<size_t>(i)] = m.odd[3 + i] ? Parity::Odd : Parity::Even;
        key.comp[static_cast<size_t>(i)] = static_cast<std::int8_t>(tmp.find(3 + i));
    }
    key.canonicalize();
    return key;
}

} // namespace

std::optional<StateKey> step_vertical(const StateKey& state, int sub_index, VerticalConfig cfg,
                                      const SubaisleInfo& sub) {
    Micro m;
    m.init(state);
    if (!m.apply_vertical(sub_index, cfg, sub)) return std::nullopt;
    StateKey key = m.classify_left();
    // A touched vertex can never coexist with a finished detached
    // component; the class lookup below rejects it.
    const StateSpace& space = state.levels == 2 ? StateSpace::single() : StateSpace::two();
    if (space.id(key) < 0) return std::nullopt;
    return key;
}

std::optional<StateKey> step_horizontal(const StateKey& state, const HorizontalConfig& cfg,
                                        const TransitionCtx& ctx) {
    Micro m;
    m.init(state);
    return finalize(m, cfg, ctx);
}

std::optional<VerticalConfig> required_vertical(bool back_odd, bool front_odd, bool back_connected,
                                                bool front_connected, bool picks_empty) {
    if (back_odd != front_odd) return std::nullopt;
    if (back_odd) return VerticalConfig::OnePass;
    if (picks_empty) return VerticalConfig::None;
    if (back_connected && front_connected) return VerticalConfig::Gap;
    if (back_connected) return VerticalConfig::Top;
    if (front_connected) return VerticalConfig::Bottom;
    return std::nullopt;
}

namespace {

struct VerticalChoice {
    bool forced_one_pass = false;
    bool empty = false;
    bool back_live = false;
    bool front_live = false;
};

std::optional<CombinedStep> eval_combined_with(const StateKey& state, const HorizontalConfig& cfg,
                                               const TransitionCtx& ctx, VerticalConfig v0,
                                               VerticalConfig v1) {
    Micro m;
    m.init(state);
    int nsubs = ctx.levels - 1;
    if (!m.apply_vertical(0, v0, *ctx.sub[0])) return std::nullopt;
    if (nsubs == 2 && !m.apply_vertical(1, v1, *ctx.sub[1])) return std::nullopt;
    auto next = finalize(m, cfg, ctx);
    if (!next) return std::nullopt;
    CombinedStep step;
    step.next = *next;
    step.vertical[0] = v0;
    step.vertical[1] = v1;
    step.vertical_cost = ctx.sub[0]->cost[static_cast<int>(v0)];
    if (nsubs == 2) step.vertical_cost += ctx.sub[1]->cost[static_cast<int>(v1)];
    return step;
}

} // namespace

std::optional<CombinedStep> step_combined(const StateKey& state, const HorizontalConfig& cfg,
                                          const TransitionCtx& ctx) {
    int levels = ctx.levels;
    int nsubs = levels - 1;
    bool terminal = cfg.all_zero() && !ctx.items_right;

    if (cfg.all_zero() && !terminal) {
        // Empty-prefix pass-through; verticals are necessarily none.
        auto next = eval_combined_with(state, cfg, ctx, VerticalConfig::None, VerticalConfig::None);
        return next;
    }

    // Parity determines the 1pass assignments outright.
    auto odd_at = [&](int v) {
        return (state.par[static_cast<size_t>(v)] == Parity::Odd) !=
               (cfg.k[static_cast<size_t>(v)] % 2 == 1);
    };
    bool one_pass[2] = {false, false};
    if (levels == 2) {
        one_pass[0] = odd_at(0);
        if (odd_at(1) != one_pass[0]) return std::nullopt;
    } else {
        one_pass[0] = odd_at(0);
        one_pass[1] = odd_at(2);
        if (odd_at(1) != (one_pass[0] != one_pass[1])) return std::nullopt;
    }

    // Liveness of each current vertex: its component after 1passes and
    // horizontal links must reach a next-aisle vertex.  Gap/top/bottom
    // never link vertices, so they cannot change this.
    Micro probe;
    probe.init(state);
    for (int s = 0; s < nsubs; ++s) {
        if (!one_pass[s]) continue;
        int back_v = (levels == 2 || s == 0) ? 0 : 1;
        int front_v = (levels == 2) ? 1 : (s == 0 ? 1 : 2);
        probe.touch(back_v, 1);
        probe.touch(front_v, 1);
        probe.unite(back_v, front_v);
    }
    bool participates[3] = {};
    for (int i = 0; i < levels; ++i)
        participates[i] = probe.touched[i] || cfg.k[static_cast<size_t>(i)] > 0;
    bool live[3] = {};
    for (int i = 0; i < levels; ++i) {
        if (!participates[i]) continue;
        if (terminal) {
            live[i] = true; // single-component check happens in finalize
            continue;
        }
        for (int j = 0; j < levels; ++j) {
            bool linked = probe.touched[j] || cfg.k[static_cast<size_t>(j)] > 0;
            if (linked && cfg.k[static_cast<size_t>(j)] > 0) {
                Micro t = probe;
                if (t.find(i) == t.find(j)) {
                    live[i] = true;
                    break;
                }
            }
        }
    }

    VerticalConfig chosen[2] = {VerticalConfig::None, VerticalConfig::None};
    bool corner = false;
    for (int s = 0; s < nsubs; ++s) {
        const SubaisleInfo& sub = *ctx.sub[s];
        int back_v = (levels == 2 || s == 0) ? 0 : 1;
        int front_v = (levels == 2) ? 1 : (s == 0 ? 1 : 2);
        if (one_pass[s]) {
            chosen[s] = VerticalConfig::OnePass;
            continue;
        }
        if (sub.is_empty) {
            chosen[s] = VerticalConfig::None;
            continue;
        }
        bool b = live[back_v];
        bool f = live[front_v];
        if (b && f) chosen[s] = VerticalConfig::Gap;
        else if (b) chosen[s] = VerticalConfig::Top;
        else if (f) chosen[s] = VerticalConfig::Bottom;
        else if (terminal) corner = true;
        else return std::nullopt;
    }

    if (!corner) return eval_combined_with(state, cfg, ctx, chosen[0], chosen[1]);

    // Terminal stage with no connected endpoint anywhere: only a
    // single-aisle tour can close here, covered from one cross-aisle.
    std::optional<CombinedStep> best;
    for (VerticalConfig v : {VerticalConfig::Bottom, VerticalConfig::Top}) {
        VerticalConfig v0 = chosen[0], v1 = chosen[1];
        if (nsubs == 1) {
            v0 = v;
        } else {
            // Both-subaisle corners only arise for single-aisle two-block
            // instances, which the solvers route to the original variant.
            return std::nullopt;
        }
        auto step = eval_combined_with(state, cfg, ctx, v0, v1);
        if (step && (!best || step->vertical_cost < best->vertical_cost)) best = step;
    }
    return best;
}

} // namespace pickroute

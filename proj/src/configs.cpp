#include "pickroute/configs.hpp"

#include <algorithm>

namespace pickroute {

GapSplit gap_split(const std::vector<Length>& pos, Length L) {
    GapSplit split;
    if (pos.empty()) {
        split.first_top = 0;
        split.gap_lo = 0;
        split.gap_hi = L;
        return split;
    }
    // Gaps between consecutive entries of 0, pos..., L; front-most largest wins.
    Length best = -1;
    size_t best_i = 0; // gap between pos[i-1] (or 0) and pos[i] (or L)
    Length prev = 0;
    for (size_t i = 0; i <= pos.size(); ++i) {
        Length next = (i == pos.size()) ? L : pos[i];
        if (next - prev > best) {
            best = next - prev;
            best_i = i;
            split.gap_lo = prev;
            split.gap_hi = next;
        }
        prev = next;
    }
    split.first_top = best_i;
    return split;
}

Length vertical_cost(const std::vector<Length>& pos, Length L, VerticalConfig cfg) {
    bool empty = pos.empty();
    switch (cfg) {
        case VerticalConfig::OnePass:
            return L;
        case VerticalConfig::TwoPass:
            return 2 * L;
        case VerticalConfig::Top:
            return empty ? 0 : 2 * (L - pos.front());
        case VerticalConfig::Bottom:
            return empty ? 0 : 2 * pos.back();
        case VerticalConfig::Gap: {
            if (empty) return 0;
            GapSplit s = gap_split(pos, L);
            return 2 * (L - (s.gap_hi - s.gap_lo));
        }
        case VerticalConfig::None:
            if (!empty) throw ValidationError("vertical config 'none' on a non-empty subaisle");
            return 0;
    }
    return 0;
}

Length horizontal_cost(const HorizontalConfig& cfg, Length w, int spans) {
    return static_cast<Length>(cfg.edge_count()) * w * spans;
}

SubaisleInfo build_subaisle_info(const SubaislePicks& picks, Length L) {
    SubaisleInfo info;
    info.L = L;
    info.picks = &picks;
    info.is_empty = picks.empty();
    if (!info.is_empty) {
        info.min_pos = picks.pos.front();
        info.max_pos = picks.pos.back();
        GapSplit s = gap_split(picks.pos, L);
        info.gap_bottom_hi = (s.first_top == 0) ? 0 : picks.pos[s.first_top - 1];
        info.gap_top_lo = (s.first_top == picks.pos.size()) ? L : picks.pos[s.first_top];
        info.anchor_front = picks.pos.front() == 0;
        info.anchor_back = picks.pos.back() == L;
    } else {
        info.gap_top_lo = L;
    }
    for (VerticalConfig cfg : {VerticalConfig::OnePass, VerticalConfig::Top, VerticalConfig::Bottom,
                               VerticalConfig::Gap, VerticalConfig::TwoPass, VerticalConfig::None}) {
        if (cfg == VerticalConfig::None && !info.is_empty) continue;
        info.cost[static_cast<int>(cfg)] = vertical_cost(picks.pos, L, cfg);
    }
    return info;
}

} // namespace pickroute

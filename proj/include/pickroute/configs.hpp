#pragma once

#include <vector>

#include "pickroute/core.hpp"
#include "pickroute/geometry.hpp"

namespace pickroute {

// Travel cost of one vertical configuration over a subaisle of length L
// with the given sorted pick positions.  Throws ValidationError when None
// is requested for a non-empty subaisle.
Length vertical_cost(const std::vector<Length>& pos, Length L, VerticalConfig cfg);

// Partition at the largest pick-free interval in the sequence 0, picks, L.
// Ties break toward the front-most gap.  first_top is the index of the
// first pick on the back-vertex side (== pos.size() when that side is
// empty); gap_lo/gap_hi bound the untraversed interval.
struct GapSplit {
    size_t first_top = 0;
    Length gap_lo = 0;
    Length gap_hi = 0;
};
GapSplit gap_split(const std::vector<Length>& pos, Length L);

// spans >= 1 multiplies the per-segment width (empty-aisle compression).
Length horizontal_cost(const HorizontalConfig& cfg, Length w, int spans);

// Everything the solvers need per subaisle, computed once per instance.
// bottom_run_hi/top_run_lo describe the two doubled runs of the gap
// configuration; a run is absent when its side of the split is empty.
struct SubaisleInfo {
    bool is_empty = true;
    Length L = 0;
    Length min_pos = 0;
    Length max_pos = 0;
    Length gap_bottom_hi = 0; // doubled run [0, gap_bottom_hi] covers the front side
    Length gap_top_lo = 0;    // doubled run [gap_top_lo, L] covers the back side
    bool anchor_front = false; // depot anchor sits exactly at the front vertex
    bool anchor_back = false;  // depot anchor sits exactly at the back vertex
    Length cost[6] = {0, 0, 0, 0, 0, 0};
    const SubaislePicks* picks = nullptr;
};

SubaisleInfo build_subaisle_info(const SubaislePicks& picks, Length L);

} // namespace pickroute

#pragma once

#include <string>
#include <vector>

#include "pickroute/geometry.hpp"
#include "pickroute/states.hpp"

namespace pickroute {

enum class SingleVariant : std::uint8_t { Original, Modified };
enum class TwoVariant : std::uint8_t { Original, Mod1, Mod2 };

struct Counters {
    long long stages = 0;
    long long evals_vertical = 0;
    long long evals_horizontal = 0;
    long long evals_combined = 0;
    long long runtime_ns = 0;    // DP sweep, excluding cost precomputation
    long long precompute_ns = 0; // per-subaisle configuration costs
};

struct TraceStep {
    int aisle = 0; // original aisle index
    StageKind kind = StageKind::Combined;
    std::string stage;           // vertical | vertical_lower | vertical_upper | horizontal | combined
    std::string state;           // state reached after this stage
    std::string horizontal;      // empty for vertical stages
    std::string vertical;        // upper / only subaisle
    std::string vertical_lower;  // two-block combined stages
};

struct TourEdge {
    std::string u;
    std::string v;
    Length length = 0;
    int mult = 1;
};

struct Solution {
    Length length = 0;
    std::vector<TraceStep> trace;
    std::vector<TourEdge> tour;
    std::vector<std::string> walk;
    Counters counters;
    bool delegated = false;
};

struct SolveOptions {
    bool want_tour = true;
    // When > 0 the DP sweep is re-run this many extra times and
    // runtime_ns reports the per-sweep average; 0 times a single sweep.
    int timing_repeats = 0;
};

Solution solve_single(const PickInstance& inst, SingleVariant variant, const SolveOptions& opts = {});
Solution solve_two(const PickInstance& inst, TwoVariant variant, const SolveOptions& opts = {});

// Convenience front end used by the CLI: algo is one of single-original,
// single-modified, two-original, two-mod1, two-mod2.
Solution solve_instance(const PickInstance& inst, const std::string& algo,
                        const SolveOptions& opts = {});
bool algo_matches_blocks(const std::string& algo, int blocks);
std::vector<std::string> algos_for_blocks(int blocks);

std::string solution_to_json(const Solution& sol);

// True when at most one aisle is non-empty after depot anchoring; the
// no-2pass variants hand such instances to the original algorithm.
bool needs_original_delegation(const NormalizedInstance& norm);

} // namespace pickroute

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pickroute/solver.hpp"

namespace pickroute {

// Experimental design: every (aisles, items) cell gets instances_per_cell
// randomly generated instances.  Defaults mirror the benchmark setting:
// 90 pick locations per aisle, depot equally likely front or rear.
struct ExperimentPlan {
    int blocks = 1;
    std::vector<int> aisle_counts{5, 10, 15, 20, 25, 30};
    std::vector<int> item_counts{30, 45, 60, 75, 90};
    int instances_per_cell = 100;
    std::uint64_t seed = 1;
    int slots_per_aisle = 90; // split in half for two-block layouts
    long long slot_length = 1;
    long long aisle_spacing = 5;
    long long cross_aisle_width = 1; // two-block only
    int timing_repeats = 0;          // >0 enables repeat timing per solve
};

ExperimentPlan plan_from_json(const std::string& text);

PickInstance generate_instance(const ExperimentPlan& plan, int aisles, int items,
                               std::uint64_t seed);

struct BenchRecord {
    std::string algorithm;
    int m = 0;
    int items = 0;
    std::uint64_t seed = 0;
    Length length = 0;
    Counters counters;
};

// Runs every applicable variant on every instance of the plan.  Lengths
// are checked for cross-variant equality; a mismatch aborts.  jobs > 1
// distributes instances over worker threads (one timing run per solve on
// its own worker).
std::vector<BenchRecord> run_suite(const ExperimentPlan& plan, int jobs = 1);

std::string records_to_csv(const std::vector<BenchRecord>& records);

struct LinearFit {
    double slope = 0;
    double intercept = 0;
    double r2 = 0;
};
LinearFit fit_linear(const std::vector<double>& x, const std::vector<double>& y);

struct Summary {
    // speedup[algo pair][m] and per-(m, items) cells
    std::vector<int> aisle_counts;
    std::vector<int> item_counts;
    // single-block: mean t_orig/t_mod per (items, m)
    std::map<std::pair<int, int>, double> single_speedup; // (items, m) -> ratio
    // two-block: mean t_orig/t_modX per m
    std::map<std::pair<std::string, int>, double> two_speedup; // (algo, m)
    std::map<std::pair<std::string, int>, double> mean_runtime_ms; // (algo, m)
    std::map<std::pair<std::string, int>, double> eval_ratio; // (pair tag, m)
    std::map<std::string, LinearFit> runtime_fit; // per algorithm
};

Summary summarize(const std::vector<BenchRecord>& records);

// CSV emission in the benchmark table shapes.
std::string single_speedup_csv(const Summary& s);
std::string two_speedup_csv(const Summary& s);
std::string runtime_series_csv(const Summary& s, int blocks);
std::string eval_ratio_csv(const Summary& s);

// asymptotic per-intermediate-stage evaluation ratios from the tables
double table_eval_ratio(const std::string& pair_tag);

} // namespace pickroute

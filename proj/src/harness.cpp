#include "pickroute/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace pickroute {

namespace {

// splitmix64: stable cross-platform stream for seed derivation
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        return mix64(state);
    }
    // unbiased, implementation-independent
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = ~static_cast<std::uint64_t>(0) - (~static_cast<std::uint64_t>(0) % n);
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }
};

} // namespace

PickInstance generate_instance(const ExperimentPlan& plan, int aisles, int items,
                               std::uint64_t seed) {
    PickInstance inst;
    inst.layout.blocks = plan.blocks;
    inst.layout.aisles = aisles;
    inst.layout.slots_per_subaisle =
        plan.blocks == 2 ? plan.slots_per_aisle / 2 : plan.slots_per_aisle;
    inst.layout.slot_length = plan.slot_length;
    inst.layout.aisle_spacing = plan.aisle_spacing;
    inst.layout.cross_aisle_width = plan.blocks == 2 ? plan.cross_aisle_width : 0;

    int subs = plan.blocks == 2 ? 2 : 1;
    long long positions = static_cast<long long>(aisles) * subs * inst.layout.slots_per_subaisle;
    if (items > positions)
        throw ValidationError("requested items exceed available slots: " + std::to_string(items) +
                              " > " + std::to_string(positions));

    Rng rng(seed);
    // partial Fisher-Yates over position indices
    std::vector<int> index(static_cast<size_t>(positions));
    std::iota(index.begin(), index.end(), 0);
    for (int i = 0; i < items; ++i) {
        std::uint64_t j = static_cast<std::uint64_t>(i) +
                          rng.below(static_cast<std::uint64_t>(positions - i));
        std::swap(index[static_cast<size_t>(i)], index[static_cast<size_t>(j)]);
        int idx = index[static_cast<size_t>(i)];
        Pick p;
        p.aisle = idx / (subs * inst.layout.slots_per_subaisle) + 1;
        int rest = idx % (subs * inst.layout.slots_per_subaisle);
        p.block = (subs == 2 && rest >= inst.layout.slots_per_subaisle) ? Block::Upper : Block::Lower;
        p.slot = rest % inst.layout.slots_per_subaisle + 1;
        inst.picks.push_back(p);
    }
    inst.depot.aisle = static_cast<int>(rng.below(static_cast<std::uint64_t>(aisles))) + 1;
    inst.depot.cross = rng.below(2) == 0 ? CrossAisle::Front : CrossAisle::Back;
    return inst;
}

ExperimentPlan plan_from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw ValidationError("plan: not a JSON object");
    ExperimentPlan plan;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const std::string& key = it.key();
        if (key == "blocks") plan.blocks = it.value().get<int>();
        else if (key == "aisles") plan.aisle_counts = it.value().get<std::vector<int>>();
        else if (key == "items") plan.item_counts = it.value().get<std::vector<int>>();
        else if (key == "instances_per_cell") plan.instances_per_cell = it.value().get<int>();
        else if (key == "seed") plan.seed = it.value().get<std::uint64_t>();
        else if (key == "slots_per_aisle") plan.slots_per_aisle = it.value().get<int>();
        else if (key == "slot_length") plan.slot_length = it.value().get<long long>();
        else if (key == "aisle_spacing") plan.aisle_spacing = it.value().get<long long>();
        else if (key == "cross_aisle_width") plan.cross_aisle_width = it.value().get<long long>();
        else if (key == "timing_repeats") plan.timing_repeats = it.value().get<int>();
        else throw ValidationError("plan." + key + ": unknown field");
    }
    if (plan.blocks != 1 && plan.blocks != 2) throw ValidationError("plan.blocks: must be 1 or 2");
    return plan;
}

std::vector<BenchRecord> run_suite(const ExperimentPlan& plan, int jobs) {
    struct Task {
        int m;
        int items;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (int m : plan.aisle_counts)
        for (int items : plan.item_counts)
            for (int rep = 0; rep < plan.instances_per_cell; ++rep) {
                std::uint64_t seed = mix64(plan.seed ^ mix64(static_cast<std::uint64_t>(m) << 32 ^
                                                             static_cast<std::uint64_t>(items) << 16 ^
                                                             static_cast<std::uint64_t>(rep)));
                tasks.push_back({m, items, seed});
            }

    std::vector<std::string> algos = algos_for_blocks(plan.blocks);
    std::vector<std::vector<BenchRecord>> out(tasks.size());
    std::atomic<size_t> cursor{0};

    auto worker = [&]() {
        for (;;) {
            size_t i = cursor.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& task = tasks[i];
            PickInstance inst = generate_instance(plan, task.m, task.items, task.seed);
            SolveOptions opts;
            opts.want_tour = false;
            opts.timing_repeats = plan.timing_repeats;
            Length ref = -1;
            for (const std::string& algo : algos) {
                Solution sol = solve_instance(inst, algo, opts);
                if (ref < 0) ref = sol.length;
                else if (sol.length != ref)
                    throw std::logic_error("variant disagreement on m=" + std::to_string(task.m) +
                                           " items=" + std::to_string(task.items) +
                                           " seed=" + std::to_string(task.seed) + ": " + algo);
                BenchRecord rec;
                rec.algorithm = algo;
                rec.m = task.m;
                rec.items = task.items;
                rec.seed = task.seed;
                rec.length = sol.length;
                rec.counters = sol.counters;
                out[i].push_back(rec);
            }
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<BenchRecord> records;
    for (auto& group : out)
        for (auto& rec : group) records.push_back(std::move(rec));
    return records;
}

std::string records_to_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream out;
    out << "algorithm,m,items,seed,length,evals_vertical,evals_horizontal,evals_combined,stages,"
           "runtime_ns\n";
    for (const BenchRecord& r : records) {
        out << r.algorithm << ',' << r.m << ',' << r.items << ',' << r.seed << ','
            << format_length(r.length) << ',' << r.counters.evals_vertical << ','
            << r.counters.evals_horizontal << ',' << r.counters.evals_combined << ','
            << r.counters.stages << ',' << r.counters.runtime_ns << '\n';
    }
    return out.str();
}

LinearFit fit_linear(const std::vector<double>& x, const std::vector<double>& y) {
    LinearFit fit;
    size_t n = x.size();
    if (n < 2) return fit;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    double denom = n * sxx - sx * sx;
    if (denom == 0) return fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss_res = 0, ss_tot = 0, mean = sy / n;
    for (size_t i = 0; i < n; ++i) {
        double pred = fit.slope * x[i] + fit.intercept;
        ss_res += (y[i] - pred) * (y[i] - pred);
        ss_tot += (y[i] - mean) * (y[i] - mean);
    }
    fit.r2 = ss_tot == 0 ? 1.0 : 1.0 - ss_res / ss_tot;
    return fit;
}

namespace {

long long total_evals(const Counters& c) {
    return c.evals_vertical + c.evals_horizontal + c.evals_combined;
}

} // namespace

Summary summarize(const std::vector<BenchRecord>& records) {
    Summary s;
    if (records.empty()) throw ValidationError("summarize: no records");

    std::map<std::string, std::map<std::pair<int, int>, std::vector<const BenchRecord*>>> by_algo;
    for (const BenchRecord& r : records) {
        by_algo[r.algorithm][{r.items, r.m}].push_back(&r);
        if (std::find(s.aisle_counts.begin(), s.aisle_counts.end(), r.m) == s.aisle_counts.end())
            s.aisle_counts.push_back(r.m);
        if (std::find(s.item_counts.begin(), s.item_counts.end(), r.items) == s.item_counts.end())
            s.item_counts.push_back(r.items);
    }
    std::sort(s.aisle_counts.begin(), s.aisle_counts.end());
    std::sort(s.item_counts.begin(), s.item_counts.end());

    bool single = by_algo.count("single-original") > 0;
    std::string base = single ? "single-original" : "two-original";

    auto mean_ratio = [&](const std::string& a, const std::string& b,
                          std::pair<int, int> cell, bool runtime) -> double {
        const auto& va = by_algo[a][cell];
        const auto& vb = by_algo[b][cell];
        double sum = 0;
        size_t n = std::min(va.size(), vb.size());
        for (size_t i = 0; i < n; ++i) {
            double num = runtime ? static_cast<double>(va[i]->counters.runtime_ns)
                                 : static_cast<double>(total_evals(va[i]->counters));
            double den = runtime ? static_cast<double>(vb[i]->counters.runtime_ns)
                                 : static_cast<double>(total_evals(vb[i]->counters));
            sum += den > 0 ? num / den : 0.0;
        }
        return n ? sum / static_cast<double>(n) : 0.0;
    };

    for (auto& [algo, cells] : by_algo) {
        for (int m : s.aisle_counts) {
            double total = 0;
            long long count = 0;
            for (int items : s.item_counts) {
                auto it = cells.find({items, m});
                if (it == cells.end()) continue;
                for (const BenchRecord* r : it->second) {
                    total += static_cast<double>(r->counters.runtime_ns);
                    ++count;
                }
            }
            if (count)
                s.mean_runtime_ms[{algo, m}] = total / static_cast<double>(count) / 1e6;
        }
        std::vector<double> xs, ys;
        for (int m : s.aisle_counts) {
            auto it = s.mean_runtime_ms.find({algo, m});
            if (it != s.mean_runtime_ms.end()) {
                xs.push_back(m);
                ys.push_back(it->second);
            }
        }
        s.runtime_fit[algo] = fit_linear(xs, ys);
    }

    if (single) {
        for (int items : s.item_counts)
            for (int m : s.aisle_counts)
                s.single_speedup[{items, m}] =
                    mean_ratio("single-original", "single-modified", {items, m}, true);
        for (int m : s.aisle_counts) {
            double acc = 0;
            long long n = 0;
            for (int items : s.item_counts) {
                acc += mean_ratio("single-original", "single-modified", {items, m}, false);
                ++n;
            }
            s.eval_ratio[{"original/modified", m}] = acc / static_cast<double>(n);
        }
    } else {
        for (const std::string& moda : {std::string("two-mod1"), std::string("two-mod2")}) {
            std::string tag = moda == "two-mod1" ? "modified1" : "modified2";
            for (int m : s.aisle_counts) {
                double acc = 0, edge = 0;
                long long n = 0;
                for (int items : s.item_counts) {
                    acc += mean_ratio(base, moda, {items, m}, true);
                    edge += mean_ratio(base, moda, {items, m}, false);
                    ++n;
                }
                s.two_speedup[{tag, m}] = acc / static_cast<double>(n);
                s.eval_ratio[{"original/" + tag, m}] = edge / static_cast<double>(n);
            }
        }
    }
    return s;
}

std::string single_speedup_csv(const Summary& s) {
    std::ostringstream out;
    out << "Items";
    for (int m : s.aisle_counts) out << ',' << m;
    out << ",Average\n";
    out.setf(std::ios::fixed);
    out.precision(2);
    for (int items : s.item_counts) {
        out << items;
        double acc = 0;
        for (int m : s.aisle_counts) {
            double v = s.single_speedup.at({items, m});
            acc += v;
            out << ',' << v;
        }
        out << ',' << acc / static_cast<double>(s.aisle_counts.size()) << '\n';
    }
    return out.str();
}

std::string two_speedup_csv(const Summary& s) {
    std::ostringstream out;
    out << "algorithm";
    for (int m : s.aisle_counts) out << ',' << m;
    out << ",average\n";
    out.setf(std::ios::fixed);
    out.precision(2);
    for (const std::string& tag : {std::string("modified1"), std::string("modified2")}) {
        out << tag;
        double acc = 0;
        for (int m : s.aisle_counts) {
            double v = s.two_speedup.at({tag, m});
            acc += v;
            out << ',' << v;
        }
        out << ',' << acc / static_cast<double>(s.aisle_counts.size()) << '\n';
    }
    return out.str();
}

std::string runtime_series_csv(const Summary& s, int blocks) {
    std::ostringstream out;
    if (blocks == 1) {
        out << "n_aisles,original,modified\n";
        for (int m : s.aisle_counts)
            out << m << ',' << s.mean_runtime_ms.at({"single-original", m}) << ','
                << s.mean_runtime_ms.at({"single-modified", m}) << '\n';
    } else {
        out << "n_aisles,original_2pass,original_no2pass,modified\n";
        for (int m : s.aisle_counts)
            out << m << ',' << s.mean_runtime_ms.at({"two-original", m}) << ','
                << s.mean_runtime_ms.at({"two-mod1", m}) << ','
                << s.mean_runtime_ms.at({"two-mod2", m}) << '\n';
    }
    return out.str();
}

double table_eval_ratio(const std::string& pair_tag) {
    auto count = [](TableVariant v) {
        return static_cast<double>(transition_table(v).intermediate_eval_count);
    };
    if (pair_tag == "single")
        return (count(TableVariant::SingleOriginalVertical) +
                count(TableVariant::SingleOriginalHorizontal)) /
               count(TableVariant::SingleCombined);
    double orig = count(TableVariant::TwoOriginalLower) + count(TableVariant::TwoOriginalUpper) +
                  count(TableVariant::TwoOriginalHorizontal);
    if (pair_tag == "two-mod1")
        return orig / (count(TableVariant::TwoMod1Lower) + count(TableVariant::TwoMod1Upper) +
                       count(TableVariant::TwoOriginalHorizontal));
    if (pair_tag == "two-mod2") return orig / count(TableVariant::TwoCombined);
    throw ValidationError("unknown ratio tag: " + pair_tag);
}

std::string eval_ratio_csv(const Summary& s) {
    std::ostringstream out;
    out << "pair,m,measured_ratio,asymptotic\n";
    out.setf(std::ios::fixed);
    out.precision(4);
    for (const auto& [key, v] : s.eval_ratio) {
        double asym = key.first == "original/modified" ? table_eval_ratio("single")
                      : key.first == "original/modified1" ? table_eval_ratio("two-mod1")
                                                          : table_eval_ratio("two-mod2");
        out << key.first << ',' << key.second << ',' << v << ',' << asym << '\n';
    }
    return out.str();
}

} // namespace pickroute

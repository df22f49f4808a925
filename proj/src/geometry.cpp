#include "pickroute/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace pickroute {

using nlohmann::json;

std::string format_length(Length half_units) {
    std::string sign = half_units < 0 ? "-" : "";
    long long h = std::llabs(half_units);
    std::string s = sign + std::to_string(h / 2);
    if (h % 2) s += ".5";
    return s;
}

const char* vertical_name(VerticalConfig v) {
    switch (v) {
        case VerticalConfig::OnePass: return "1pass";
        case VerticalConfig::Top: return "top";
        case VerticalConfig::Bottom: return "bottom";
        case VerticalConfig::Gap: return "gap";
        case VerticalConfig::TwoPass: return "2pass";
        case VerticalConfig::None: return "none";
    }
    return "?";
}

const char* vertical_annotation(VerticalConfig v) {
    switch (v) {
        case VerticalConfig::OnePass: return "i";
        case VerticalConfig::Top: return "ii";
        case VerticalConfig::Bottom: return "iii";
        case VerticalConfig::Gap: return "iv";
        case VerticalConfig::TwoPass: return "v";
        case VerticalConfig::None: return "vi";
    }
    return "?";
}

std::string HorizontalConfig::name() const {
    std::string s;
    for (int i = 0; i < levels; ++i) s += static_cast<char>('0' + k[i]);
    return s;
}

const std::array<HorizontalConfig, 5>& single_horizontals() {
    static const std::array<HorizontalConfig, 5> configs = {{
        {2, {1, 1, 0}},
        {2, {2, 0, 0}},
        {2, {0, 2, 0}},
        {2, {2, 2, 0}},
        {2, {0, 0, 0}},
    }};
    return configs;
}

const std::array<HorizontalConfig, 14>& two_horizontals() {
    static const std::array<HorizontalConfig, 14> configs = {{
        {3, {1, 1, 0}}, {3, {1, 0, 1}}, {3, {0, 1, 1}},
        {3, {2, 0, 0}}, {3, {0, 2, 0}}, {3, {0, 0, 2}},
        {3, {2, 1, 1}}, {3, {1, 2, 1}}, {3, {1, 1, 2}},
        {3, {2, 2, 0}}, {3, {2, 0, 2}}, {3, {0, 2, 2}},
        {3, {2, 2, 2}}, {3, {0, 0, 0}},
    }};
    return configs;
}

std::optional<std::string> validate_instance(const PickInstance& inst) {
    const auto& lay = inst.layout;
    if (lay.blocks != 1 && lay.blocks != 2) return "layout.blocks: must be 1 or 2";
    if (lay.aisles < 1) return "layout.aisles: must be >= 1";
    if (lay.slots_per_subaisle < 1) return "layout.slots_per_subaisle: must be >= 1";
    if (lay.slot_length < 1) return "layout.slot_length: must be a positive integer";
    if (lay.aisle_spacing < 1) return "layout.aisle_spacing: must be a positive integer";
    if (lay.blocks == 2 && lay.cross_aisle_width < 0) return "layout.cross_aisle_width: must be >= 0";

    if (inst.depot.aisle < 1 || inst.depot.aisle > lay.aisles)
        return "depot.aisle: out of range";
    if (lay.blocks == 1 && inst.depot.cross == CrossAisle::Middle)
        return "depot.cross: middle depot requires a two-block layout";

    std::set<std::tuple<int, int, int>> seen;
    for (size_t i = 0; i < inst.picks.size(); ++i) {
        const Pick& p = inst.picks[i];
        std::string at = "picks[" + std::to_string(i) + "]";
        if (p.aisle < 1 || p.aisle > lay.aisles) return at + ".aisle: out of range";
        if (p.slot < 1 || p.slot > lay.slots_per_subaisle) return at + ".slot: out of range";
        auto key = std::make_tuple(p.aisle, lay.blocks == 2 ? static_cast<int>(p.block) : 0, p.slot);
        if (!seen.insert(key).second) return at + ": duplicate pick";
    }
    return std::nullopt;
}

void SubaislePicks::insert(Length p, int s) {
    auto it = std::lower_bound(pos.begin(), pos.end(), p);
    size_t idx = static_cast<size_t>(it - pos.begin());
    pos.insert(it, p);
    slot.insert(slot.begin() + static_cast<long>(idx), s);
}

Length slot_position(const WarehouseLayout& layout, Block block, int slot) {
    // Slot centres: (2k-1) * l in half-units from the subaisle front
    // vertex; upper subaisles are offset by half the middle cross-aisle.
    Length p = (2LL * slot - 1) * layout.slot_length;
    if (layout.blocks == 2 && block == Block::Upper) p += layout.cross_aisle_width;
    return p;
}

NormalizedInstance normalize_instance(const PickInstance& inst) {
    if (auto err = validate_instance(inst)) throw ValidationError(*err);

    NormalizedInstance norm;
    norm.layout = inst.layout;
    norm.depot = inst.depot;
    norm.picks = inst.picks;
    norm.aisles.resize(static_cast<size_t>(inst.layout.aisles));

    for (const Pick& p : inst.picks) {
        AisleContents& a = norm.aisles[static_cast<size_t>(p.aisle - 1)];
        Block b = inst.layout.blocks == 2 ? p.block : Block::Lower;
        SubaislePicks& sub = (b == Block::Upper) ? a.upper : a.lower;
        sub.insert(slot_position(inst.layout, b, p.slot), p.slot);
    }

    // Depot anchor: a zero-cost required point at the depot's cross-aisle
    // vertex, which forces the tour subgraph to contain that vertex.
    AisleContents& da = norm.aisles[static_cast<size_t>(inst.depot.aisle - 1)];
    Length L = inst.layout.subaisle_length();
    switch (inst.depot.cross) {
        case CrossAisle::Front:
            da.lower.insert(0, -1);
            break;
        case CrossAisle::Back:
            if (inst.layout.blocks == 2)
                da.upper.insert(L, -1);
            else
                da.lower.insert(L, -1);
            break;
        case CrossAisle::Middle:
            da.lower.insert(L, -1); // distance 0 from the lower back vertex
            break;
    }
    return norm;
}

CompressedInstance compress_empty_aisles(const NormalizedInstance& norm) {
    CompressedInstance comp;
    comp.layout = &norm.layout;
    int prev = 0;
    for (int j = 1; j <= norm.layout.aisles; ++j) {
        const AisleContents& a = norm.aisles[static_cast<size_t>(j - 1)];
        bool empty = a.lower.empty() && a.upper.empty();
        if (norm.layout.blocks == 2 || !empty) {
            comp.aisles.push_back(&a);
            comp.span.push_back(j - prev);
            comp.orig_index.push_back(j);
            if (j == norm.depot.aisle) comp.depot_compressed = static_cast<int>(comp.aisles.size()) - 1;
            prev = j;
        }
    }
    return comp;
}

namespace {

long long require_positive_int(const json& j, const std::string& path, bool allow_zero = false) {
    if (!j.is_number()) throw ValidationError(path + ": expected a number");
    double v = j.get<double>();
    double r = std::round(v);
    if (std::fabs(v - r) > 1e-9)
        throw ValidationError(path + ": lengths must be whole units");
    long long n = static_cast<long long>(r);
    if (n < (allow_zero ? 0 : 1)) throw ValidationError(path + ": must be positive");
    return n;
}

int require_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ValidationError(path + ": expected an integer");
    return j.get<int>();
}

void reject_unknown(const json& obj, const std::string& path, const std::set<std::string>& allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key()))
            throw ValidationError(path + "." + it.key() + ": unknown field");
    }
}

} // namespace

PickInstance instance_from_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ValidationError("$: not valid JSON");
    if (!doc.is_object()) throw ValidationError("$: expected an object");
    reject_unknown(doc, "$", {"layout", "depot", "picks"});
    if (!doc.contains("layout")) throw ValidationError("$.layout: missing");
    if (!doc.contains("depot")) throw ValidationError("$.depot: missing");
    if (!doc.contains("picks")) throw ValidationError("$.picks: missing");

    PickInstance inst;
    const json& lay = doc["layout"];
    if (!lay.is_object()) throw ValidationError("$.layout: expected an object");
    reject_unknown(lay, "$.layout",
                   {"blocks", "aisles", "slots_per_subaisle", "slot_length", "aisle_spacing",
                    "cross_aisle_width"});
    for (const char* f : {"blocks", "aisles", "slots_per_subaisle", "slot_length", "aisle_spacing"})
        if (!lay.contains(f)) throw ValidationError(std::string("$.layout.") + f + ": missing");
    inst.layout.blocks = require_int(lay["blocks"], "$.layout.blocks");
    inst.layout.aisles = require_int(lay["aisles"], "$.layout.aisles");
    inst.layout.slots_per_subaisle = require_int(lay["slots_per_subaisle"], "$.layout.slots_per_subaisle");
    inst.layout.slot_length = require_positive_int(lay["slot_length"], "$.layout.slot_length");
    inst.layout.aisle_spacing = require_positive_int(lay["aisle_spacing"], "$.layout.aisle_spacing");
    if (lay.contains("cross_aisle_width"))
        inst.layout.cross_aisle_width =
            require_positive_int(lay["cross_aisle_width"], "$.layout.cross_aisle_width", true);
    else if (inst.layout.blocks == 2)
        throw ValidationError("$.layout.cross_aisle_width: missing (required for two-block)");

    const json& dep = doc["depot"];
    if (!dep.is_object()) throw ValidationError("$.depot: expected an object");
    reject_unknown(dep, "$.depot", {"aisle", "cross"});
    if (!dep.contains("aisle")) throw ValidationError("$.depot.aisle: missing");
    if (!dep.contains("cross")) throw ValidationError("$.depot.cross: missing");
    inst.depot.aisle = require_int(dep["aisle"], "$.depot.aisle");
    std::string cross = dep["cross"].is_string() ? dep["cross"].get<std::string>() : "";
    if (cross == "front") inst.depot.cross = CrossAisle::Front;
    else if (cross == "middle") inst.depot.cross = CrossAisle::Middle;
    else if (cross == "back") inst.depot.cross = CrossAisle::Back;
    else throw ValidationError("$.depot.cross: expected front|middle|back");

    const json& picks = doc["picks"];
    if (!picks.is_array()) throw ValidationError("$.picks: expected an array");
    for (size_t i = 0; i < picks.size(); ++i) {
        std::string at = "$.picks[" + std::to_string(i) + "]";
        const json& p = picks[i];
        if (!p.is_object()) throw ValidationError(at + ": expected an object");
        reject_unknown(p, at, {"aisle", "block", "slot"});
        if (!p.contains("aisle")) throw ValidationError(at + ".aisle: missing");
        if (!p.contains("slot")) throw ValidationError(at + ".slot: missing");
        Pick pick;
        pick.aisle = require_int(p["aisle"], at + ".aisle");
        pick.slot = require_int(p["slot"], at + ".slot");
        if (inst.layout.blocks == 2) {
            if (!p.contains("block")) throw ValidationError(at + ".block: missing (two-block pick)");
            std::string b = p["block"].is_string() ? p["block"].get<std::string>() : "";
            if (b == "lower") pick.block = Block::Lower;
            else if (b == "upper") pick.block = Block::Upper;
            else throw ValidationError(at + ".block: expected lower|upper");
        } else if (p.contains("block")) {
            throw ValidationError(at + ".block: not allowed for single-block layouts");
        }
        inst.picks.push_back(pick);
    }
    if (auto err = validate_instance(inst)) throw ValidationError("$: " + *err);
    return inst;
}

std::string instance_to_json(const PickInstance& inst) {
    json lay;
    lay["blocks"] = inst.layout.blocks;
    lay["aisles"] = inst.layout.aisles;
    lay["slots_per_subaisle"] = inst.layout.slots_per_subaisle;
    lay["slot_length"] = inst.layout.slot_length;
    lay["aisle_spacing"] = inst.layout.aisle_spacing;
    if (inst.layout.blocks == 2) lay["cross_aisle_width"] = inst.layout.cross_aisle_width;

    json dep;
    dep["aisle"] = inst.depot.aisle;
    dep["cross"] = inst.depot.cross == CrossAisle::Front    ? "front"
                   : inst.depot.cross == CrossAisle::Middle ? "middle"
                                                            : "back";
    json picks = json::array();
    for (const Pick& p : inst.picks) {
        json jp;
        jp["aisle"] = p.aisle;
        if (inst.layout.blocks == 2) jp["block"] = p.block == Block::Lower ? "lower" : "upper";
        jp["slot"] = p.slot;
        picks.push_back(jp);
    }
    json doc;
    doc["layout"] = lay;
    doc["depot"] = dep;
    doc["picks"] = picks;
    return doc.dump(2) + "\n";
}

PickInstance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open instance file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return instance_from_json(ss.str());
}

void save_instance_file(const PickInstance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write instance file: " + path);
    out << instance_to_json(inst);
}

PickInstance mirror_instance(const PickInstance& inst) {
    PickInstance out = inst;
    out.depot.aisle = inst.layout.aisles + 1 - inst.depot.aisle;
    for (Pick& p : out.picks) p.aisle = inst.layout.aisles + 1 - p.aisle;
    return out;
}

PickInstance scale_instance(const PickInstance& inst, long long lambda) {
    PickInstance out = inst;
    out.layout.slot_length *= lambda;
    out.layout.aisle_spacing *= lambda;
    out.layout.cross_aisle_width *= lambda;
    return out;
}

} // namespace pickroute

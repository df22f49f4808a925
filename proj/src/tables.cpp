#include <sstream>

#include "pickroute/states.hpp"

namespace pickroute {

namespace {

// Geometry-free stand-ins for table generation: a generic non-empty
// subaisle with interior picks on both sides of the gap, and an empty one.
// The symmetric pick placement makes top and bottom cost-equal, so the
// terminal corner of the combined tables annotates bottom.
const SubaisleInfo& generic_sub() {
    static const SubaislePicks picks = [] {
        SubaislePicks p;
        p.insert(2, 1);
        p.insert(6, 2);
        p.insert(14, 3);
        p.insert(18, 4);
        return p;
    }();
    static const SubaisleInfo info = build_subaisle_info(picks, 20);
    return info;
}

const SubaisleInfo& empty_sub() {
    static const SubaislePicks picks;
    static const SubaisleInfo info = build_subaisle_info(picks, 20);
    return info;
}

bool is_two(TableVariant v) {
    switch (v) {
        case TableVariant::SingleOriginalVertical:
        case TableVariant::SingleOriginalHorizontal:
        case TableVariant::SingleCombined:
            return false;
        default:
            return true;
    }
}

// States whose subaisle endpoints already share a touched component; for
// those the covering configurations subsume the empty-subaisle no-op and
// the published tables list no separate none action.
bool ends_connected(const StateKey& s, int sub_index) {
    int e1 = sub_index == 0 ? 0 : 1;
    int e2 = sub_index == 0 ? 1 : 2;
    if (s.levels == 2) {
        e1 = 0;
        e2 = 1;
    }
    return s.comp[static_cast<size_t>(e1)] >= 0 &&
           s.comp[static_cast<size_t>(e1)] == s.comp[static_cast<size_t>(e2)];
}

void generate_vertical(TransitionTable& table, const StateSpace& space, int sub_index,
                       bool with_two_pass, bool with_none) {
    std::vector<VerticalConfig> configs = {VerticalConfig::OnePass, VerticalConfig::Top,
                                           VerticalConfig::Bottom, VerticalConfig::Gap};
    if (with_two_pass) configs.push_back(VerticalConfig::TwoPass);
    if (with_none) configs.push_back(VerticalConfig::None);
    for (int sid = 0; sid < space.size(); ++sid) {
        const StateKey& s = space.state(sid);
        for (VerticalConfig cfg : configs) {
            if (cfg == VerticalConfig::None && ends_connected(s, sub_index)) continue;
            const SubaisleInfo& sub = cfg == VerticalConfig::None ? empty_sub() : generic_sub();
            auto next = step_vertical(s, sub_index, cfg, sub);
            if (!next) continue;
            TableRow row;
            row.state_id = sid;
            row.kind = StageKind::Vertical;
            row.vertical = cfg;
            row.next_state_id = space.id(*next);
            if (cfg == VerticalConfig::None) row.note = "empty subaisle";
            table.rows.push_back(row);
        }
    }
}

void generate_horizontal(TransitionTable& table, const StateSpace& space, bool prune_double_stub) {
    const int levels = space.levels();
    std::vector<HorizontalConfig> configs;
    if (levels == 2)
        configs.assign(single_horizontals().begin(), single_horizontals().end());
    else
        configs.assign(two_horizontals().begin(), two_horizontals().end());

    for (int sid = 0; sid < space.size(); ++sid) {
        const StateKey& s = space.state(sid);
        for (const HorizontalConfig& cfg : configs) {
            if (prune_double_stub && !cfg.all_zero()) {
                // A doubled cross-aisle stub to an untouched vertex covers
                // nothing and is never optimal.
                bool stub = false;
                for (int i = 0; i < levels; ++i)
                    if (cfg.k[static_cast<size_t>(i)] == 2 &&
                        s.par[static_cast<size_t>(i)] == Parity::Zero)
                        stub = true;
                if (stub) continue;
            }
            TransitionCtx ctx;
            ctx.levels = levels;
            ctx.items_right = !cfg.all_zero();
            auto next = step_horizontal(s, cfg, ctx);
            std::string note;
            if (!next && cfg.all_zero() && sid == space.initial_id()) {
                ctx.items_right = true; // pass-through left of the first pick
                next = step_horizontal(s, cfg, ctx);
                note = "empty aisle";
            }
            if (!next) continue;
            TableRow row;
            row.state_id = sid;
            row.kind = StageKind::Horizontal;
            row.horizontal = cfg;
            row.next_state_id = space.id(*next);
            row.final_only = cfg.all_zero();
            row.note = note;
            table.rows.push_back(row);
        }
    }
}

void generate_combined(TransitionTable& table, const StateSpace& space) {
    const int levels = space.levels();
    std::vector<HorizontalConfig> configs;
    if (levels == 2)
        configs.assign(single_horizontals().begin(), single_horizontals().end());
    else
        configs.assign(two_horizontals().begin(), two_horizontals().end());

    struct CtxCombo {
        bool upper_empty;
        bool lower_empty;
        const char* note;
    };
    std::vector<CtxCombo> combos;
    if (levels == 2)
        combos = {{false, false, ""}, {true, true, "empty aisle"}};
    else
        combos = {{false, false, ""},
                  {false, true, "lower empty"},
                  {true, false, "upper empty"},
                  {true, true, "empty aisle"}};

    for (int sid = 0; sid < space.size(); ++sid) {
        const StateKey& s = space.state(sid);
        for (const HorizontalConfig& cfg : configs) {
            std::optional<CombinedStep> step;
            std::string note;
            for (const CtxCombo& combo : combos) {
                TransitionCtx ctx;
                ctx.levels = levels;
                ctx.sub[0] = combo.upper_empty ? &empty_sub() : &generic_sub();
                if (levels == 3) ctx.sub[1] = combo.lower_empty ? &empty_sub() : &generic_sub();
                ctx.items_right = !cfg.all_zero();
                step = step_combined(s, cfg, ctx);
                if (!step && cfg.all_zero() && sid == space.initial_id()) {
                    ctx.items_right = true;
                    step = step_combined(s, cfg, ctx);
                    if (step) note = "empty aisle";
                }
                if (step) {
                    if (note.empty()) note = combo.note;
                    break;
                }
            }
            if (!step) continue;
            TableRow row;
            row.state_id = sid;
            row.kind = StageKind::Combined;
            row.horizontal = cfg;
            row.annot[0] = step->vertical[0];
            row.annot[1] = step->vertical[1];
            row.next_state_id = space.id(step->next);
            row.final_only = cfg.all_zero();
            row.note = note;
            table.rows.push_back(row);
        }
    }
}

} // namespace

const char* table_variant_name(TableVariant v) {
    switch (v) {
        case TableVariant::SingleOriginalVertical: return "single-original-vertical";
        case TableVariant::SingleOriginalHorizontal: return "single-original-horizontal";
        case TableVariant::SingleCombined: return "single-combined";
        case TableVariant::TwoOriginalLower: return "two-original-lower";
        case TableVariant::TwoOriginalUpper: return "two-original-upper";
        case TableVariant::TwoOriginalHorizontal: return "two-original-horizontal";
        case TableVariant::TwoMod1Lower: return "two-mod1-lower";
        case TableVariant::TwoMod1Upper: return "two-mod1-upper";
        case TableVariant::TwoCombined: return "two-combined";
    }
    return "?";
}

std::optional<TableVariant> table_variant_from_name(const std::string& name) {
    for (TableVariant v : {TableVariant::SingleOriginalVertical, TableVariant::SingleOriginalHorizontal,
                           TableVariant::SingleCombined, TableVariant::TwoOriginalLower,
                           TableVariant::TwoOriginalUpper, TableVariant::TwoOriginalHorizontal,
                           TableVariant::TwoMod1Lower, TableVariant::TwoMod1Upper,
                           TableVariant::TwoCombined})
        if (name == table_variant_name(v)) return v;
    return std::nullopt;
}

TransitionTable generate_transition_table(TableVariant v) {
    TransitionTable table;
    table.variant = v;
    const StateSpace& space = is_two(v) ? StateSpace::two() : StateSpace::single();
    table.space = &space;

    switch (v) {
        case TableVariant::SingleOriginalVertical:
            table.kind = StageKind::Vertical;
            table.sub_index = 0;
            generate_vertical(table, space, 0, false, false);
            break;
        case TableVariant::TwoOriginalLower:
            table.kind = StageKind::Vertical;
            table.sub_index = 1;
            generate_vertical(table, space, 1, true, true);
            break;
        case TableVariant::TwoOriginalUpper:
            table.kind = StageKind::Vertical;
            table.sub_index = 0;
            generate_vertical(table, space, 0, true, true);
            break;
        case TableVariant::TwoMod1Lower:
            table.kind = StageKind::Vertical;
            table.sub_index = 1;
            generate_vertical(table, space, 1, false, true);
            break;
        case TableVariant::TwoMod1Upper:
            table.kind = StageKind::Vertical;
            table.sub_index = 0;
            generate_vertical(table, space, 0, false, true);
            break;
        case TableVariant::SingleOriginalHorizontal:
            table.kind = StageKind::Horizontal;
            generate_horizontal(table, space, false);
            break;
        case TableVariant::TwoOriginalHorizontal:
            table.kind = StageKind::Horizontal;
            generate_horizontal(table, space, true);
            break;
        case TableVariant::SingleCombined:
        case TableVariant::TwoCombined:
            table.kind = StageKind::Combined;
            generate_combined(table, space);
            break;
    }

    table.rows_by_state.assign(static_cast<size_t>(space.size()), {});
    for (size_t i = 0; i < table.rows.size(); ++i)
        table.rows_by_state[static_cast<size_t>(table.rows[i].state_id)].push_back(
            static_cast<int>(i));
    table.intermediate_eval_count = 0;
    for (const TableRow& row : table.rows)
        if (space.is_intermediate(row.state_id) && !row.final_only)
            ++table.intermediate_eval_count;
    return table;
}

const TransitionTable& transition_table(TableVariant v) {
    static TransitionTable cache[9];
    static bool built[9] = {};
    int idx = static_cast<int>(v);
    if (!built[idx]) {
        cache[idx] = generate_transition_table(v);
        built[idx] = true;
    }
    return cache[idx];
}

std::string table_to_csv(const TransitionTable& table) {
    std::ostringstream out;
    const StateSpace& space = *table.space;
    switch (table.kind) {
        case StageKind::Vertical:
            out << "state,vertical,next_state,note\n";
            for (const TableRow& r : table.rows)
                out << space.name(r.state_id) << ',' << vertical_name(r.vertical) << ','
                    << space.name(r.next_state_id) << ',' << r.note << '\n';
            break;
        case StageKind::Horizontal:
            out << "state,horizontal,next_state,note\n";
            for (const TableRow& r : table.rows)
                out << space.name(r.state_id) << ',' << r.horizontal.name() << ','
                    << space.name(r.next_state_id) << ','
                    << (r.final_only && r.note.empty() ? "final stage only" : r.note) << '\n';
            break;
        case StageKind::Combined:
            if (space.levels() == 2) {
                out << "state,horizontal,vertical,next_state,note\n";
                for (const TableRow& r : table.rows)
                    out << space.name(r.state_id) << ',' << r.horizontal.name() << ','
                        << vertical_name(r.annot[0]) << " (" << vertical_annotation(r.annot[0])
                        << ")," << space.name(r.next_state_id) << ','
                        << (r.final_only && r.note.empty() ? "final stage only" : r.note) << '\n';
            } else {
                out << "state,horizontal,vertical_upper,vertical_lower,next_state,note\n";
                for (const TableRow& r : table.rows)
                    out << space.name(r.state_id) << ',' << r.horizontal.name() << ','
                        << vertical_name(r.annot[0]) << " (" << vertical_annotation(r.annot[0])
                        << ")," << vertical_name(r.annot[1]) << " ("
                        << vertical_annotation(r.annot[1]) << ")," << space.name(r.next_state_id)
                        << ',' << (r.final_only && r.note.empty() ? "final stage only" : r.note)
                        << '\n';
            }
            break;
    }
    return out.str();
}

} // namespace pickroute

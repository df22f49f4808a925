#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pickroute/configs.hpp"
#include "pickroute/core.hpp"

namespace pickroute {

// Boundary state of a partial tour subgraph: degree parities of the
// current aisle's cross-aisle vertices, the component partition over the
// touched ones, and whether a finished (boundary-free) component exists.
// Vertex order is back, (middle,) front.
struct StateKey {
    std::uint8_t levels = 2;
    std::array<Parity, 3> par{Parity::Zero, Parity::Zero, Parity::Zero};
    std::array<std::int8_t, 3> comp{-1, -1, -1};
    std::uint8_t detached = 0;

    void canonicalize();
    int component_count() const;
    std::string name() const;
    bool operator==(const StateKey&) const = default;
};

// The 7 single-block / 25 two-block PTS equivalence classes, in the
// published listing order.  Initial and terminal classes sit at the end.
class StateSpace {
  public:
    static const StateSpace& single();
    static const StateSpace& two();

    int levels() const { return levels_; }
    int size() const { return static_cast<int>(states_.size()); }
    const StateKey& state(int id) const { return states_[static_cast<size_t>(id)]; }
    const std::string& name(int id) const { return names_[static_cast<size_t>(id)]; }
    int id(const StateKey& key) const;           // -1 when not a valid class
    int id_by_name(const std::string& n) const;  // -1 when unknown
    int initial_id() const { return initial_; }
    int terminal_id() const { return terminal_; }
    bool is_intermediate(int id) const { return id != initial_ && id != terminal_; }
    const std::vector<int>& intermediate_ids() const { return intermediate_; }

  private:
    explicit StateSpace(int levels);
    int levels_;
    std::vector<StateKey> states_;
    std::vector<std::string> names_;
    std::vector<int> intermediate_;
    std::vector<std::int8_t> lookup_; // packed canonical key -> id
    int initial_ = -1;
    int terminal_ = -1;
};

// Context for one aisle's transition: the subaisle summaries and whether
// any picks remain strictly to the right.  sub[0] is the upper subaisle
// (the only one for single-block), sub[1] the lower.
struct TransitionCtx {
    int levels = 2;
    const SubaisleInfo* sub[2] = {nullptr, nullptr};
    bool items_right = true;
};

// Vertical stage of the original algorithms: applies cfg to one subaisle
// (0 = upper / only, 1 = lower) without finalizing any vertex.
std::optional<StateKey> step_vertical(const StateKey& state, int sub_index, VerticalConfig cfg,
                                      const SubaisleInfo& sub);

// Horizontal stage: adds cfg's edges, finalizes the current aisle's
// vertices (parity, depot coverage, stranding) and classifies the next
// boundary.
std::optional<StateKey> step_horizontal(const StateKey& state, const HorizontalConfig& cfg,
                                        const TransitionCtx& ctx);

// Combined stage: derives the vertical configuration(s) forced by the
// horizontal choice, applies everything, finalizes and classifies.
struct CombinedStep {
    StateKey next;
    VerticalConfig vertical[2] = {VerticalConfig::None, VerticalConfig::None}; // [0]=upper/only
    Length vertical_cost = 0;
};
std::optional<CombinedStep> step_combined(const StateKey& state, const HorizontalConfig& cfg,
                                          const TransitionCtx& ctx);

// Deterministic-vertical rule on one subaisle, in flag form: parities of
// the incident horizontal degrees at the back/front vertices, whether each
// vertex is connected to the rest of the tour, and subaisle emptiness.
// Returns nullopt when no single valid configuration exists.
std::optional<VerticalConfig> required_vertical(bool back_odd, bool front_odd, bool back_connected,
                                                bool front_connected, bool picks_empty);

enum class StageKind : std::uint8_t { Vertical, Horizontal, Combined };

enum class TableVariant : std::uint8_t {
    SingleOriginalVertical,
    SingleOriginalHorizontal,
    SingleCombined,
    TwoOriginalLower,
    TwoOriginalUpper,
    TwoOriginalHorizontal,
    TwoMod1Lower,
    TwoMod1Upper,
    TwoCombined,
};

const char* table_variant_name(TableVariant v);
std::optional<TableVariant> table_variant_from_name(const std::string& name);

struct TableRow {
    int state_id = -1;
    StageKind kind = StageKind::Vertical;
    VerticalConfig vertical = VerticalConfig::None; // vertical rows
    HorizontalConfig horizontal;                    // horizontal/combined rows
    VerticalConfig annot[2] = {VerticalConfig::None, VerticalConfig::None}; // combined annotation
    int next_state_id = -1;
    int next_state_empty = -1; // vertical rows: successor on an empty subaisle
    bool final_only = false;   // all-zero horizontal: gated by items_right
    // context requirements for combined rows; bit 0 = upper subaisle must
    // be empty, bit 1 = lower
    std::uint8_t must_be_empty = 0;
    std::string note; // context condition ("empty", "lower empty", ...)
};

struct TransitionTable {
    TableVariant variant;
    StageKind kind;
    const StateSpace* space = nullptr;
    int sub_index = 0; // for vertical tables: which subaisle the stage works
    std::vector<TableRow> rows;
    std::vector<std::vector<int>> rows_by_state; // row indices per state id
    int intermediate_eval_count = 0;
};

const TransitionTable& transition_table(TableVariant v); // built once, cached
TransitionTable generate_transition_table(TableVariant v);
std::string table_to_csv(const TransitionTable& table);

} // namespace pickroute

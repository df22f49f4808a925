#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pickroute/core.hpp"

namespace pickroute {

// Rectangular layout constants.  Lengths are positive integers in file
// units (see core.hpp for the internal half-unit representation).
struct WarehouseLayout {
    int blocks = 1;           // 1 or 2
    int aisles = 1;           // m
    int slots_per_subaisle = 1; // s
    long long slot_length = 1;  // l, per slot
    long long aisle_spacing = 1; // w, centre to centre
    long long cross_aisle_width = 0; // c, two-block only

    // Vertex-to-vertex subaisle length in half-units: s*l for one block,
    // s*l + c/2 per subaisle for two blocks.
    Length subaisle_length() const {
        Length L = half_units_from_units(static_cast<long long>(slots_per_subaisle) * slot_length);
        if (blocks == 2) L += cross_aisle_width; // c units = half of 2c half-units
        return L;
    }
    Length spacing() const { return half_units_from_units(aisle_spacing); }
};

enum class Block : std::uint8_t { Lower = 0, Upper = 1 };
enum class CrossAisle : std::uint8_t { Front = 0, Middle = 1, Back = 2 };

struct Pick {
    int aisle = 1;   // 1-based
    Block block = Block::Lower; // meaningful for two-block only
    int slot = 1;    // 1-based within the subaisle
    bool operator==(const Pick&) const = default;
};

struct Depot {
    int aisle = 1;
    CrossAisle cross = CrossAisle::Front;
};

struct PickInstance {
    WarehouseLayout layout;
    Depot depot;
    std::vector<Pick> picks;
};

// Returns an error description, or nullopt when the instance is well formed.
std::optional<std::string> validate_instance(const PickInstance& inst);

// Sorted pick distances from the subaisle's front vertex, in half-units.
// slot[i] is the 1-based slot for picks and -1 for the depot anchor.
struct SubaislePicks {
    std::vector<Length> pos;
    std::vector<int> slot;

    bool empty() const { return pos.empty(); }
    void insert(Length p, int s);
};

struct AisleContents {
    SubaislePicks lower; // the only subaisle for single-block
    SubaislePicks upper; // unused for single-block
};

// Validated instance with per-aisle pick positions and the depot anchored
// as a zero-cost required point at its cross-aisle vertex.
struct NormalizedInstance {
    WarehouseLayout layout;
    Depot depot;
    std::vector<AisleContents> aisles; // size m, 0-based
    std::vector<Pick> picks;           // original picks (no anchor)
};

// Position of slot i from the subaisle front vertex, in half-units.
Length slot_position(const WarehouseLayout& layout, Block block, int slot);

// validate + anchor_depot.  Throws ValidationError on a malformed instance.
NormalizedInstance normalize_instance(const PickInstance& inst);

// Single-block empty-aisle compression.  aisles holds only non-empty
// aisles (left to right); span[j] is the number of original aisle gaps
// covered by the horizontal step arriving at compressed aisle j, i.e. the
// difference of original indices to the previous compressed aisle (the
// first entry counts from the virtual aisle 0).
struct CompressedInstance {
    const WarehouseLayout* layout = nullptr;
    std::vector<const AisleContents*> aisles;
    std::vector<int> span;       // size = aisles.size()
    std::vector<int> orig_index; // 1-based original aisle indices
    int depot_compressed = 0;    // 0-based index into aisles
};

CompressedInstance compress_empty_aisles(const NormalizedInstance& norm);

// JSON instance I/O.  Unknown fields are rejected; error messages carry
// the offending field path.  Throws ValidationError.
PickInstance instance_from_json(const std::string& text);
std::string instance_to_json(const PickInstance& inst);
PickInstance load_instance_file(const std::string& path);
void save_instance_file(const PickInstance& inst, const std::string& path);

PickInstance mirror_instance(const PickInstance& inst); // left-right reflection
PickInstance scale_instance(const PickInstance& inst, long long lambda);

} // namespace pickroute

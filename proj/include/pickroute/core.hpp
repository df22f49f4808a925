#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pickroute {

// All lengths are held as 64-bit counts of half length-units.  Layout
// dimensions are integer length-units, slot centres sit at half-unit
// offsets, and the middle cross-aisle contributes half its width to each
// subaisle, so every distance in the model is an exact number of
// half-units.  All cost comparisons are therefore exact.
using Length = long long;

inline Length half_units_from_units(long long units) { return 2 * units; }

// Prints a half-unit count in length units ("41" or "44.5").
std::string format_length(Length half_units);

enum class VerticalConfig : std::uint8_t {
    OnePass = 0,
    Top = 1,
    Bottom = 2,
    Gap = 3,
    TwoPass = 4,
    None = 5,
};

const char* vertical_name(VerticalConfig v);       // "1pass", "top", ...
const char* vertical_annotation(VerticalConfig v); // "i" .. "vi"

// Edge counts per cross-aisle segment between two adjacent aisles.
// k[0] is the back (top) cross-aisle; the last used entry is the front.
// Single-block uses k[0] and k[1]; two-block uses k[0], k[1], k[2].
struct HorizontalConfig {
    std::uint8_t levels = 2;
    std::array<std::uint8_t, 3> k{0, 0, 0};

    bool all_zero() const { return k[0] == 0 && k[1] == 0 && k[2] == 0; }
    int edge_count() const { return k[0] + k[1] + k[2]; }
    std::string name() const;
    bool operator==(const HorizontalConfig& o) const = default;
};

// The five single-block configurations, column order 11, 20, 02, 22, 00.
const std::array<HorizontalConfig, 5>& single_horizontals();
// The fourteen two-block configurations in the order
// 110, 101, 011, 200, 020, 002, 211, 121, 112, 220, 202, 022, 222, 000.
const std::array<HorizontalConfig, 14>& two_horizontals();

enum class Parity : std::int8_t {
    Zero = 0, // untouched, no incident edges
    Odd = 1,
    Even = 2, // positive even degree
};

inline char parity_char(Parity p) {
    switch (p) {
        case Parity::Zero: return '0';
        case Parity::Odd: return 'U';
        case Parity::Even: return 'E';
    }
    return '?';
}

// Adds `add_degree` edges incident to a vertex with parity `p`.
inline Parity parity_add(Parity p, int add_degree) {
    if (add_degree == 0) return p;
    bool odd = (p == Parity::Odd) != (add_degree % 2 == 1);
    return odd ? Parity::Odd : Parity::Even;
}

class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pickroute

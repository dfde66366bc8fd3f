#pragma once

#include <optional>
#include <string>

namespace qsymb {

/// Enumeration caps and default alphabet sizes. Values come from the built-in
/// defaults, then an optional JSON file, then QSYMB_* environment variables,
/// later sources winning.
struct Config {
    int cap_type_a_n = 8;           // largest n for plain-permutation enumeration
    int cap_type_b_n = 5;           // largest n for signed-permutation enumeration
    int cap_coloured_total = 8;     // largest n + p for coloured enumeration
    long long cap_enum_items = 2'000'000;  // ceiling on any single enumeration
    int default_alphabet = 4;       // M used when the CLI omits --alphabet

    /// Load from a JSON file (all keys optional), then apply env overrides
    /// QSYMB_CAP_TYPE_A_N, QSYMB_CAP_TYPE_B_N, QSYMB_CAP_COLOURED_TOTAL,
    /// QSYMB_CAP_ENUM_ITEMS, QSYMB_DEFAULT_ALPHABET.
    static Config load(const std::optional<std::string>& path = std::nullopt);
};

/// Process-wide config used by the enumeration routines.
Config& config();

} // namespace qsymb

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace unialg {

/// Interned constant name.
using SymbolId = std::uint32_t;

/// Variable identifier.
///
/// The 32-bit space is split in three ranges:
///   [0, 2^30)      names interned from user input (`?x`, `?foo`)
///   [2^30, 2^31)   canonical variables `v<i>` used by flow normal forms
///   [2^31, 2^32)   fresh variables, only ever produced inside an operation
using VarId = std::uint32_t;

namespace vars {

inline constexpr VarId kCanonicalBase = VarId{1} << 30;
inline constexpr VarId kFreshBase = VarId{1} << 31;

constexpr VarId canonical(std::uint32_t index) { return kCanonicalBase + index; }
constexpr bool is_canonical(VarId v) { return v >= kCanonicalBase && v < kFreshBase; }
constexpr bool is_fresh(VarId v) { return v >= kFreshBase; }
constexpr std::uint32_t canonical_index(VarId v) { return v - kCanonicalBase; }

}  // namespace vars

/// Reserved constants. They are the first three entries of the constant table.
namespace reserved {

inline constexpr SymbolId kStar = 0;   // begin/end marker of cyclic words
inline constexpr SymbolId kLeft = 1;   // `l`
inline constexpr SymbolId kRight = 2;  // `r`

}  // namespace reserved

SymbolId intern_constant(std::string_view name);

/// `v<digits>` (no leading zero) maps onto the canonical range so that a
/// rendered flow parses back to the identical term.
VarId intern_variable(std::string_view name);

/// Names are stable for the lifetime of the process.
const std::string& constant_name(SymbolId id);
std::string variable_name(VarId id);

bool is_reserved_constant(SymbolId id);

}  // namespace unialg

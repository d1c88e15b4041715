#pragma once

#include <cstdint>

namespace sf {

/// Resource ceilings for exhaustive operations. These are configuration,
/// not mathematical constants.
struct Limits {
  /// Largest family an enumeration may produce.
  std::uint64_t max_objects = 10'000'000;
  /// Largest n for sums over the symmetric group S_n.
  unsigned max_perm_n = 10;
};

}  // namespace sf

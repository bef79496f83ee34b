#pragma once

#include <cstdint>

namespace finalg {

/// Size limits shared by every constructor that enumerates elements.
struct Bounds {
  /// Largest ring, field or group that may be fully enumerated.
  std::uint64_t max_elements = 1'000'000;
  /// Groups up to this order get a full Cayley table; larger ones are
  /// evaluated on the fly where the constructor supports it.
  std::uint64_t table_threshold = 5000;
};

}  // namespace finalg

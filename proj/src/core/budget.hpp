#pragma once

#include <cstdint>
#include <cstdlib>

namespace permdiam {

/// Resource budgets for search-style computations. State budgets are given
/// in bytes and converted to a state count per BFS from the packed key
/// width. PERMDIAM_STATE_BYTES and PERMDIAM_ENUM_CAP override the defaults.
struct Budget {
  std::uint64_t state_bytes = std::uint64_t{8} << 30;  // 8 GiB of BFS state
  std::uint64_t enum_cap = 10'000'000;                 // element enumeration cap
  std::uint64_t max_gen_sets = 50'000'000;             // worst-case enumeration

  std::uint64_t max_states_for_key(std::size_t key_bytes) const {
    // hash-set slot + parent record + vector bookkeeping per state
    return state_bytes / (key_bytes + 56);
  }
};

inline Budget default_budget() {
  Budget b;
  if (const char* e = std::getenv("PERMDIAM_STATE_BYTES")) {
    char* end = nullptr;
    std::uint64_t v = std::strtoull(e, &end, 10);
    if (end && *end == '\0' && v > 0) b.state_bytes = v;
  }
  if (const char* e = std::getenv("PERMDIAM_ENUM_CAP")) {
    char* end = nullptr;
    std::uint64_t v = std::strtoull(e, &end, 10);
    if (end && *end == '\0' && v > 0) b.enum_cap = v;
  }
  return b;
}

}  // namespace permdiam

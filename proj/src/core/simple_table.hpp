#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace permdiam {

/// Recognition data for the nonabelian simple groups the engine can name.
/// mu is the minimal faithful permutation degree; rank follows the usual
/// convention (degree for alternating groups, Lie rank otherwise, 1 for
/// sporadic groups). element_orders, when nonempty, is the sorted set of
/// distinct element orders and is used to split order coincidences.
struct SimpleGroupInfo {
  std::uint64_t order;
  std::string name;
  std::uint64_t mu;
  std::uint64_t rank;
  std::vector<std::uint64_t> element_orders;
};

const std::vector<SimpleGroupInfo>& simple_group_table();

std::vector<const SimpleGroupInfo*> simple_table_by_order(std::uint64_t order);

/// A_n data for n >= 5 outside the explicit table (mu = rank = n).
SimpleGroupInfo alternating_info(std::uint64_t n);

}  // namespace permdiam

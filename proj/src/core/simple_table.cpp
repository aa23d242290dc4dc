#include "core/simple_table.hpp"

namespace permdiam {

const std::vector<SimpleGroupInfo>& simple_group_table() {
  // mu values: mu(A_n) = n (n >= 5), mu(PSL(2,q)) = q+1 except
  // q in {5,7,9,11} -> {5,7,6,11}; the remaining entries are the standard
  // minimal-degree values. A8 and PSL(3,4) share order 20160 and are split
  // by their element-order profiles (A8 has elements of order 6 and 15,
  // PSL(3,4) has neither).
  static const std::vector<SimpleGroupInfo> table = {
      {60, "A5", 5, 5, {1, 2, 3, 5}},
      {168, "PSL(2,7)", 7, 1, {1, 2, 3, 4, 7}},
      {360, "A6", 6, 6, {1, 2, 3, 4, 5}},
      {504, "PSL(2,8)", 9, 1, {1, 2, 3, 7, 9}},
      {660, "PSL(2,11)", 11, 1, {1, 2, 3, 5, 6, 11}},
      {1092, "PSL(2,13)", 14, 1, {1, 2, 3, 6, 7, 13}},
      {2448, "PSL(2,17)", 18, 1, {}},
      {2520, "A7", 7, 7, {1, 2, 3, 4, 5, 6, 7}},
      {3420, "PSL(2,19)", 20, 1, {}},
      {4080, "PSL(2,16)", 17, 1, {}},
      {5616, "PSL(3,3)", 13, 2, {}},
      {6048, "PSU(3,3)", 28, 1, {}},
      {6072, "PSL(2,23)", 24, 1, {}},
      {7800, "PSL(2,25)", 26, 1, {}},
      {7920, "M11", 11, 1, {1, 2, 3, 4, 5, 6, 8, 11}},
      {9828, "PSL(2,27)", 28, 1, {}},
      {12180, "PSL(2,29)", 30, 1, {}},
      {14880, "PSL(2,31)", 32, 1, {}},
      {20160, "A8", 8, 8, {1, 2, 3, 4, 5, 6, 7, 15}},
      {20160, "PSL(3,4)", 21, 2, {1, 2, 3, 4, 5, 7}},
      {25308, "PSL(2,37)", 38, 1, {}},
      {25920, "Sp(4,3)", 27, 2, {}},
      {32736, "PSL(2,32)", 33, 1, {}},
      {34440, "PSL(2,41)", 42, 1, {}},
      {95040, "M12", 12, 1, {}},
      {181440, "A9", 9, 9, {}},
      {1814400, "A10", 10, 10, {}},
  };
  return table;
}

std::vector<const SimpleGroupInfo*> simple_table_by_order(std::uint64_t order) {
  std::vector<const SimpleGroupInfo*> out;
  for (const auto& e : simple_group_table())
    if (e.order == order) out.push_back(&e);
  return out;
}

SimpleGroupInfo alternating_info(std::uint64_t n) {
  return SimpleGroupInfo{0, "A" + std::to_string(n), n, n, {}};
}

}  // namespace permdiam

#include "aef/solvers.hpp"

namespace aef {

Allocation solve_aef1_picking(const Instance& instance) {
  const std::size_t n = instance.agents();
  const std::size_t m = instance.items();
  Allocation allocation = Allocation::unassigned(m);

  const std::size_t pickers = m <= n ? m : n - 1;
  for (AgentId agent = 0; agent < pickers; ++agent) {
    std::optional<ItemId> favourite;
    for (ItemId g = 0; g < m; ++g) {
      if (allocation.owner(g) != kUnassigned) {
        continue;
      }
      if (!favourite || instance.value(agent, g) > instance.value(agent, *favourite)) {
        favourite = g;
      }
    }
    allocation.assign(*favourite, agent);
  }
  if (m > n) {
    for (ItemId g = 0; g < m; ++g) {
      if (allocation.owner(g) == kUnassigned) {
        allocation.assign(g, n - 1);
      }
    }
  }
  return allocation;
}

}  // namespace aef

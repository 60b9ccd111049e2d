#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "aef/instance.hpp"

namespace aef {

/// What agent i removes when comparing against agent h: an item (or nothing)
/// and the agent whose bundle holds it, which is i or h.
struct RemovalEntry {
  std::optional<ItemId> item;
  AgentId holder = 0;

  friend bool operator==(const RemovalEntry&, const RemovalEntry&) = default;
};

/// n x n table of designated removals. The diagonal is fixed to (none, i).
/// Valid iff no item is labelled with two different holders, so the entries
/// induce a partial allocation.
class RemovingMatrix {
 public:
  /// All-none matrix.
  RemovingMatrix(std::size_t agents, std::size_t items);

  std::size_t agents() const { return agents_; }
  std::size_t items() const { return items_; }
  const RemovalEntry& at(AgentId i, AgentId h) const { return entries_.at(i * agents_ + h); }
  /// Throws InputError when the holder is neither i nor h, the item is out of
  /// range, or i == h.
  void set(AgentId i, AgentId h, RemovalEntry entry);

  bool is_valid() const;
  /// Owner vector of the pre-allocated items (kUnassigned elsewhere).
  /// Requires a valid matrix.
  Allocation preallocation() const;
  /// Membership flags of M^R_i: items agent i removes in some comparison.
  std::vector<bool> removing_items(AgentId i) const;

  friend bool operator==(const RemovingMatrix&, const RemovingMatrix&) = default;

 private:
  std::size_t agents_;
  std::size_t items_;
  std::vector<RemovalEntry> entries_;
};

/// Visits every valid removing matrix exactly once. Order: off-diagonal
/// pairs row-major, first pair most significant; options per pair are none,
/// (g0, i), (g0, h), (g1, i), ... Stops early when `visit` returns false.
/// Returns the number of matrices visited. Requires agents >= 2.
std::size_t for_each_removing_matrix(std::size_t agents, std::size_t items,
                                     const std::function<bool(const RemovingMatrix&)>& visit);

}  // namespace aef

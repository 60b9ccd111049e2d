#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "aef/instance.hpp"

namespace aef {

/// A DP state (W, H, k). `cross` is the n x n matrix H, row-major, in integer
/// units of the row agent's value grid: plain values in the binary DP, and
/// multiples of a_i / r on top of the pre-allocated totals in the approximate
/// DP.
struct DpState {
  std::vector<std::size_t> sizes;
  std::vector<std::int64_t> cross;
  std::size_t allocated = 0;

  std::int64_t cross_at(AgentId viewer, AgentId holder) const {
    return cross[viewer * sizes.size() + holder];
  }

  friend bool operator==(const DpState&, const DpState&) = default;
};

struct SearchLimits {
  /// Reached states allowed in any single layer.
  std::size_t max_states = 1'000'000;
  /// Drop states that can no longer meet the quota. Never changes a verdict.
  bool prune_by_quota = true;
};

/// Reached-state dynamic program over a sequence of items. Each item
/// contributes, for every viewer i, an integer increment to H(i, owner).
/// Layers are stored sparsely, keyed on (W, H); each reached state keeps the
/// first predecessor found in deterministic order.
class StateSearch {
 public:
  /// `item_units[t * agents + i]` is item t's increment in viewer i's row.
  /// Throws ResourceLimitError when a layer grows beyond the limit.
  StateSearch(DpState initial, std::span<const std::int64_t> item_units, const Quota* quota,
              SearchLimits limits = {});

  std::size_t agents() const { return agents_; }
  std::size_t steps() const { return layers_.size() - 1; }
  std::size_t layer_size(std::size_t step) const { return layers_.at(step).states.size(); }
  DpState state(std::size_t step, std::size_t index) const;

  /// Agent assigned to each processed item, in processing order, for the
  /// path that reaches final state `index`.
  std::vector<AgentId> reconstruct(std::size_t index) const;

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::int64_t>& key) const noexcept;
  };
  struct Layer {
    std::vector<std::vector<std::int64_t>> states;
    std::vector<std::uint32_t> parent;
    std::vector<AgentId> agent;
  };

  bool viable(const std::vector<std::int64_t>& key, std::size_t remaining) const;

  std::size_t agents_;
  std::size_t allocated_before_;
  const Quota* quota_;
  SearchLimits limits_;
  std::vector<Layer> layers_;
};

}  // namespace aef

#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aef/rational.hpp"

namespace aef {

using AgentId = std::size_t;
using ItemId = std::size_t;

inline constexpr AgentId kUnassigned = std::numeric_limits<AgentId>::max();

/// n agents, m items and an additive valuation profile of exact non-negative
/// rationals. Immutable after construction.
class Instance {
 public:
  /// `values` is row-major: values[i * items + g] = v_i(g).
  /// Throws InputError on shape mismatch, zero agents or negative values.
  Instance(std::size_t agents, std::size_t items, std::vector<Rational> values,
           std::vector<std::string> item_labels = {});

  static Instance from_rows(const std::vector<std::vector<Rational>>& rows,
                            std::vector<std::string> item_labels = {});

  std::size_t agents() const { return agents_; }
  std::size_t items() const { return items_; }
  const Rational& value(AgentId agent, ItemId item) const;
  std::span<const Rational> row(AgentId agent) const;
  const std::vector<std::string>& item_labels() const { return labels_; }

  /// True iff every value is 0 or 1.
  bool is_binary() const;
  Rational max_value() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::size_t agents_;
  std::size_t items_;
  std::vector<Rational> values_;
  std::vector<std::string> labels_;
};

/// Owner vector over items. Entries may be kUnassigned while a search is in
/// progress; the fairness checkers only accept complete allocations.
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(std::vector<AgentId> owner) : owner_(std::move(owner)) {}
  static Allocation unassigned(std::size_t items) {
    return Allocation(std::vector<AgentId>(items, kUnassigned));
  }

  std::size_t items() const { return owner_.size(); }
  AgentId owner(ItemId item) const { return owner_.at(item); }
  void assign(ItemId item, AgentId agent) { owner_.at(item) = agent; }
  const std::vector<AgentId>& owners() const { return owner_; }

  bool is_complete() const;
  /// Bundles A_0..A_{agents-1}, items ascending. Unassigned items are skipped.
  std::vector<std::vector<ItemId>> bundles(std::size_t agents) const;
  std::vector<std::size_t> bundle_sizes(std::size_t agents) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::vector<AgentId> owner_;
};

/// Per-agent cardinality bounds lower_i <= |A_i| <= upper_i.
struct Quota {
  std::vector<std::size_t> lower;
  std::vector<std::size_t> upper;

  /// Throws InputError when the vectors differ in length or lower > upper.
  Quota(std::vector<std::size_t> lower_bounds, std::vector<std::size_t> upper_bounds);
  static Quota exact(std::vector<std::size_t> sizes);
  static Quota exact(std::size_t agents, std::size_t size);
  /// No effective constraint for `items` items.
  static Quota unbounded(std::size_t agents, std::size_t items);

  std::size_t agents() const { return lower.size(); }
  bool is_exact() const { return lower == upper; }
  /// sum(lower) <= items <= sum(upper).
  bool admits(std::size_t items) const;

  friend bool operator==(const Quota&, const Quota&) = default;
};

struct QuotaCheck {
  bool satisfied = true;
  std::optional<AgentId> violating_agent;

  explicit operator bool() const { return satisfied; }
};

/// v_i(S). Throws std::out_of_range on a bad agent or item index.
Rational bundle_value(const Instance& instance, AgentId agent, std::span<const ItemId> items);

/// u_i(S) = v_i(S) / |S|, and 0 for the empty set.
Rational average_value(const Instance& instance, AgentId agent, std::span<const ItemId> items);

/// Empty result means the allocation is a complete, well-formed partition
/// for this instance.
std::vector<std::string> validate_allocation(const Instance& instance,
                                             const Allocation& allocation);

/// Throws InputError when the allocation is incomplete or names an agent the
/// quota does not cover.
QuotaCheck satisfies_quota(const Allocation& allocation, const Quota& quota);

}  // namespace aef

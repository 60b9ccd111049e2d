#include "aef/instance.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "aef/error.hpp"

namespace aef {

Instance::Instance(std::size_t agents, std::size_t items, std::vector<Rational> values,
                   std::vector<std::string> item_labels)
    : agents_(agents), items_(items), values_(std::move(values)), labels_(std::move(item_labels)) {
  if (agents_ == 0) {
    throw InputError("instance needs at least one agent");
  }
  if (values_.size() != agents_ * items_) {
    throw InputError("values shape does not match agents x items");
  }
  if (!labels_.empty() && labels_.size() != items_) {
    throw InputError("item label count does not match item count");
  }
  for (const auto& v : values_) {
    if (v.sign() < 0) {
      throw InputError("negative value");
    }
  }
}

Instance Instance::from_rows(const std::vector<std::vector<Rational>>& rows,
                             std::vector<std::string> item_labels) {
  if (rows.empty()) {
    throw InputError("instance needs at least one agent");
  }
  const std::size_t items = rows.front().size();
  std::vector<Rational> flat;
  flat.reserve(rows.size() * items);
  for (const auto& row : rows) {
    if (row.size() != items) {
      throw InputError("ragged value rows");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return Instance(rows.size(), items, std::move(flat), std::move(item_labels));
}

const Rational& Instance::value(AgentId agent, ItemId item) const {
  if (agent >= agents_ || item >= items_) {
    throw std::out_of_range("agent or item index out of range");
  }
  return values_[agent * items_ + item];
}

std::span<const Rational> Instance::row(AgentId agent) const {
  if (agent >= agents_) {
    throw std::out_of_range("agent index out of range");
  }
  return std::span<const Rational>(values_).subspan(agent * items_, items_);
}

bool Instance::is_binary() const {
  const Rational one(1);
  return std::all_of(values_.begin(), values_.end(),
                     [&](const Rational& v) { return v.is_zero() || v == one; });
}

Rational Instance::max_value() const {
  Rational best;
  for (const auto& v : values_) {
    if (v > best) {
      best = v;
    }
  }
  return best;
}

bool Allocation::is_complete() const {
  return std::none_of(owner_.begin(), owner_.end(), [](AgentId a) { return a == kUnassigned; });
}

std::vector<std::vector<ItemId>> Allocation::bundles(std::size_t agents) const {
  std::vector<std::vector<ItemId>> out(agents);
  for (ItemId g = 0; g < owner_.size(); ++g) {
    if (owner_[g] != kUnassigned) {
      out.at(owner_[g]).push_back(g);
    }
  }
  return out;
}

std::vector<std::size_t> Allocation::bundle_sizes(std::size_t agents) const {
  std::vector<std::size_t> sizes(agents, 0);
  for (const AgentId a : owner_) {
    if (a != kUnassigned) {
      ++sizes.at(a);
    }
  }
  return sizes;
}

Quota::Quota(std::vector<std::size_t> lower_bounds, std::vector<std::size_t> upper_bounds)
    : lower(std::move(lower_bounds)), upper(std::move(upper_bounds)) {
  if (lower.size() != upper.size()) {
    throw InputError("quota lower/upper length mismatch");
  }
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (lower[i] > upper[i]) {
      throw InputError("quota lower bound exceeds upper bound for agent " + std::to_string(i));
    }
  }
}

Quota Quota::exact(std::vector<std::size_t> sizes) {
  auto copy = sizes;
  return Quota(std::move(copy), std::move(sizes));
}

Quota Quota::exact(std::size_t agents, std::size_t size) {
  return exact(std::vector<std::size_t>(agents, size));
}

Quota Quota::unbounded(std::size_t agents, std::size_t items) {
  return Quota(std::vector<std::size_t>(agents, 0), std::vector<std::size_t>(agents, items));
}

bool Quota::admits(std::size_t items) const {
  const auto lo = std::accumulate(lower.begin(), lower.end(), std::size_t{0});
  const auto hi = std::accumulate(upper.begin(), upper.end(), std::size_t{0});
  return lo <= items && items <= hi;
}

Rational bundle_value(const Instance& instance, AgentId agent, std::span<const ItemId> items) {
  if (agent >= instance.agents()) {
    throw std::out_of_range("agent index out of range");
  }
  Rational total;
  for (const ItemId g : items) {
    total += instance.value(agent, g);
  }
  return total;
}

Rational average_value(const Instance& instance, AgentId agent, std::span<const ItemId> items) {
  return average_of(bundle_value(instance, agent, items), items.size());
}

std::vector<std::string> validate_allocation(const Instance& instance,
                                             const Allocation& allocation) {
  std::vector<std::string> violations;
  if (allocation.items() != instance.items()) {
    violations.push_back("length mismatch: owner has " + std::to_string(allocation.items()) +
                         " entries, instance has " + std::to_string(instance.items()) + " items");
  }
  bool incomplete = false;
  for (ItemId g = 0; g < allocation.items(); ++g) {
    const AgentId a = allocation.owner(g);
    if (a == kUnassigned) {
      incomplete = true;
    } else if (a >= instance.agents()) {
      violations.push_back("owner index out of range at owner[" + std::to_string(g) + "]");
    }
  }
  if (incomplete) {
    violations.push_back("incomplete assignment");
  }
  return violations;
}

QuotaCheck satisfies_quota(const Allocation& allocation, const Quota& quota) {
  if (!allocation.is_complete()) {
    throw InputError("incomplete allocation");
  }
  for (ItemId g = 0; g < allocation.items(); ++g) {
    if (allocation.owner(g) >= quota.agents()) {
      throw InputError("owner index out of range for quota");
    }
  }
  const auto sizes = allocation.bundle_sizes(quota.agents());
  for (AgentId i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < quota.lower[i] || sizes[i] > quota.upper[i]) {
      return QuotaCheck{false, i};
    }
  }
  return QuotaCheck{};
}

}  // namespace aef

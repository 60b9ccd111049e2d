#include "aef/removing_matrix.hpp"

#include "aef/error.hpp"

namespace aef {

RemovingMatrix::RemovingMatrix(std::size_t agents, std::size_t items)
    : agents_(agents), items_(items), entries_(agents * agents) {
  for (AgentId i = 0; i < agents_; ++i) {
    for (AgentId h = 0; h < agents_; ++h) {
      entries_[i * agents_ + h].holder = i;
    }
  }
}

void RemovingMatrix::set(AgentId i, AgentId h, RemovalEntry entry) {
  if (i >= agents_ || h >= agents_ || i == h) {
    throw InputError("removing matrix entry must be an off-diagonal pair");
  }
  if (entry.holder != i && entry.holder != h) {
    throw InputError("removal holder must be one of the compared agents");
  }
  if (entry.item && *entry.item >= items_) {
    throw InputError("removal item out of range");
  }
  entries_[i * agents_ + h] = entry;
}

bool RemovingMatrix::is_valid() const {
  std::vector<AgentId> holder(items_, kUnassigned);
  for (const auto& e : entries_) {
    if (!e.item) {
      continue;
    }
    AgentId& slot = holder[*e.item];
    if (slot != kUnassigned && slot != e.holder) {
      return false;
    }
    slot = e.holder;
  }
  return true;
}

Allocation RemovingMatrix::preallocation() const {
  if (!is_valid()) {
    throw InputError("removing matrix assigns an item to two holders");
  }
  Allocation pre = Allocation::unassigned(items_);
  for (const auto& e : entries_) {
    if (e.item) {
      pre.assign(*e.item, e.holder);
    }
  }
  return pre;
}

std::vector<bool> RemovingMatrix::removing_items(AgentId i) const {
  std::vector<bool> out(items_, false);
  for (AgentId h = 0; h < agents_; ++h) {
    const auto& e = at(i, h);
    if (e.item) {
      out[*e.item] = true;
    }
  }
  return out;
}

namespace {

struct Enumerator {
  std::size_t agents;
  std::size_t items;
  const std::function<bool(const RemovingMatrix&)>& visit;
  std::vector<std::pair<AgentId, AgentId>> pairs;
  RemovingMatrix matrix;
  std::vector<AgentId> holder;
  std::size_t visited = 0;

  // Returns false once the visitor asks to stop.
  bool descend(std::size_t depth) {
    if (depth == pairs.size()) {
      ++visited;
      return visit(matrix);
    }
    const auto [i, h] = pairs[depth];
    matrix.set(i, h, RemovalEntry{std::nullopt, i});
    if (!descend(depth + 1)) {
      return false;
    }
    for (ItemId g = 0; g < items; ++g) {
      for (const AgentId label : {i, h}) {
        if (holder[g] != kUnassigned && holder[g] != label) {
          continue;
        }
        const AgentId saved = holder[g];
        holder[g] = label;
        matrix.set(i, h, RemovalEntry{g, label});
        const bool go_on = descend(depth + 1);
        holder[g] = saved;
        if (!go_on) {
          return false;
        }
      }
    }
    matrix.set(i, h, RemovalEntry{std::nullopt, i});
    return true;
  }
};

}  // namespace

std::size_t for_each_removing_matrix(std::size_t agents, std::size_t items,
                                     const std::function<bool(const RemovingMatrix&)>& visit) {
  if (agents < 2) {
    throw InputError("removing matrices need at least two agents");
  }
  Enumerator e{agents, items, visit, {}, RemovingMatrix(agents, items),
               std::vector<AgentId>(items, kUnassigned)};
  for (AgentId i = 0; i < agents; ++i) {
    for (AgentId h = 0; h < agents; ++h) {
      if (i != h) {
        e.pairs.emplace_back(i, h);
      }
    }
  }
  e.descend(0);
  return e.visited;
}

}  // namespace aef

#include "aef/state_search.hpp"

#include <string>

#include "aef/error.hpp"

namespace aef {

std::size_t StateSearch::KeyHash::operator()(const std::vector<std::int64_t>& key) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto v : key) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

StateSearch::StateSearch(DpState initial, std::span<const std::int64_t> item_units,
                         const Quota* quota, SearchLimits limits)
    : agents_(initial.sizes.size()),
      allocated_before_(initial.allocated),
      quota_(quota),
      limits_(limits) {
  const std::size_t n = agents_;
  if (initial.cross.size() != n * n) {
    throw InputError("state cross matrix must be agents x agents");
  }
  if (n == 0 || item_units.size() % n != 0) {
    throw InputError("item increments must have one entry per agent");
  }
  if (quota_ != nullptr && quota_->agents() != n) {
    throw InputError("quota agent count does not match");
  }
  const std::size_t steps = item_units.size() / n;

  // Key layout: W_0..W_{n-1}, then H row-major.
  std::vector<std::int64_t> start;
  start.reserve(n + n * n);
  for (const auto w : initial.sizes) {
    start.push_back(static_cast<std::int64_t>(w));
  }
  start.insert(start.end(), initial.cross.begin(), initial.cross.end());

  layers_.reserve(steps + 1);
  Layer first;
  if (viable(start, steps)) {
    first.states.push_back(std::move(start));
    first.parent.push_back(0);
    first.agent.push_back(kUnassigned);
  }
  layers_.push_back(std::move(first));

  for (std::size_t t = 0; t < steps; ++t) {
    const Layer& prev = layers_.back();
    Layer next;
    std::unordered_map<std::vector<std::int64_t>, std::uint32_t, KeyHash> index;
    index.reserve(prev.states.size() * n);
    const auto units = item_units.subspan(t * n, n);
    const std::size_t remaining = steps - t - 1;
    for (std::uint32_t s = 0; s < prev.states.size(); ++s) {
      for (AgentId a = 0; a < n; ++a) {
        std::vector<std::int64_t> key = prev.states[s];
        key[a] += 1;
        for (AgentId viewer = 0; viewer < n; ++viewer) {
          key[n + viewer * n + a] += units[viewer];
        }
        if (!viable(key, remaining)) {
          continue;
        }
        const auto [it, inserted] =
            index.try_emplace(key, static_cast<std::uint32_t>(next.states.size()));
        if (!inserted) {
          continue;
        }
        if (next.states.size() >= limits_.max_states) {
          throw ResourceLimitError("reached-state limit of " + std::to_string(limits_.max_states) +
                                   " exceeded");
        }
        next.states.push_back(std::move(key));
        next.parent.push_back(s);
        next.agent.push_back(a);
      }
    }
    layers_.push_back(std::move(next));
  }
}

bool StateSearch::viable(const std::vector<std::int64_t>& key, std::size_t remaining) const {
  if (quota_ == nullptr || !limits_.prune_by_quota) {
    return true;
  }
  std::size_t deficit = 0;
  std::size_t room = 0;
  for (AgentId i = 0; i < agents_; ++i) {
    const auto w = static_cast<std::size_t>(key[i]);
    if (w > quota_->upper[i]) {
      return false;
    }
    if (w < quota_->lower[i]) {
      deficit += quota_->lower[i] - w;
    }
    room += quota_->upper[i] - w;
  }
  return deficit <= remaining && remaining <= room;
}

DpState StateSearch::state(std::size_t step, std::size_t index) const {
  const auto& key = layers_.at(step).states.at(index);
  DpState out;
  out.sizes.reserve(agents_);
  for (AgentId i = 0; i < agents_; ++i) {
    out.sizes.push_back(static_cast<std::size_t>(key[i]));
  }
  out.cross.assign(key.begin() + static_cast<std::ptrdiff_t>(agents_), key.end());
  out.allocated = allocated_before_ + step;
  return out;
}

std::vector<AgentId> StateSearch::reconstruct(std::size_t index) const {
  std::vector<AgentId> owners(steps());
  std::size_t current = index;
  for (std::size_t step = steps(); step > 0; --step) {
    const Layer& layer = layers_[step];
    owners[step - 1] = layer.agent.at(current);
    current = layer.parent[current];
  }
  return owners;
}

}  // namespace aef

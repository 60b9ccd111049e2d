#include "aef/error.hpp"
#include "aef/solvers.hpp"

namespace aef {

namespace {

// Average as a fraction num/den; an empty bundle averages 0.
struct Avg {
  std::int64_t num;
  std::int64_t den;
};

Avg avg(std::int64_t total, std::int64_t count) {
  return count == 0 ? Avg{0, 1} : Avg{total, count};
}

bool at_least(Avg lhs, Avg rhs) {
  return static_cast<__int128>(lhs.num) * rhs.den >= static_cast<__int128>(rhs.num) * lhs.den;
}

// Agent i's bundle holds `own_ones` items it values 1 out of `own_size`; h's
// bundle holds `other_ones` out of `other_size`.
bool pair_is_aef1(std::int64_t own_ones, std::int64_t own_size, std::int64_t other_ones,
                  std::int64_t other_size) {
  if (at_least(avg(own_ones, own_size), avg(other_ones, other_size))) {
    return true;
  }
  if (own_ones < own_size &&
      at_least(avg(own_ones, own_size - 1), avg(other_ones, other_size))) {
    return true;
  }
  if (own_ones > 0 &&
      at_least(avg(own_ones - 1, own_size - 1), avg(other_ones, other_size))) {
    return true;
  }
  if (other_ones > 0 &&
      at_least(avg(own_ones, own_size), avg(other_ones - 1, other_size - 1))) {
    return true;
  }
  if (other_ones < other_size &&
      at_least(avg(own_ones, own_size), avg(other_ones, other_size - 1))) {
    return true;
  }
  return false;
}

bool sizes_meet_quota(const std::vector<std::size_t>& sizes, const Quota& quota) {
  for (AgentId i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < quota.lower[i] || sizes[i] > quota.upper[i]) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool check_state_aef1_binary(const DpState& state, const Quota& quota, std::size_t items) {
  if (state.allocated != items) {
    throw InputError("state is not final: allocated " + std::to_string(state.allocated) +
                     " of " + std::to_string(items) + " items");
  }
  const std::size_t n = state.sizes.size();
  if (quota.agents() != n) {
    throw InputError("quota agent count does not match state");
  }
  if (!sizes_meet_quota(state.sizes, quota)) {
    return false;
  }
  for (AgentId i = 0; i < n; ++i) {
    for (AgentId h = 0; h < n; ++h) {
      if (i == h) {
        continue;
      }
      if (!pair_is_aef1(state.cross_at(i, i), static_cast<std::int64_t>(state.sizes[i]),
                        state.cross_at(i, h), static_cast<std::int64_t>(state.sizes[h]))) {
        return false;
      }
    }
  }
  return true;
}

std::optional<Allocation> dp_binary_quota(const Instance& instance, const Quota& quota,
                                          SearchLimits limits) {
  if (!instance.is_binary()) {
    throw InputError("binary DP requires every value to be 0 or 1");
  }
  const std::size_t n = instance.agents();
  const std::size_t m = instance.items();
  if (quota.agents() != n) {
    throw InputError("quota agent count does not match instance");
  }
  if (!quota.admits(m)) {
    return std::nullopt;
  }

  std::vector<std::int64_t> units(m * n);
  for (ItemId g = 0; g < m; ++g) {
    for (AgentId i = 0; i < n; ++i) {
      units[g * n + i] = instance.value(i, g).is_zero() ? 0 : 1;
    }
  }
  DpState start{std::vector<std::size_t>(n, 0), std::vector<std::int64_t>(n * n, 0), 0};
  const StateSearch search(std::move(start), units, &quota, limits);

  for (std::size_t s = 0; s < search.layer_size(m); ++s) {
    if (check_state_aef1_binary(search.state(m, s), quota, m)) {
      return Allocation(search.reconstruct(s));
    }
  }
  return std::nullopt;
}

}  // namespace aef

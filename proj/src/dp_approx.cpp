#include <string>

#include "aef/error.hpp"
#include "aef/solvers.hpp"

namespace aef {

namespace {

bool sizes_meet_quota(const std::vector<std::size_t>& sizes, const Quota& quota) {
  for (AgentId i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < quota.lower[i] || sizes[i] > quota.upper[i]) {
      return false;
    }
  }
  return true;
}

// Bounded envy under v^R with the designated removal of each pair:
// u^R_i(A_i \ g) >= u^R_i(A_h \ g) - a_i / r.
bool designated_removals_bound_envy(const RemovingMatrix& matrix, const RoundedProfile& profile,
                                    const std::vector<std::size_t>& sizes,
                                    const std::vector<Rational>& cross) {
  const std::size_t n = sizes.size();
  for (AgentId i = 0; i < n; ++i) {
    const Rational tolerance = profile.tolerance(i);
    for (AgentId h = 0; h < n; ++h) {
      if (i == h) {
        continue;
      }
      const RemovalEntry& entry = matrix.at(i, h);
      Rational own_total = cross[i * n + i];
      Rational other_total = cross[i * n + h];
      std::size_t own_size = sizes[i];
      std::size_t other_size = sizes[h];
      if (entry.item) {
        const Rational& removed = profile.value(i, *entry.item);
        if (entry.holder == i) {
          own_total -= removed;
          --own_size;
        } else {
          other_total -= removed;
          --other_size;
        }
      }
      if (average_of(own_total, own_size) < average_of(other_total, other_size) - tolerance) {
        return false;
      }
    }
  }
  return true;
}

// Same bound, but any g in A_i u A_h may be removed.
bool some_removal_bounds_envy(const RoundedProfile& profile, const Allocation& allocation) {
  const Instance rounded = profile.as_instance();
  const std::size_t n = profile.agents();
  const auto bundles = allocation.bundles(n);
  for (AgentId i = 0; i < n; ++i) {
    const Rational tolerance = profile.tolerance(i);
    for (AgentId h = 0; h < n; ++h) {
      if (i == h) {
        continue;
      }
      if (bundles[i].empty() && bundles[h].empty()) {
        continue;
      }
      bool ok = false;
      for (const AgentId holder : {i, h}) {
        for (std::size_t pos = 0; pos < bundles[holder].size() && !ok; ++pos) {
          auto reduced = bundles[holder];
          reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(pos));
          const auto& own = holder == i ? reduced : bundles[i];
          const auto& theirs = holder == h ? reduced : bundles[h];
          ok = average_value(rounded, i, own) >= average_value(rounded, i, theirs) - tolerance;
        }
      }
      if (!ok) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::optional<Rational> approximation_ratio(std::size_t agents, std::size_t items) {
  if (agents * items == 0) {
    return std::nullopt;
  }
  Rational ratio = Rational(1) - Rational(4, static_cast<std::int64_t>(agents * items));
  if (ratio.sign() <= 0) {
    return std::nullopt;
  }
  return ratio;
}

ApproxResult dp_approx_quota(const Instance& instance, const Quota& quota,
                             const ApproxOptions& options) {
  const std::size_t n = instance.agents();
  const std::size_t m = instance.items();
  if (quota.agents() != n) {
    throw InputError("quota agent count does not match instance");
  }
  ApproxResult result;
  if (!quota.admits(m)) {
    return result;
  }

  // Returns false to stop the enumeration.
  auto examine = [&](const RemovingMatrix& matrix) -> bool {
    if (result.matrices_examined >= options.max_matrices) {
      throw ResourceLimitError("removing-matrix limit of " +
                               std::to_string(options.max_matrices) + " exceeded");
    }
    const std::size_t matrix_index = result.matrices_examined++;
    const RoundedProfile profile = round_valuations(instance, matrix);
    const Allocation pre = matrix.preallocation();

    std::vector<std::size_t> start_sizes(n, 0);
    std::vector<Rational> start_cross(n * n);
    std::vector<ItemId> open_items;
    for (ItemId g = 0; g < m; ++g) {
      const AgentId holder = pre.owner(g);
      if (holder == kUnassigned) {
        open_items.push_back(g);
        continue;
      }
      ++start_sizes[holder];
      for (AgentId i = 0; i < n; ++i) {
        start_cross[i * n + holder] += profile.value(i, g);
      }
    }
    std::vector<std::int64_t> units(open_items.size() * n);
    for (std::size_t t = 0; t < open_items.size(); ++t) {
      for (AgentId i = 0; i < n; ++i) {
        units[t * n + i] = profile.units(i, open_items[t]);
      }
    }
    DpState start{start_sizes, std::vector<std::int64_t>(n * n, 0), 0};
    const StateSearch search(std::move(start), units, &quota, options.limits);

    std::vector<Rational> tolerance(n);
    for (AgentId i = 0; i < n; ++i) {
      tolerance[i] = profile.tolerance(i);
    }
    const std::size_t last = open_items.size();
    for (std::size_t s = 0; s < search.layer_size(last); ++s) {
      const DpState state = search.state(last, s);
      if (!sizes_meet_quota(state.sizes, quota)) {
        continue;
      }
      std::vector<Rational> cross = start_cross;
      for (AgentId i = 0; i < n; ++i) {
        for (AgentId h = 0; h < n; ++h) {
          const std::int64_t k = state.cross_at(i, h);
          if (k != 0) {
            cross[i * n + h] += Rational(k) * tolerance[i];
          }
        }
      }
      auto build_allocation = [&] {
        Allocation allocation = pre;
        const auto owners = search.reconstruct(s);
        for (std::size_t t = 0; t < open_items.size(); ++t) {
          allocation.assign(open_items[t], owners[t]);
        }
        return allocation;
      };
      std::optional<Allocation> allocation;
      if (designated_removals_bound_envy(matrix, profile, state.sizes, cross)) {
        allocation = build_allocation();
      } else if (options.free_removal) {
        Allocation candidate = build_allocation();
        if (some_removal_bounds_envy(profile, candidate)) {
          allocation = std::move(candidate);
        }
      }
      if (!allocation) {
        continue;
      }
      if (options.on_accept) {
        options.on_accept(AcceptedState{matrix_index, &matrix, &profile, state.sizes, cross,
                                        *allocation});
      }
      if (!result.allocation) {
        result.allocation = std::move(*allocation);
        result.matrix = matrix;
      }
      if (!options.exhaustive) {
        return false;
      }
    }
    return true;
  };

  if (n == 1) {
    examine(RemovingMatrix(1, m));
  } else {
    for_each_removing_matrix(n, m, examine);
  }
  return result;
}

}  // namespace aef

#include <string>

#include "aef/error.hpp"
#include "aef/fairness.hpp"
#include "aef/solvers.hpp"

namespace aef {

namespace {

// n^m, saturating at UINT64_MAX.
std::uint64_t search_space(std::size_t agents, std::size_t items) {
  std::uint64_t total = 1;
  for (std::size_t g = 0; g < items; ++g) {
    if (total > UINT64_MAX / agents) {
      return UINT64_MAX;
    }
    total *= agents;
  }
  return total;
}

class Search {
 public:
  Search(const Instance& instance, const std::optional<Quota>& quota,
         const AllocationPredicate& accept)
      : n_(instance.agents()),
        m_(instance.items()),
        quota_(quota),
        accept_(accept),
        current_(std::vector<AgentId>(instance.items(), 0)),
        counts_(instance.agents(), 0) {}

  std::optional<Allocation> run() {
    if (quota_ && !quota_->admits(m_)) {
      return std::nullopt;
    }
    if (descend(0)) {
      return current_;
    }
    return std::nullopt;
  }

 private:
  // Smallest number of items still owed to agents below their lower bound.
  std::size_t deficit() const {
    std::size_t total = 0;
    for (AgentId i = 0; i < n_; ++i) {
      if (counts_[i] < quota_->lower[i]) {
        total += quota_->lower[i] - counts_[i];
      }
    }
    return total;
  }

  bool descend(ItemId item) {
    if (item == m_) {
      return accept_(current_);
    }
    for (AgentId a = 0; a < n_; ++a) {
      if (quota_ && counts_[a] >= quota_->upper[a]) {
        continue;
      }
      current_.assign(item, a);
      ++counts_[a];
      const bool feasible = !quota_ || deficit() <= m_ - item - 1;
      if (feasible && descend(item + 1)) {
        return true;
      }
      --counts_[a];
    }
    return false;
  }

  std::size_t n_;
  std::size_t m_;
  const std::optional<Quota>& quota_;
  const AllocationPredicate& accept_;
  Allocation current_;
  std::vector<std::size_t> counts_;
};

}  // namespace

std::optional<Allocation> first_allocation_where(const Instance& instance,
                                                 const std::optional<Quota>& quota,
                                                 const AllocationPredicate& accept,
                                                 BruteForceOptions options) {
  if (quota && quota->agents() != instance.agents()) {
    throw InputError("quota agent count does not match instance");
  }
  const auto space = search_space(instance.agents(), instance.items());
  if (space > options.max_allocations) {
    throw ResourceLimitError("brute force needs " +
                             (space == UINT64_MAX ? std::string("more than 2^64")
                                                  : std::to_string(space)) +
                             " allocations, cap is " + std::to_string(options.max_allocations));
  }
  return Search(instance, quota, accept).run();
}

std::optional<Allocation> brute_force_aef(const Instance& instance,
                                          const std::optional<Quota>& quota,
                                          BruteForceOptions options) {
  return first_allocation_where(
      instance, quota, [&](const Allocation& a) { return is_aef(instance, a).fair; }, options);
}

std::optional<Allocation> brute_force_aef1(const Instance& instance,
                                           const std::optional<Quota>& quota,
                                           BruteForceOptions options) {
  return first_allocation_where(
      instance, quota, [&](const Allocation& a) { return is_aef1(instance, a).fair; }, options);
}

}  // namespace aef

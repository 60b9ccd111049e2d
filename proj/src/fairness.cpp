#include "aef/fairness.hpp"

#include "aef/error.hpp"

namespace aef {

namespace {

// Bundle sizes and the cross-valuation matrix sums(i, h) = v_i(A_h), shared
// by every pairwise comparison.
class PairTable {
 public:
  PairTable(const Instance& instance, const Allocation& allocation)
      : instance_(instance), allocation_(allocation), n_(instance.agents()) {
    const auto violations = validate_allocation(instance, allocation);
    if (!violations.empty()) {
      throw InputError(violations.front());
    }
    sizes_ = allocation.bundle_sizes(n_);
    sums_.assign(n_ * n_, Rational{});
    for (ItemId g = 0; g < allocation.items(); ++g) {
      const AgentId owner = allocation.owner(g);
      for (AgentId i = 0; i < n_; ++i) {
        sums_[i * n_ + owner] += instance.value(i, g);
      }
    }
  }

  std::size_t agents() const { return n_; }

  Rational average(AgentId viewer, AgentId holder) const {
    return average_of(sums_[viewer * n_ + holder], sizes_[holder]);
  }

  // Average of `holder`'s bundle for `viewer` with `item` taken out.
  Rational average_without(AgentId viewer, AgentId holder, ItemId item) const {
    return average_of(sums_[viewer * n_ + holder] - instance_.value(viewer, item),
                      sizes_[holder] - 1);
  }

  // Calls visit(item, own_average, other_average) for each g in A_i u A_h in
  // ascending item order until visit returns true. Returns whether it did.
  // A pair with two empty bundles visits once with no item.
  template <class Visit>
  bool any_removal(AgentId i, AgentId h, Visit&& visit) const {
    if (sizes_[i] == 0 && sizes_[h] == 0) {
      return visit(std::optional<ItemId>{}, Rational{}, Rational{});
    }
    for (ItemId g = 0; g < allocation_.items(); ++g) {
      const AgentId owner = allocation_.owner(g);
      if (owner == i) {
        if (visit(std::optional<ItemId>{g}, average_without(i, i, g), average(i, h))) {
          return true;
        }
      } else if (owner == h) {
        if (visit(std::optional<ItemId>{g}, average(i, i), average_without(i, h, g))) {
          return true;
        }
      }
    }
    return false;
  }

  template <class Accept>
  bool every_pair_has_removal(Accept&& accept) const {
    for (AgentId i = 0; i < n_; ++i) {
      for (AgentId h = 0; h < n_; ++h) {
        if (i == h) {
          continue;
        }
        const bool ok = any_removal(i, h, [&](const std::optional<ItemId>&, const Rational& own,
                                              const Rational& other) {
          return accept(i, own, other);
        });
        if (!ok) {
          return false;
        }
      }
    }
    return true;
  }

 private:
  const Instance& instance_;
  const Allocation& allocation_;
  std::size_t n_;
  std::vector<std::size_t> sizes_;
  std::vector<Rational> sums_;
};

}  // namespace

AefVerdict is_aef(const Instance& instance, const Allocation& allocation) {
  const PairTable table(instance, allocation);
  for (AgentId i = 0; i < table.agents(); ++i) {
    const Rational own = table.average(i, i);
    for (AgentId h = 0; h < table.agents(); ++h) {
      if (i == h) {
        continue;
      }
      const Rational other = table.average(i, h);
      if (own < other) {
        return AefVerdict{false, EnvyWitness{i, h, std::nullopt, other - own}};
      }
    }
  }
  return AefVerdict{};
}

Aef1Verdict is_aef1(const Instance& instance, const Allocation& allocation) {
  const PairTable table(instance, allocation);
  Aef1Verdict verdict;
  for (AgentId i = 0; i < table.agents(); ++i) {
    for (AgentId h = 0; h < table.agents(); ++h) {
      if (i == h) {
        continue;
      }
      std::optional<Rational> least_envy;
      std::optional<ItemId> certificate;
      const bool ok = table.any_removal(
          i, h, [&](const std::optional<ItemId>& g, const Rational& own, const Rational& other) {
            if (own >= other) {
              certificate = g;
              return true;
            }
            const Rational envy = other - own;
            if (!least_envy || envy < *least_envy) {
              least_envy = envy;
            }
            return false;
          });
      if (!ok) {
        verdict.fair = false;
        verdict.certificates.clear();
        verdict.witness = EnvyWitness{i, h, std::nullopt, *least_envy};
        return verdict;
      }
      verdict.certificates.push_back(RemovalCertificate{i, h, certificate});
    }
  }
  return verdict;
}

bool is_eps_aef1(const Instance& instance, const Allocation& allocation, const Rational& eps) {
  if (eps.sign() < 0) {
    throw InputError("eps must be non-negative");
  }
  const PairTable table(instance, allocation);
  return table.every_pair_has_removal(
      [&](AgentId, const Rational& own, const Rational& other) { return own >= other - eps; });
}

bool is_alpha_aef1(const Instance& instance, const Allocation& allocation,
                   const Rational& alpha) {
  if (alpha.sign() <= 0 || alpha > Rational(1)) {
    throw InputError("alpha must lie in (0, 1]");
  }
  const PairTable table(instance, allocation);
  return table.every_pair_has_removal(
      [&](AgentId, const Rational& own, const Rational& other) { return own >= alpha * other; });
}

AlphaBound max_alpha(const Instance& instance, const Allocation& allocation) {
  const PairTable table(instance, allocation);
  AlphaBound bound;
  for (AgentId i = 0; i < table.agents(); ++i) {
    for (AgentId h = 0; h < table.agents(); ++h) {
      if (i == h) {
        continue;
      }
      bool unconstrained = false;
      std::optional<Rational> best;
      table.any_removal(i, h, [&](const std::optional<ItemId>&, const Rational& own,
                                  const Rational& other) {
        if (other.is_zero()) {
          unconstrained = true;
          return true;
        }
        const Rational ratio = own / other;
        if (!best || ratio > *best) {
          best = ratio;
        }
        return false;
      });
      if (unconstrained) {
        continue;
      }
      if (!bound.ratio || *best < *bound.ratio) {
        bound.ratio = *best;
      }
    }
  }
  return bound;
}

Instance normalize(const Instance& instance) {
  const Rational top = instance.max_value();
  if (top.is_zero()) {
    throw InputError("cannot normalize an all-zero instance");
  }
  std::vector<Rational> values;
  values.reserve(instance.agents() * instance.items());
  for (AgentId i = 0; i < instance.agents(); ++i) {
    for (const auto& v : instance.row(i)) {
      values.push_back(v / top);
    }
  }
  return Instance(instance.agents(), instance.items(), std::move(values), instance.item_labels());
}

}  // namespace aef

#pragma once

#include <optional>
#include <vector>

#include "aef/instance.hpp"
#include "aef/rational.hpp"

namespace aef {

/// An ordered pair (envious, envied) for which a fairness inequality fails.
/// For AEF failures `removed_item` is empty and `margin` is
/// u_i(A_h) - u_i(A_i). For AEF-1 failures every removal fails and `margin`
/// is the smallest residual envy u_i(A_h \ g) - u_i(A_i \ g) over all g.
struct EnvyWitness {
  AgentId envious = 0;
  AgentId envied = 0;
  std::optional<ItemId> removed_item;
  Rational margin;

  friend bool operator==(const EnvyWitness&, const EnvyWitness&) = default;
};

/// The removal that makes agent `envious` stop envying `envied`. Empty only
/// when both bundles are empty.
struct RemovalCertificate {
  AgentId envious = 0;
  AgentId envied = 0;
  std::optional<ItemId> removed_item;
};

struct AefVerdict {
  bool fair = true;
  std::optional<EnvyWitness> witness;

  explicit operator bool() const { return fair; }
};

struct Aef1Verdict {
  bool fair = true;
  /// One entry per ordered pair i != h, row-major, when fair.
  std::vector<RemovalCertificate> certificates;
  std::optional<EnvyWitness> witness;

  explicit operator bool() const { return fair; }
};

/// Largest alpha for which the allocation is alpha-AEF-1. Empty `ratio`
/// means every pair is unconstrained, so every alpha in (0, 1] passes.
struct AlphaBound {
  std::optional<Rational> ratio;

  bool unbounded() const { return !ratio.has_value(); }
  /// True iff alpha-AEF-1 holds at `alpha`.
  bool admits(const Rational& alpha) const { return unbounded() || alpha <= *ratio; }
};

/// u_i(A_i) >= u_i(A_h) for every ordered pair. Witnesses are reported for the
/// lexicographically smallest failing pair. Throws InputError on an
/// incomplete or malformed allocation.
AefVerdict is_aef(const Instance& instance, const Allocation& allocation);

/// For every ordered pair some g in A_i u A_h gives
/// u_i(A_i \ g) >= u_i(A_h \ g). A pair whose bundles are both empty holds
/// trivially (0 >= 0).
Aef1Verdict is_aef1(const Instance& instance, const Allocation& allocation);

/// Additive slack: u_i(A_i \ g) >= u_i(A_h \ g) - eps. Throws InputError when
/// eps < 0.
bool is_eps_aef1(const Instance& instance, const Allocation& allocation, const Rational& eps);

/// Multiplicative slack: u_i(A_i \ g) >= alpha * u_i(A_h \ g). Throws
/// InputError unless 0 < alpha <= 1.
bool is_alpha_aef1(const Instance& instance, const Allocation& allocation,
                   const Rational& alpha);

/// Per pair the best ratio over removals, with zero right-hand sides leaving
/// the pair unconstrained; the minimum over pairs. May exceed 1.
AlphaBound max_alpha(const Instance& instance, const Allocation& allocation);

/// Every value divided by the largest value in the profile. Throws InputError
/// for an all-zero instance.
Instance normalize(const Instance& instance);

}  // namespace aef

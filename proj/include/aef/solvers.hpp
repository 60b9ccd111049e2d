#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "aef/instance.hpp"
#include "aef/rational.hpp"
#include "aef/removing_matrix.hpp"
#include "aef/rounding.hpp"
#include "aef/state_search.hpp"

namespace aef {

/// Round-robin picking that always yields an AEF-1 allocation. With m <= n,
/// agents 0..m-1 each take their favourite remaining item; otherwise agents
/// 0..n-2 each take one and agent n-1 receives the rest. Ties go to the
/// lowest item index.
Allocation solve_aef1_picking(const Instance& instance);

struct BruteForceOptions {
  /// Refuse to search when n^m exceeds this.
  std::uint64_t max_allocations = 10'000'000;
};

using AllocationPredicate = std::function<bool(const Allocation&)>;

/// Lexicographically first owner vector (item 0 most significant) that
/// satisfies `quota` (when given) and `accept`. Throws ResourceLimitError
/// when n^m exceeds the cap.
std::optional<Allocation> first_allocation_where(const Instance& instance,
                                                 const std::optional<Quota>& quota,
                                                 const AllocationPredicate& accept,
                                                 BruteForceOptions options = {});

std::optional<Allocation> brute_force_aef(const Instance& instance,
                                          const std::optional<Quota>& quota = std::nullopt,
                                          BruteForceOptions options = {});

std::optional<Allocation> brute_force_aef1(const Instance& instance,
                                           const std::optional<Quota>& quota = std::nullopt,
                                           BruteForceOptions options = {});

/// Decides AEF-1 from a final binary-DP state. For each ordered pair the
/// candidate comparisons are: no removal, and removing a 0- or 1-valued item
/// from either bundle when the counts say one exists. Throws InputError when
/// state.allocated != items.
bool check_state_aef1_binary(const DpState& state, const Quota& quota, std::size_t items);

/// Exact dynamic program for binary valuations: an AEF-1 allocation meeting
/// the quota, or nullopt when none exists. Throws InputError on a non-binary
/// instance or a quota for the wrong number of agents.
std::optional<Allocation> dp_binary_quota(const Instance& instance, const Quota& quota,
                                          SearchLimits limits = {});

/// A final state that passed the bounded-envy check of the approximate DP.
struct AcceptedState {
  std::size_t matrix_index = 0;
  const RemovingMatrix* matrix = nullptr;
  const RoundedProfile* profile = nullptr;
  std::vector<std::size_t> sizes;
  /// H(i, h) = v^R_i(A_h), row-major.
  std::vector<Rational> cross;
  Allocation allocation;
};

struct ApproxOptions {
  SearchLimits limits;
  std::size_t max_matrices = 1'000'000;
  /// Also accept a state when some free choice of removal (not only the
  /// matrix's designated item) bounds the envy. Checked on the reconstructed
  /// allocation, so it depends on which predecessor was recorded.
  bool free_removal = false;
  /// Called for every accepted state.
  std::function<void(const AcceptedState&)> on_accept;
  /// Keep scanning after the first hit so `on_accept` sees every accepted
  /// state. The returned allocation is still the first hit.
  bool exhaustive = false;
};

struct ApproxResult {
  std::optional<Allocation> allocation;
  std::optional<RemovingMatrix> matrix;
  std::size_t matrices_examined = 0;

  bool found() const { return allocation.has_value(); }
};

/// 1 - 4/(mn), or nullopt when that is not positive (the guarantee is then
/// vacuous).
std::optional<Rational> approximation_ratio(std::size_t agents, std::size_t items);

/// Approximate dynamic program over removing matrices with per-agent value
/// rounding. NO implies no AEF-1 allocation meets the quota; a returned
/// allocation meets the quota and is (1 - 4/(mn))-AEF-1.
ApproxResult dp_approx_quota(const Instance& instance, const Quota& quota,
                             const ApproxOptions& options = {});

}  // namespace aef

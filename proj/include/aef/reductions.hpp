#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "aef/instance.hpp"
#include "aef/rational.hpp"

namespace aef {

/// Parameters of a generated hardness gadget.
struct GadgetInfo {
  std::string kind;
  /// |X| for the partition gadget, |X| / 2 for the equal-cardinality one,
  /// the original item count for the EF embedding.
  std::size_t k = 0;
  /// T = sum(X) / 2. Not an integer when sum(X) is odd.
  Rational target;
  /// T' = T + k^3 T^2 (equal-cardinality gadget only).
  std::optional<Rational> shifted_target;
  bool sum_even = true;
  /// k >= 4 and T >= 4, the standing assumptions of the hardness arguments.
  bool valid_assumptions = true;
};

struct Gadget {
  Instance instance;
  std::optional<Quota> quota;
  GadgetInfo info;
};

/// Two agents with identical values over 2k items ordered
/// g^s_1, g^l_1, g^s_2, g^l_2, ... where v(g^s_i) = (T^2 k^2)^i and
/// v(g^l_i) = (T^2 k^2)^i + x_i. An AEF allocation exists iff X has an
/// equal-sum bipartition. Throws InputError on an empty X or a
/// non-positive element.
Gadget gen_from_partition(std::span<const std::int64_t> xs);

/// Agent 0 takes g^l_i for every i with in_first[i], g^s_i otherwise; agent 1
/// the rest.
Allocation partition_gadget_allocation(std::span<const bool> in_first);

/// Pads a binary instance with (n-1)m zero-valued dummy items and requires
/// every agent to receive exactly m items. Throws InputError when the input
/// is not binary.
Gadget gen_ef_embedding(const Instance& ef_instance);

/// Three agents with identical values over 3k + 6 items: M1 = g_1..g_2k with
/// v(g_j) = x_j + k^2 T^2, M2 = k + 1 copies of b with
/// v(b) = (k + 2) T' / (k + 1)^2, M3 = five zero items. Quota exact k + 2.
/// Agents beyond the third value everything at 0 and must receive nothing.
/// Throws InputError on odd |X|, empty X or agents < 3.
Gadget gen_from_eqcard_partition(std::span<const std::int64_t> xs, std::size_t agents = 3);

/// The forward construction: A_0 = {g_j : in_first[j]} plus two zero items,
/// A_1 = the other g_j plus two zero items, A_2 = M2 plus one zero item.
Allocation eqcard_gadget_allocation(std::span<const bool> in_first);

struct BinaryModel {
  Rational probability;
};
struct UniformIntModel {
  std::int64_t low = 0;
  std::int64_t high = 0;
};
/// p/q with q uniform in [1, max_denominator] and p uniform in [0, q].
struct UniformRationalModel {
  std::int64_t max_denominator = 1;
};
using ValueModel = std::variant<BinaryModel, UniformIntModel, UniformRationalModel>;

/// Parses "binary(p)", "uniform_int(lo,hi)" and "uniform_rational(den)".
/// Throws InputError otherwise.
ValueModel parse_value_model(std::string_view text);
std::string to_string(const ValueModel& model);

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). Rejection sampling, so the stream is the
/// same on every standard library.
std::uint64_t draw_below(Rng& rng, std::uint64_t bound);

/// Deterministic for a fixed seed. Throws InputError on zero agents or
/// invalid model parameters.
Instance gen_random(std::size_t agents, std::size_t items, const ValueModel& model,
                    std::uint64_t seed);

/// Random quota with sum(lower) <= items <= sum(upper).
Quota random_feasible_quota(std::size_t agents, std::size_t items, Rng& rng);

}  // namespace aef

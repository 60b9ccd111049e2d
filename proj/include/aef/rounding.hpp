#pragma once

#include <cstdint>
#include <vector>

#include "aef/instance.hpp"
#include "aef/rational.hpp"
#include "aef/removing_matrix.hpp"

namespace aef {

/// Per-agent rounded valuation for one removing matrix.
///
/// For agent i, M'_i is every item i does not remove in any comparison and
/// a_i = max over M'_i of v_i. A positive value in ((k-1)a_i/r, k a_i/r] is
/// snapped up to k a_i/r; zeros stay zero; items of M^R_i keep their exact
/// value. When a_i = 0 the agent's row is left untouched and its tolerance
/// a_i/r is 0.
class RoundedProfile {
 public:
  std::size_t agents() const { return agents_; }
  std::size_t items() const { return items_; }
  /// r = m^2 n^2.
  std::int64_t scale() const { return scale_; }
  const Rational& upper(AgentId i) const { return upper_.at(i); }
  /// a_i / r, or 0 when a_i = 0.
  Rational tolerance(AgentId i) const;
  const Rational& value(AgentId i, ItemId g) const { return values_.at(i * items_ + g); }
  bool is_removing(AgentId i, ItemId g) const { return removing_.at(i * items_ + g); }
  /// Multiple of a_i / r for g in M'_i; 0 when a_i = 0. Undefined on M^R_i.
  std::int64_t units(AgentId i, ItemId g) const { return units_.at(i * items_ + g); }
  /// Rounded values as an instance, for running the checkers under v^R.
  Instance as_instance() const;

 private:
  friend RoundedProfile round_valuations(const Instance&, const RemovingMatrix&);

  std::size_t agents_ = 0;
  std::size_t items_ = 0;
  std::int64_t scale_ = 0;
  std::vector<Rational> upper_;
  std::vector<Rational> values_;
  std::vector<bool> removing_;
  std::vector<std::int64_t> units_;
};

/// Throws InputError when the matrix is invalid or shaped for a different
/// instance.
RoundedProfile round_valuations(const Instance& instance, const RemovingMatrix& matrix);

/// Smallest k a / r that is >= value, for value in [0, a]; 0 maps to 0.
Rational round_up_to_grid(const Rational& value, const Rational& upper, std::int64_t scale);

}  // namespace aef

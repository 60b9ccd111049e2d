#include "aef/rounding.hpp"

#include "aef/error.hpp"

namespace aef {

Rational round_up_to_grid(const Rational& value, const Rational& upper, std::int64_t scale) {
  if (value.is_zero() || upper.is_zero()) {
    return value;
  }
  const Rational step = upper / Rational(scale);
  const mpz_class k = (value / step).ceil();
  return Rational(k) * step;
}

Rational RoundedProfile::tolerance(AgentId i) const {
  if (upper_.at(i).is_zero()) {
    return Rational{};
  }
  return upper_[i] / Rational(scale_);
}

Instance RoundedProfile::as_instance() const {
  return Instance(agents_, items_, values_);
}

RoundedProfile round_valuations(const Instance& instance, const RemovingMatrix& matrix) {
  if (matrix.agents() != instance.agents() || matrix.items() != instance.items()) {
    throw InputError("removing matrix shape does not match instance");
  }
  if (!matrix.is_valid()) {
    throw InputError("removing matrix assigns an item to two holders");
  }
  const std::size_t n = instance.agents();
  const std::size_t m = instance.items();

  RoundedProfile p;
  p.agents_ = n;
  p.items_ = m;
  p.scale_ = static_cast<std::int64_t>(m * m * n * n);
  p.upper_.assign(n, Rational{});
  p.values_.reserve(n * m);
  p.removing_.assign(n * m, false);
  p.units_.assign(n * m, 0);

  for (AgentId i = 0; i < n; ++i) {
    const auto removing = matrix.removing_items(i);
    for (ItemId g = 0; g < m; ++g) {
      p.removing_[i * m + g] = removing[g];
      if (!removing[g] && instance.value(i, g) > p.upper_[i]) {
        p.upper_[i] = instance.value(i, g);
      }
    }
    const Rational& a = p.upper_[i];
    for (ItemId g = 0; g < m; ++g) {
      const Rational& v = instance.value(i, g);
      if (removing[g] || a.is_zero()) {
        p.values_.push_back(v);
        continue;
      }
      Rational rounded = round_up_to_grid(v, a, p.scale_);
      const Rational k = rounded * Rational(p.scale_) / a;
      p.units_[i * m + g] = k.numerator().get_si();
      p.values_.push_back(std::move(rounded));
    }
  }
  return p;
}

}  // namespace aef

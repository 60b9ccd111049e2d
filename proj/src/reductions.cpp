#include "aef/reductions.hpp"

#include "aef/error.hpp"

namespace aef {

namespace {

Rational half_sum(std::span<const std::int64_t> xs) {
  std::int64_t total = 0;
  for (const auto x : xs) {
    if (x <= 0) {
      throw InputError("partition elements must be positive integers");
    }
    total += x;
  }
  return Rational(total, 2);
}

bool sum_is_even(std::span<const std::int64_t> xs) {
  std::int64_t total = 0;
  for (const auto x : xs) {
    total += x;
  }
  return total % 2 == 0;
}

Rational power(const Rational& base, std::size_t exponent) {
  Rational out(1);
  for (std::size_t e = 0; e < exponent; ++e) {
    out *= base;
  }
  return out;
}

}  // namespace

Gadget gen_from_partition(std::span<const std::int64_t> xs) {
  if (xs.empty()) {
    throw InputError("partition input must not be empty");
  }
  const std::size_t k = xs.size();
  const Rational t = half_sum(xs);
  const Rational kk(static_cast<std::int64_t>(k));
  const Rational base = t * t * kk * kk;

  std::vector<Rational> row;
  std::vector<std::string> labels;
  row.reserve(2 * k);
  for (std::size_t i = 1; i <= k; ++i) {
    const Rational small = power(base, i);
    row.push_back(small);
    row.push_back(small + Rational(xs[i - 1]));
    labels.push_back("gs" + std::to_string(i));
    labels.push_back("gl" + std::to_string(i));
  }
  GadgetInfo info;
  info.kind = "partition";
  info.k = k;
  info.target = t;
  info.sum_even = sum_is_even(xs);
  info.valid_assumptions = k >= 4 && t >= Rational(4);
  return Gadget{Instance::from_rows({row, row}, std::move(labels)), std::nullopt, info};
}

Allocation partition_gadget_allocation(std::span<const bool> in_first) {
  std::vector<AgentId> owner;
  owner.reserve(2 * in_first.size());
  for (const bool first : in_first) {
    // Item order per index: g^s then g^l.
    owner.push_back(first ? 1 : 0);
    owner.push_back(first ? 0 : 1);
  }
  return Allocation(std::move(owner));
}

Gadget gen_ef_embedding(const Instance& ef_instance) {
  if (!ef_instance.is_binary()) {
    throw InputError("EF embedding requires a binary instance");
  }
  const std::size_t n = ef_instance.agents();
  const std::size_t m = ef_instance.items();
  const std::size_t dummies = (n - 1) * m;

  std::vector<std::vector<Rational>> rows;
  for (AgentId i = 0; i < n; ++i) {
    const auto original = ef_instance.row(i);
    std::vector<Rational> row(original.begin(), original.end());
    row.resize(m + dummies);
    rows.push_back(std::move(row));
  }
  std::vector<std::string> labels;
  if (!ef_instance.item_labels().empty()) {
    labels = ef_instance.item_labels();
  } else {
    for (ItemId g = 0; g < m; ++g) {
      labels.push_back("g" + std::to_string(g + 1));
    }
  }
  for (std::size_t d = 0; d < dummies; ++d) {
    labels.push_back("d" + std::to_string(d + 1));
  }
  GadgetInfo info;
  info.kind = "ef-embedding";
  info.k = m;
  return Gadget{Instance::from_rows(rows, std::move(labels)), Quota::exact(n, m), info};
}

Gadget gen_from_eqcard_partition(std::span<const std::int64_t> xs, std::size_t agents) {
  if (xs.empty() || xs.size() % 2 != 0) {
    throw InputError("equal-cardinality partition needs a non-empty multiset of even size");
  }
  if (agents < 3) {
    throw InputError("equal-cardinality gadget needs at least three agents");
  }
  const std::size_t k = xs.size() / 2;
  const Rational t = half_sum(xs);
  const Rational kk(static_cast<std::int64_t>(k));
  const Rational shift = kk * kk * t * t;
  const Rational t_prime = t + kk * kk * kk * t * t;
  const Rational b = (kk + Rational(2)) * t_prime / ((kk + Rational(1)) * (kk + Rational(1)));

  std::vector<Rational> row;
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    row.push_back(Rational(xs[j]) + shift);
    labels.push_back("g" + std::to_string(j + 1));
  }
  for (std::size_t c = 0; c <= k; ++c) {
    row.push_back(b);
    labels.push_back("b" + std::to_string(c + 1));
  }
  for (std::size_t z = 0; z < 5; ++z) {
    row.push_back(Rational{});
    labels.push_back("z" + std::to_string(z + 1));
  }
  std::vector<std::vector<Rational>> rows(3, row);
  rows.resize(agents, std::vector<Rational>(row.size()));

  std::vector<std::size_t> sizes(agents, 0);
  sizes[0] = sizes[1] = sizes[2] = k + 2;

  GadgetInfo info;
  info.kind = "eqcard";
  info.k = k;
  info.target = t;
  info.shifted_target = t_prime;
  info.sum_even = sum_is_even(xs);
  info.valid_assumptions = k >= 4 && t >= Rational(4);
  return Gadget{Instance::from_rows(rows, std::move(labels)), Quota::exact(std::move(sizes)),
                info};
}

Allocation eqcard_gadget_allocation(std::span<const bool> in_first) {
  const std::size_t k = in_first.size() / 2;
  std::vector<AgentId> owner;
  for (const bool first : in_first) {
    owner.push_back(first ? 0 : 1);
  }
  for (std::size_t c = 0; c <= k; ++c) {
    owner.push_back(2);
  }
  for (const AgentId z : {0, 0, 1, 1, 2}) {
    owner.push_back(z);
  }
  return Allocation(std::move(owner));
}

}  // namespace aef

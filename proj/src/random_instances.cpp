#include <regex>

#include "aef/error.hpp"
#include "aef/reductions.hpp"

namespace aef {

std::uint64_t draw_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) {
    throw InputError("empty sampling range");
  }
  // Largest multiple of bound that fits in the generator's range.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  std::uint64_t x = rng();
  while (x > limit) {
    x = rng();
  }
  return x % bound;
}

namespace {

void validate(const ValueModel& model) {
  if (const auto* b = std::get_if<BinaryModel>(&model)) {
    if (b->probability.sign() < 0 || b->probability > Rational(1)) {
      throw InputError("binary probability must lie in [0, 1]");
    }
  } else if (const auto* u = std::get_if<UniformIntModel>(&model)) {
    if (u->low < 0 || u->low > u->high) {
      throw InputError("uniform_int needs 0 <= lo <= hi");
    }
  } else if (const auto* r = std::get_if<UniformRationalModel>(&model)) {
    if (r->max_denominator < 1) {
      throw InputError("uniform_rational needs a denominator bound >= 1");
    }
  }
}

Rational draw_value(Rng& rng, const ValueModel& model) {
  if (const auto* b = std::get_if<BinaryModel>(&model)) {
    const auto den = b->probability.denominator().get_ui();
    const auto num = b->probability.numerator().get_ui();
    return Rational(draw_below(rng, den) < num ? 1 : 0);
  }
  if (const auto* u = std::get_if<UniformIntModel>(&model)) {
    const auto span = static_cast<std::uint64_t>(u->high - u->low) + 1;
    return Rational(u->low + static_cast<std::int64_t>(draw_below(rng, span)));
  }
  const auto& r = std::get<UniformRationalModel>(model);
  const auto q = 1 + static_cast<std::int64_t>(draw_below(rng, r.max_denominator));
  const auto p = static_cast<std::int64_t>(draw_below(rng, static_cast<std::uint64_t>(q) + 1));
  return Rational(p, q);
}

}  // namespace

ValueModel parse_value_model(std::string_view text) {
  static const std::regex binary(R"(binary\(\s*([0-9]+(?:/[0-9]+)?)\s*\))");
  static const std::regex uniform_int(R"(uniform_int\(\s*(-?[0-9]+)\s*,\s*(-?[0-9]+)\s*\))");
  static const std::regex uniform_rational(R"(uniform_rational\(\s*([0-9]+)\s*\))");
  const std::string s(text);
  std::smatch match;
  ValueModel model;
  if (std::regex_match(s, match, binary)) {
    model = BinaryModel{Rational::parse(match[1].str())};
  } else if (std::regex_match(s, match, uniform_int)) {
    model = UniformIntModel{std::stoll(match[1].str()), std::stoll(match[2].str())};
  } else if (std::regex_match(s, match, uniform_rational)) {
    model = UniformRationalModel{std::stoll(match[1].str())};
  } else {
    throw InputError("unknown value model '" + s + "'");
  }
  validate(model);
  return model;
}

std::string to_string(const ValueModel& model) {
  if (const auto* b = std::get_if<BinaryModel>(&model)) {
    return "binary(" + b->probability.str() + ")";
  }
  if (const auto* u = std::get_if<UniformIntModel>(&model)) {
    return "uniform_int(" + std::to_string(u->low) + "," + std::to_string(u->high) + ")";
  }
  return "uniform_rational(" +
         std::to_string(std::get<UniformRationalModel>(model).max_denominator) + ")";
}

Instance gen_random(std::size_t agents, std::size_t items, const ValueModel& model,
                    std::uint64_t seed) {
  if (agents == 0) {
    throw InputError("need at least one agent");
  }
  validate(model);
  Rng rng(seed);
  std::vector<Rational> values;
  values.reserve(agents * items);
  for (std::size_t k = 0; k < agents * items; ++k) {
    values.push_back(draw_value(rng, model));
  }
  return Instance(agents, items, std::move(values));
}

Quota random_feasible_quota(std::size_t agents, std::size_t items, Rng& rng) {
  std::vector<std::size_t> sizes(agents, 0);
  for (std::size_t g = 0; g < items; ++g) {
    ++sizes[draw_below(rng, agents)];
  }
  if (draw_below(rng, 3) == 0) {
    return Quota::exact(std::move(sizes));
  }
  std::vector<std::size_t> lower(agents);
  std::vector<std::size_t> upper(agents);
  for (AgentId i = 0; i < agents; ++i) {
    lower[i] = sizes[i] - draw_below(rng, sizes[i] + 1);
    upper[i] = sizes[i] + draw_below(rng, items - sizes[i] + 1);
  }
  return Quota(std::move(lower), std::move(upper));
}

}  // namespace aef

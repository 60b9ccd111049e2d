#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "aef/fairness.hpp"
#include "aef/instance.hpp"
#include "aef/rational.hpp"
#include "aef/reductions.hpp"

namespace aef::io {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON integers; everything else becomes
/// a canonical "p/q" (or "p") string.
Json rational_to_json(const Rational& value);
/// Accepts a JSON integer or a "p" / "p/q" string. `where` names the field in
/// diagnostics, e.g. "zero denominator at values[0][2]".
Rational rational_from_json(const Json& value, const std::string& where);

struct InstanceDocument {
  Instance instance;
  std::optional<Quota> quota;
  std::optional<GadgetInfo> gadget;
};

/// Fields, in order: agents, items (count or label list), values, then the
/// optional quota {lower, upper} and gadget metadata blocks.
Json instance_to_json(const Instance& instance, const std::optional<Quota>& quota = std::nullopt,
                      const std::optional<GadgetInfo>& gadget = std::nullopt);
/// Throws InputError naming the offending field.
InstanceDocument instance_from_json(const Json& doc);

Json gadget_to_json(const GadgetInfo& info);

/// {"owner": [...]}, 0-based agent indices.
Json allocation_to_json(const Allocation& allocation);
/// Throws InputError on a missing or malformed owner array.
Allocation allocation_from_json(const Json& doc);

Json witness_to_json(const EnvyWitness& witness, const std::string& notion);
Json alpha_bound_to_json(const AlphaBound& bound);

/// Throws InputError when the file is missing or not valid JSON.
Json read_json_file(const std::filesystem::path& path);
/// Canonical text: two-space indentation and a trailing newline.
std::string dump(const Json& doc);

}  // namespace aef::io

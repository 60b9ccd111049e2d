#include "aef/io.hpp"

#include <fstream>

#include "aef/error.hpp"

namespace aef::io {

Json rational_to_json(const Rational& value) {
  if (value.is_integer() && value.numerator().fits_slong_p()) {
    return Json(static_cast<std::int64_t>(value.numerator().get_si()));
  }
  return Json(value.str());
}

Rational rational_from_json(const Json& value, const std::string& where) {
  if (value.is_number_integer()) {
    return Rational::parse(value.dump());
  }
  if (value.is_string()) {
    try {
      return Rational::parse(value.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(std::string(e.what()) + " at " + where);
    }
  }
  throw InputError("expected an integer or \"p/q\" string at " + where);
}

namespace {

const Json& require(const Json& doc, const char* field) {
  if (!doc.is_object() || !doc.contains(field)) {
    throw InputError(std::string("missing field '") + field + "'");
  }
  return doc.at(field);
}

std::size_t as_count(const Json& value, const std::string& where) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
    throw InputError("expected a non-negative integer at " + where);
  }
  return static_cast<std::size_t>(value.get<std::int64_t>());
}

std::vector<std::size_t> count_array(const Json& value, const std::string& where) {
  if (!value.is_array()) {
    throw InputError("expected an array at " + where);
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(as_count(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

Json gadget_to_json(const GadgetInfo& info) {
  Json doc;
  doc["kind"] = info.kind;
  doc["k"] = info.k;
  if (info.kind != "ef-embedding") {
    doc["T"] = rational_to_json(info.target);
    if (info.shifted_target) {
      doc["T_prime"] = rational_to_json(*info.shifted_target);
    }
    doc["sum_even"] = info.sum_even;
    doc["valid_assumptions"] = info.valid_assumptions;
  }
  return doc;
}

namespace {

GadgetInfo gadget_from_json(const Json& doc) {
  GadgetInfo info;
  info.kind = require(doc, "kind").get<std::string>();
  info.k = as_count(require(doc, "k"), "gadget.k");
  if (doc.contains("T")) {
    info.target = rational_from_json(doc.at("T"), "gadget.T");
  }
  if (doc.contains("T_prime")) {
    info.shifted_target = rational_from_json(doc.at("T_prime"), "gadget.T_prime");
  }
  info.sum_even = doc.value("sum_even", true);
  info.valid_assumptions = doc.value("valid_assumptions", true);
  return info;
}

}  // namespace

Json instance_to_json(const Instance& instance, const std::optional<Quota>& quota,
                      const std::optional<GadgetInfo>& gadget) {
  Json doc;
  doc["agents"] = instance.agents();
  if (instance.item_labels().empty()) {
    doc["items"] = instance.items();
  } else {
    doc["items"] = instance.item_labels();
  }
  Json rows = Json::array();
  for (AgentId i = 0; i < instance.agents(); ++i) {
    Json row = Json::array();
    for (const auto& v : instance.row(i)) {
      row.push_back(rational_to_json(v));
    }
    rows.push_back(std::move(row));
  }
  doc["values"] = std::move(rows);
  if (quota) {
    doc["quota"] = Json{{"lower", quota->lower}, {"upper", quota->upper}};
  }
  if (gadget) {
    doc["gadget"] = gadget_to_json(*gadget);
  }
  return doc;
}

InstanceDocument instance_from_json(const Json& doc) {
  const std::size_t n = as_count(require(doc, "agents"), "agents");
  if (n == 0) {
    throw InputError("agents must be at least 1");
  }
  const Json& items = require(doc, "items");
  std::size_t m = 0;
  std::vector<std::string> labels;
  if (items.is_array()) {
    for (std::size_t g = 0; g < items.size(); ++g) {
      if (!items[g].is_string()) {
        throw InputError("expected a label string at items[" + std::to_string(g) + "]");
      }
      labels.push_back(items[g].get<std::string>());
    }
    m = labels.size();
  } else {
    m = as_count(items, "items");
  }

  const Json& values = require(doc, "values");
  if (!values.is_array() || values.size() != n) {
    throw InputError("values must have " + std::to_string(n) + " rows");
  }
  std::vector<Rational> flat;
  flat.reserve(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_name = "values[" + std::to_string(i) + "]";
    if (!values[i].is_array() || values[i].size() != m) {
      throw InputError(row_name + " must have " + std::to_string(m) + " entries");
    }
    for (std::size_t g = 0; g < m; ++g) {
      const std::string where = row_name + "[" + std::to_string(g) + "]";
      Rational v = rational_from_json(values[i][g], where);
      if (v.sign() < 0) {
        throw InputError("negative value at " + where);
      }
      flat.push_back(std::move(v));
    }
  }

  std::optional<Quota> quota;
  if (doc.contains("quota")) {
    const Json& q = doc.at("quota");
    auto lower = count_array(require(q, "lower"), "quota.lower");
    auto upper = count_array(require(q, "upper"), "quota.upper");
    if (lower.size() != n || upper.size() != n) {
      throw InputError("quota.lower and quota.upper must have " + std::to_string(n) + " entries");
    }
    quota = Quota(std::move(lower), std::move(upper));
  }
  std::optional<GadgetInfo> gadget;
  if (doc.contains("gadget")) {
    gadget = gadget_from_json(doc.at("gadget"));
  }
  return InstanceDocument{Instance(n, m, std::move(flat), std::move(labels)), std::move(quota),
                          std::move(gadget)};
}

Json allocation_to_json(const Allocation& allocation) {
  Json doc;
  doc["owner"] = allocation.owners();
  return doc;
}

Allocation allocation_from_json(const Json& doc) {
  const Json& owner = require(doc, "owner");
  if (!owner.is_array()) {
    throw InputError("expected an array at owner");
  }
  std::vector<AgentId> out;
  for (std::size_t g = 0; g < owner.size(); ++g) {
    out.push_back(as_count(owner[g], "owner[" + std::to_string(g) + "]"));
  }
  return Allocation(std::move(out));
}

Json witness_to_json(const EnvyWitness& witness, const std::string& notion) {
  Json doc;
  doc["notion"] = notion;
  doc["envious"] = witness.envious;
  doc["envied"] = witness.envied;
  if (witness.removed_item) {
    doc["removed_item"] = *witness.removed_item;
  }
  doc["margin"] = witness.margin.str();
  return doc;
}

Json alpha_bound_to_json(const AlphaBound& bound) {
  return bound.unbounded() ? Json("unbounded") : Json(bound.ratio->str());
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open " + path.string());
  }
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("invalid JSON in " + path.string() + ": " + e.what());
  }
}

std::string dump(const Json& doc) {
  return doc.dump(2) + "\n";
}

}  // namespace aef::io

#include "aef/cli.hpp"

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "aef/error.hpp"
#include "aef/fairness.hpp"
#include "aef/io.hpp"
#include "aef/reductions.hpp"
#include "aef/solvers.hpp"

namespace aef::cli {

namespace {

using io::Json;

void emit(const Json& doc, const std::optional<std::filesystem::path>& output, std::ostream& out,
          bool one_line = false) {
  const std::string text = one_line ? doc.dump() + "\n" : io::dump(doc);
  if (!output) {
    out << text;
    return;
  }
  std::ofstream file(*output);
  if (!file) {
    throw InputError("cannot write " + output->string());
  }
  file << text;
}

// Runs `body`, translating exceptions into exit codes.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
}

Json fairness_verdicts(const Instance& instance, const Allocation& allocation) {
  Json verdicts;
  const AefVerdict aef = is_aef(instance, allocation);
  const Aef1Verdict aef1 = is_aef1(instance, allocation);
  verdicts["aef"] = aef.fair;
  verdicts["aef1"] = aef1.fair;
  verdicts["max_alpha"] = io::alpha_bound_to_json(max_alpha(instance, allocation));
  Json witnesses = Json::array();
  if (aef.witness) {
    witnesses.push_back(io::witness_to_json(*aef.witness, "aef"));
  }
  if (aef1.witness) {
    witnesses.push_back(io::witness_to_json(*aef1.witness, "aef1"));
  }
  verdicts["witnesses"] = std::move(witnesses);
  return verdicts;
}

std::vector<std::int64_t> parse_partition_input(const std::string& input) {
  std::string text = input;
  if (text.rfind("X=", 0) == 0) {
    text = text.substr(2);
  }
  Json doc;
  if (!text.empty() && text.front() == '[') {
    try {
      doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error&) {
      throw InputError("malformed partition input '" + input + "'");
    }
  } else {
    doc = io::read_json_file(text);
    if (doc.is_object() && doc.contains("X")) {
      doc = doc.at("X");
    }
  }
  if (!doc.is_array()) {
    throw InputError("partition input must be an array of positive integers");
  }
  std::vector<std::int64_t> xs;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    if (!doc[i].is_number_integer() || doc[i].get<std::int64_t>() <= 0) {
      throw InputError("expected a positive integer at X[" + std::to_string(i) + "]");
    }
    xs.push_back(doc[i].get<std::int64_t>());
  }
  return xs;
}

}  // namespace

int cmd_check(const CheckOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto doc = io::instance_from_json(io::read_json_file(options.instance));
    const Allocation allocation = io::allocation_from_json(io::read_json_file(options.allocation));
    const auto violations = validate_allocation(doc.instance, allocation);
    if (!violations.empty()) {
      throw InputError("allocation: " + violations.front());
    }

    Json verdicts = fairness_verdicts(doc.instance, allocation);
    bool pass = true;
    if (options.alpha) {
      const bool ok = is_alpha_aef1(doc.instance, allocation, *options.alpha);
      verdicts["alpha"] = Json{{"value", options.alpha->str()}, {"pass", ok}};
      pass = pass && ok;
    }
    if (options.eps) {
      const bool ok = is_eps_aef1(doc.instance, allocation, *options.eps);
      verdicts["eps"] = Json{{"value", options.eps->str()}, {"pass", ok}};
      pass = pass && ok;
    }
    if (!options.alpha && !options.eps) {
      pass = verdicts["aef1"].get<bool>();
    }
    if (doc.quota) {
      verdicts["quota"] = satisfies_quota(allocation, *doc.quota).satisfied;
    }

    Json result = io::allocation_to_json(allocation);
    result["verdicts"] = std::move(verdicts);
    emit(result, options.output, out);
    return pass ? kOk : kCheckFailed;
  });
}

int cmd_solve(const SolveOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const auto doc = io::instance_from_json(io::read_json_file(options.instance));
    const Instance& instance = doc.instance;
    std::optional<Quota> quota;
    if (options.quota_from_file) {
      if (!doc.quota) {
        throw InputError("instance file has no quota block");
      }
      quota = doc.quota;
    }
    const std::string& algorithm = options.algorithm;
    const bool needs_quota = algorithm == "dp-binary" || algorithm == "dp-approx";
    if (needs_quota && !quota) {
      throw InputError(algorithm + " requires a quota (pass --quota-from-file)");
    }

    const BruteForceOptions brute{options.max_allocations};
    SearchLimits limits;
    limits.max_states = options.max_states;

    std::optional<Allocation> allocation;
    std::optional<Rational> guarantee;
    if (algorithm == "picking") {
      allocation = solve_aef1_picking(instance);
    } else if (algorithm == "brute-aef") {
      allocation = brute_force_aef(instance, quota, brute);
    } else if (algorithm == "brute-aef1") {
      allocation = brute_force_aef1(instance, quota, brute);
    } else if (algorithm == "dp-binary") {
      allocation = dp_binary_quota(instance, *quota, limits);
    } else if (algorithm == "dp-approx") {
      ApproxOptions approx;
      approx.limits = limits;
      approx.max_matrices = options.max_matrices;
      allocation = dp_approx_quota(instance, *quota, approx).allocation;
      guarantee = approximation_ratio(instance.agents(), instance.items());
    } else {
      throw InputError("unknown algorithm '" + algorithm + "'");
    }

    if (!allocation) {
      emit(Json{{"algorithm", algorithm}, {"verdict", "NO"}}, options.output, out, true);
      return kAnsweredNo;
    }

    Json verdicts = fairness_verdicts(instance, *allocation);
    bool confirmed = true;
    if (quota) {
      const bool ok = satisfies_quota(*allocation, *quota).satisfied;
      verdicts["quota"] = ok;
      confirmed = ok;
    }
    if (algorithm == "brute-aef") {
      confirmed = confirmed && verdicts["aef"].get<bool>();
    } else if (algorithm == "dp-approx") {
      if (guarantee) {
        verdicts["alpha_guarantee"] = guarantee->str();
        confirmed = confirmed && is_alpha_aef1(instance, *allocation, *guarantee);
      } else {
        verdicts["alpha_guarantee"] = "vacuous";
      }
    } else {
      confirmed = confirmed && verdicts["aef1"].get<bool>();
    }
    verdicts["confirmed"] = confirmed;

    Json result;
    result["algorithm"] = algorithm;
    result["owner"] = allocation->owners();
    result["verdicts"] = std::move(verdicts);
    emit(result, options.output, out);
    if (!confirmed) {
      err << "solver output failed re-verification\n";
      return kCheckFailed;
    }
    return kOk;
  });
}

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!options.random.empty()) {
      if (options.random.size() != 4) {
        throw InputError("--random takes: agents items model seed");
      }
      std::size_t n = 0;
      std::size_t m = 0;
      std::uint64_t seed = 0;
      try {
        n = std::stoul(options.random[0]);
        m = std::stoul(options.random[1]);
        seed = std::stoull(options.random[3]);
      } catch (const std::logic_error&) {
        throw InputError("--random expects integer agents, items and seed");
      }
      const ValueModel model = parse_value_model(options.random[2]);
      emit(io::instance_to_json(gen_random(n, m, model, seed)), options.output, out);
      return kOk;
    }
    if (options.gadget.empty()) {
      throw InputError("pass --gadget or --random");
    }
    if (options.input.empty()) {
      throw InputError("--gadget needs --input");
    }
    std::optional<Gadget> gadget;
    if (options.gadget == "partition") {
      gadget.emplace(gen_from_partition(parse_partition_input(options.input)));
    } else if (options.gadget == "eqcard") {
      gadget.emplace(gen_from_eqcard_partition(parse_partition_input(options.input),
                                               options.agents));
    } else if (options.gadget == "ef-embedding") {
      const auto source = io::instance_from_json(io::read_json_file(options.input));
      gadget.emplace(gen_ef_embedding(source.instance));
    } else {
      throw InputError("unknown gadget '" + options.gadget + "'");
    }
    emit(io::instance_to_json(gadget->instance, gadget->quota, gadget->info), options.output,
         out);
    return kOk;
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Average envy-freeness solvers and checkers", "aef"};
  app.require_subcommand(1);

  CheckOptions check;
  std::string alpha_text;
  std::string eps_text;
  std::string check_output;
  auto* check_cmd = app.add_subcommand("check", "Evaluate an allocation against AEF notions");
  check_cmd->add_option("instance", check.instance, "Instance file")->required();
  check_cmd->add_option("allocation", check.allocation, "Allocation file")->required();
  check_cmd->add_option("--alpha", alpha_text, "Check alpha-AEF-1 at p/q");
  check_cmd->add_option("--eps", eps_text, "Check eps-error AEF-1 at p/q");
  check_cmd->add_option("--output", check_output, "Write the verdict document here");

  SolveOptions solve;
  std::string solve_output;
  auto* solve_cmd = app.add_subcommand("solve", "Compute an allocation");
  solve_cmd->add_option("instance", solve.instance, "Instance file")->required();
  solve_cmd
      ->add_option("--algorithm", solve.algorithm,
                   "picking | brute-aef | brute-aef1 | dp-binary | dp-approx")
      ->check(CLI::IsMember({"picking", "brute-aef", "brute-aef1", "dp-binary", "dp-approx"}));
  solve_cmd->add_flag("--quota-from-file", solve.quota_from_file,
                      "Use the quota block of the instance file (required for dp-*)");
  solve_cmd->add_option("--output", solve_output, "Write the allocation document here");
  solve_cmd->add_option("--max-states", solve.max_states,
                        "Reached-state cap per DP layer (default 1000000)");
  solve_cmd->add_option("--max-matrices", solve.max_matrices,
                        "Removing-matrix cap for dp-approx (default 1000000)");
  solve_cmd->add_option("--max-allocations", solve.max_allocations,
                        "Brute-force cap on n^m (default 10000000)");

  GenOptions gen;
  std::string gen_output;
  auto* gen_cmd = app.add_subcommand("gen", "Generate instances");
  gen_cmd->add_option("--gadget", gen.gadget, "partition | ef-embedding | eqcard")
      ->check(CLI::IsMember({"partition", "ef-embedding", "eqcard"}));
  gen_cmd->add_option("--input", gen.input,
                      "X=[...] literal or file (partition, eqcard); instance file (ef-embedding)");
  gen_cmd->add_option("--agents", gen.agents, "Agent count for eqcard (>= 3)");
  gen_cmd->add_option("--random", gen.random, "agents items model seed")->expected(4);
  gen_cmd->add_option("--output", gen_output, "Write the instance document here");

  std::vector<std::string> argv_storage{"aef"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  auto as_path = [](const std::string& s) -> std::optional<std::filesystem::path> {
    if (s.empty()) {
      return std::nullopt;
    }
    return std::filesystem::path(s);
  };

  if (check_cmd->parsed()) {
    try {
      if (!alpha_text.empty()) {
        check.alpha = Rational::parse(alpha_text);
      }
      if (!eps_text.empty()) {
        check.eps = Rational::parse(eps_text);
      }
    } catch (const InputError& e) {
      err << "input error: " << e.what() << " in threshold\n";
      return kInputError;
    }
    check.output = as_path(check_output);
    return cmd_check(check, out, err);
  }
  if (solve_cmd->parsed()) {
    solve.output = as_path(solve_output);
    return cmd_solve(solve, out, err);
  }
  gen.output = as_path(gen_output);
  return cmd_gen(gen, out, err);
}

}  // namespace aef::cli

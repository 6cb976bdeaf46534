#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sphact/json_io.hpp"
#include "sphact/selfcheck.hpp"

using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 12345;

enum ExitCode { kDecided = 0, kInvalidInput = 1, kUnknown = 2 };

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw sphact::InputError("/", "cannot open input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json_input(const std::string& path) {
  std::string text = read_input(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw sphact::InputError("/", std::string("invalid JSON: ") + e.what());
  }
}

void emit(const json& j, bool pretty) {
  std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
}

int fail_input(const sphact::InputError& e, bool pretty) {
  emit(sphact::error_envelope(e.at(), e.what()), pretty);
  return kInvalidInput;
}

int fail_input(const std::exception& e, bool pretty) {
  emit(sphact::error_envelope("/", e.what()), pretty);
  return kInvalidInput;
}

int cmd_realizable(const std::string& path, int max_witness_length,
                   bool pretty) {
  sphact::TwistedGroupInput input =
      sphact::parse_twisted_group(parse_json_input(path), "", true);
  sphact::Verdict verdict =
      sphact::realizable_general(input.group, *input.phi, max_witness_length);
  emit(sphact::verdict_to_json(verdict), pretty);
  return verdict.kind() == sphact::Realizability::Unknown ? kUnknown
                                                          : kDecided;
}

int cmd_canonical_form(const std::string& path, bool pretty) {
  sphact::IntMatrix m;
  try {
    m = sphact::parse_matrix(read_input(path));
  } catch (const std::exception& e) {
    throw sphact::InputError("/matrix", e.what());
  }
  sphact::Canonicalization canon;
  try {
    canon = sphact::canonicalize_involution(m);
  } catch (const std::invalid_argument& e) {
    throw sphact::InputError("/matrix", e.what());
  }
  json p = json::array();
  for (int i = 0; i < canon.conjugator.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < canon.conjugator.cols(); ++j)
      row.push_back(canon.conjugator.at(i, j).str());
    p.push_back(std::move(row));
  }
  emit(json{{"P", std::move(p)},
            {"k", canon.invariants.k},
            {"r", canon.invariants.r},
            {"s", canon.invariants.s},
            {"verified", true}},
       pretty);
  return kDecided;
}

int cmd_classify_vc(const std::string& path, bool pretty) {
  sphact::VCGroupSpec spec =
      sphact::parse_vc_spec(parse_json_input(path), "");
  sphact::VCOutcome out;
  try {
    out = sphact::classify_vc(spec);
  } catch (const std::invalid_argument& e) {
    throw sphact::InputError("/", e.what());
  }
  if (out.kind == sphact::VCOutcome::Kind::InvalidInput)
    throw sphact::InputError("/", out.reason);
  emit(sphact::vc_outcome_to_json(out), pretty);
  return kDecided;
}

int cmd_covers(const std::string& label, long max_index, bool pretty) {
  auto cover = sphact::manifold_from_name(label);
  if (!cover || *cover == sphact::Manifold::RP2n)
    throw sphact::InputError(
        "/cover", "cover must be one of S1xS2n, S1twistS2n, S1xRP2n, "
                  "RPsharpRP");
  if (max_index < 1 || max_index > 48)
    throw sphact::InputError("/max-index",
                             "max index must lie in [1, 48]");
  std::vector<sphact::CoverRow> rows = sphact::enumerate_covers(*cover,
                                                                max_index);
  if (!pretty) {
    emit(sphact::cover_rows_to_json(rows), false);
    return kDecided;
  }
  std::cout << "index  group                 base\n";
  for (const auto& r : rows) {
    std::string group = sphact::finite_family_name(r.group.family) + "(" +
                        std::to_string(r.group.k) + ")";
    group.resize(21, ' ');
    std::string idx = std::to_string(r.index);
    idx.resize(6, ' ');
    std::cout << idx << " " << group << " " << sphact::manifold_name(r.base)
              << "\n";
  }
  return kDecided;
}

int cmd_free_product(const std::string& path, bool pretty) {
  json j = parse_json_input(path);
  if (!j.is_array())
    throw sphact::InputError("/", "expected an array of twisted groups");
  std::vector<sphact::TwistedGroup> factors;
  for (size_t i = 0; i < j.size(); ++i)
    factors.push_back(
        sphact::parse_twisted_group(j[i], "/" + std::to_string(i), false)
            .group);
  if (factors.empty())
    throw sphact::InputError("/", "factor list must not be empty");
  emit(sphact::free_product_to_json(sphact::free_product_with_z2(factors)),
       pretty);
  return kDecided;
}

int cmd_verify_dyer_scott(const std::string& path, bool pretty) {
  json j = parse_json_input(path);
  if (!j.is_object() || !j.contains("group") || !j.contains("claim"))
    throw sphact::InputError("/", "expected { group, claim }");
  sphact::TwistedGroupInput input =
      sphact::parse_twisted_group(j["group"], "/group", false);
  sphact::DyerScottClaim claim =
      sphact::parse_dyer_scott_claim(j["claim"], "/claim");
  bool valid;
  try {
    valid = sphact::verify_dyer_scott(input.group, claim);
  } catch (const std::invalid_argument& e) {
    throw sphact::InputError("/claim", e.what());
  }
  emit(json{{"valid", valid}}, pretty);
  return kDecided;
}

int cmd_verify_action(const std::string& path, long samples, int max_length,
                      std::uint64_t seed, bool pretty) {
  sphact::TwistedGroupInput input =
      sphact::parse_twisted_group(parse_json_input(path), "", true);
  sphact::ActionModelReport report = sphact::verify_action_model(
      input.group, *input.phi, samples, max_length, seed);
  emit(sphact::action_report_to_json(report), pretty);
  return kDecided;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision procedures for involutive pairs on even-dimensional "
               "homotopy spheres"};
  app.require_subcommand(1);

  bool pretty = false;
  std::string input = "-";
  int max_witness_length = 16;
  std::uint64_t seed = kDefaultSeed;
  long samples = 500;
  int max_length = 6;
  long max_index = 48;
  std::string cover_label;

  auto add_pretty = [&pretty](CLI::App* sub) {
    sub->add_flag("--pretty", pretty, "indented / tabular output");
  };

  CLI::App* realizable = app.add_subcommand(
      "realizable", "decide realizability of a pair (theta, phi)");
  realizable->add_option("input", input, "JSON file or - for stdin");
  add_pretty(realizable);
  realizable->add_option("--max-witness-length", max_witness_length,
                         "hard cap for the witness search")
      ->check(CLI::PositiveNumber);
  realizable->add_option(
      "--seed", seed,
      "reserved; the decision procedure is deterministic");

  CLI::App* canonical = app.add_subcommand(
      "canonical-form", "canonical block form of an integral involution");
  canonical->add_option("input", input, "matrix text file or - for stdin");
  add_pretty(canonical);

  CLI::App* classify = app.add_subcommand(
      "classify-vc", "classify a virtually cyclic action");
  classify->add_option("input", input, "JSON file or - for stdin");
  add_pretty(classify);

  CLI::App* covers = app.add_subcommand(
      "covers", "finite groups acting on a cover, with orbit spaces");
  covers->add_option("cover", cover_label, "cover manifold label")
      ->required();
  covers->add_option("--max-index", max_index, "index bound (at most 48)");
  add_pretty(covers);

  CLI::App* freeprod = app.add_subcommand(
      "free-product", "present a free product of twisted groups");
  freeprod->add_option("input", input, "JSON array file or - for stdin");
  add_pretty(freeprod);

  CLI::App* dyer = app.add_subcommand(
      "verify-dyer-scott", "verify a claimed generator decomposition");
  dyer->add_option("input", input, "JSON file or - for stdin");
  add_pretty(dyer);

  CLI::App* action = app.add_subcommand(
      "verify-action", "check the explicit action model");
  action->add_option("input", input, "JSON file or - for stdin");
  action->add_option("--samples", samples, "random samples")
      ->check(CLI::NonNegativeNumber);
  action->add_option("--seed", seed, "random seed, echoed in the report");
  add_pretty(action);

  CLI::App* selfcheck = app.add_subcommand(
      "selfcheck", "run the built-in verification suites");

  CLI11_PARSE(app, argc, argv);

  try {
    if (realizable->parsed())
      return cmd_realizable(input, max_witness_length, pretty);
    if (canonical->parsed()) return cmd_canonical_form(input, pretty);
    if (classify->parsed()) return cmd_classify_vc(input, pretty);
    if (covers->parsed()) return cmd_covers(cover_label, max_index, pretty);
    if (freeprod->parsed()) return cmd_free_product(input, pretty);
    if (dyer->parsed()) return cmd_verify_dyer_scott(input, pretty);
    if (action->parsed())
      return cmd_verify_action(input, samples, max_length, seed, pretty);
    if (selfcheck->parsed())
      return sphact::run_selfcheck(std::cout) ? 0 : 3;
  } catch (const sphact::InputError& e) {
    return fail_input(e, pretty);
  } catch (const std::invalid_argument& e) {
    return fail_input(e, pretty);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return kInvalidInput;
}

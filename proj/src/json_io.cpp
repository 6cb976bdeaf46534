#include "sphact/json_io.hpp"

#include <limits>

namespace sphact {

using nlohmann::json;

namespace {

const json& require_field(const json& j, const char* name,
                          const std::string& at) {
  if (!j.is_object()) throw InputError(at, "expected an object");
  auto it = j.find(name);
  if (it == j.end())
    throw InputError(at + "/" + name, std::string("missing field '") + name +
                                          "'");
  return *it;
}

int as_int(const json& j, const std::string& at) {
  if (!j.is_number_integer())
    throw InputError(at, "expected an integer");
  return j.get<int>();
}

int as_bit(const json& j, const std::string& at) {
  int v = as_int(j, at);
  if (v != 0 && v != 1) throw InputError(at, "expected 0 or 1");
  return v;
}

json int_to_json(const Int& x) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (x >= lo && x <= hi) return json(static_cast<long long>(x));
  return json(x.str());
}

}  // namespace

TwistedGroupInput parse_twisted_group(const json& j, const std::string& at,
                                      bool require_phi) {
  int rank = as_int(require_field(j, "rank", at), at + "/rank");
  if (rank < 0) throw InputError(at + "/rank", "rank must be non-negative");
  const json& theta_j = require_field(j, "theta", at);
  if (!theta_j.is_array())
    throw InputError(at + "/theta", "expected an array of words");
  if (static_cast<int>(theta_j.size()) != rank)
    throw InputError(at + "/theta", "theta needs one image per generator");
  std::vector<Word> images;
  for (size_t i = 0; i < theta_j.size(); ++i) {
    std::string where = at + "/theta/" + std::to_string(i);
    if (!theta_j[i].is_string()) throw InputError(where, "expected a word string");
    try {
      images.push_back(parse_word(theta_j[i].get<std::string>(), rank));
    } catch (const std::exception& e) {
      throw InputError(where, e.what());
    }
  }

  std::optional<OrientationHom> phi;
  if (j.contains("phi")) {
    const json& phi_j = j["phi"];
    if (!phi_j.is_array())
      throw InputError(at + "/phi", "expected an array of bits");
    if (static_cast<int>(phi_j.size()) != rank)
      throw InputError(at + "/phi", "phi needs one bit per generator");
    std::vector<int> bits;
    for (size_t i = 0; i < phi_j.size(); ++i)
      bits.push_back(as_bit(phi_j[i], at + "/phi/" + std::to_string(i)));
    phi = OrientationHom(std::move(bits));
  } else if (require_phi) {
    throw InputError(at + "/phi", "missing field 'phi'");
  }

  TwistedGroup group = [&] {
    try {
      return TwistedGroup(FreeAutomorphism(rank, std::move(images)));
    } catch (const std::exception& e) {
      throw InputError(at + "/theta", e.what());
    }
  }();
  if (phi) {
    if (auto bad = orientation_violation(group, *phi))
      throw InputError(at + "/phi",
                       "orientation is incompatible with theta at x" +
                           std::to_string(*bad));
  }
  return {std::move(group), std::move(phi)};
}

json twisted_group_to_json(const TwistedGroup& g) {
  json theta = json::array();
  for (int i = 1; i <= g.rank(); ++i)
    theta.push_back(format_word(g.theta().image(i)));
  return json{{"rank", g.rank()}, {"theta", std::move(theta)}};
}

json verdict_to_json(const Verdict& v) {
  json out;
  switch (v.kind()) {
    case Realizability::Realizable: out["verdict"] = "realizable"; break;
    case Realizability::NotRealizable: out["verdict"] = "not_realizable"; break;
    case Realizability::Unknown: out["verdict"] = "unknown"; break;
  }
  if (v.witness()) out["witness"] = format_word(*v.witness());
  json basis = json::array();
  for (const auto& vec : v.kernel_basis()) {
    json row = json::array();
    for (const Int& x : vec) row.push_back(int_to_json(x));
    basis.push_back(std::move(row));
  }
  out["kernel_basis"] = std::move(basis);
  out["budget"] = v.budget();
  return out;
}

VCGroupSpec parse_vc_spec(const json& j, const std::string& at) {
  const json& shape_j = require_field(j, "shape", at);
  if (!shape_j.is_string()) throw InputError(at + "/shape", "expected a string");
  auto shape = vc_shape_from_name(shape_j.get<std::string>());
  if (!shape)
    throw InputError(at + "/shape",
                     "shape must be one of Z2, Z, ZxZ2, ZsemiZ2");
  VCGroupSpec spec{*shape, std::nullopt, std::nullopt};
  if (j.contains("phi_z")) spec.phi_z = as_bit(j["phi_z"], at + "/phi_z");
  if (j.contains("phi_torsion"))
    spec.phi_torsion = as_bit(j["phi_torsion"], at + "/phi_torsion");
  return spec;
}

json vc_outcome_to_json(const VCOutcome& out) {
  switch (out.kind) {
    case VCOutcome::Kind::OrbitSpace:
      return json{{"orbit_space", manifold_name(out.orbit_space)},
                  {"realizable", true}};
    case VCOutcome::Kind::NotRealizable:
      return json{{"realizable", false}, {"reason", out.reason}};
    case VCOutcome::Kind::InvalidInput:
      return error_envelope("/", out.reason);
  }
  return json();
}

json cover_row_to_json(const CoverRow& row) {
  json group{{"family", finite_family_name(row.group.family)},
             {"k", row.group.k}};
  if (row.group.raw_family != row.group.family ||
      row.group.raw_k != row.group.k)
    group["raw"] = json{{"family", finite_family_name(row.group.raw_family)},
                        {"k", row.group.raw_k}};
  return json{{"base", manifold_name(row.base)},
              {"group", std::move(group)},
              {"index", row.index}};
}

json cover_rows_to_json(const std::vector<CoverRow>& rows) {
  json out = json::array();
  for (const CoverRow& r : rows) out.push_back(cover_row_to_json(r));
  return out;
}

DyerScottClaim parse_dyer_scott_claim(const json& j, const std::string& at) {
  DyerScottClaim claim;
  if (!j.is_object()) throw InputError(at, "expected an object");
  if (j.contains("fixed")) {
    const json& f = j["fixed"];
    if (!f.is_array()) throw InputError(at + "/fixed", "expected an array");
    for (size_t i = 0; i < f.size(); ++i)
      claim.fixed.push_back(as_int(f[i], at + "/fixed/" + std::to_string(i)));
  }
  if (j.contains("swaps")) {
    const json& s = j["swaps"];
    if (!s.is_array()) throw InputError(at + "/swaps", "expected an array");
    for (size_t i = 0; i < s.size(); ++i) {
      std::string where = at + "/swaps/" + std::to_string(i);
      if (!s[i].is_array() || s[i].size() != 2)
        throw InputError(where, "expected a pair [i, j]");
      claim.swaps.emplace_back(as_int(s[i][0], where),
                               as_int(s[i][1], where));
    }
  }
  if (j.contains("lambdas")) {
    const json& l = j["lambdas"];
    if (!l.is_array()) throw InputError(at + "/lambdas", "expected an array");
    for (size_t i = 0; i < l.size(); ++i) {
      std::string where = at + "/lambdas/" + std::to_string(i);
      DyerScottClaim::Lambda lam;
      lam.x = as_int(require_field(l[i], "x", where), where + "/x");
      const json& ys = require_field(l[i], "ys", where);
      if (!ys.is_array()) throw InputError(where + "/ys", "expected an array");
      for (size_t y = 0; y < ys.size(); ++y)
        lam.ys.push_back(as_int(ys[y], where + "/ys/" + std::to_string(y)));
      claim.lambdas.push_back(std::move(lam));
    }
  }
  return claim;
}

json action_report_to_json(const ActionModelReport& report) {
  json freeness = json::array();
  for (const Word& w : report.freeness_failures)
    freeness.push_back(format_word(w));
  return json{{"axiom_failures", report.axiom_failures},
              {"freeness_failures", std::move(freeness)},
              {"max_length", report.max_length},
              {"passed", report.passed()},
              {"samples", report.samples},
              {"seed", report.seed}};
}

json free_product_to_json(const FreeProductResult& result) {
  json factors = json::array();
  for (const FactorEmbedding& f : result.factors)
    factors.push_back(json{{"generator_offset", f.generator_offset},
                           {"new_letter", f.new_letter},
                           {"rank", f.rank}});
  return json{{"factors", std::move(factors)},
              {"group", twisted_group_to_json(result.group)}};
}

json error_envelope(const std::string& at, const std::string& what) {
  return json{{"at", at}, {"error", what}};
}

}  // namespace sphact

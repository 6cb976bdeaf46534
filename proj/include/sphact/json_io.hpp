#ifndef SPHACT_JSON_IO_HPP_
#define SPHACT_JSON_IO_HPP_

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "sphact/classify.hpp"
#include "sphact/realize.hpp"

namespace sphact {

/// Input rejection with the JSON path at which it happened.
class InputError : public std::runtime_error {
public:
  InputError(std::string at, const std::string& what)
      : std::runtime_error(what), at_(std::move(at)) {}
  const std::string& at() const { return at_; }

private:
  std::string at_;
};

struct TwistedGroupInput {
  TwistedGroup group;
  std::optional<OrientationHom> phi;
};

/// Parses { "rank": m, "theta": [word, ...], "phi": [bit, ...] }; phi is
/// optional, and when present it is validated against theta.
TwistedGroupInput parse_twisted_group(const nlohmann::json& j,
                                      const std::string& at,
                                      bool require_phi);

nlohmann::json twisted_group_to_json(const TwistedGroup& g);
nlohmann::json verdict_to_json(const Verdict& v);

VCGroupSpec parse_vc_spec(const nlohmann::json& j, const std::string& at);
nlohmann::json vc_outcome_to_json(const VCOutcome& out);

nlohmann::json cover_row_to_json(const CoverRow& row);
nlohmann::json cover_rows_to_json(const std::vector<CoverRow>& rows);

DyerScottClaim parse_dyer_scott_claim(const nlohmann::json& j,
                                      const std::string& at);

nlohmann::json action_report_to_json(const ActionModelReport& report);
nlohmann::json free_product_to_json(const FreeProductResult& result);

nlohmann::json error_envelope(const std::string& at, const std::string& what);

}  // namespace sphact

#endif

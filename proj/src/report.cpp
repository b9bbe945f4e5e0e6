#include "mvlift/report.hpp"

#include <limits>
#include <sstream>

#include "mvlift/error.hpp"
#include "mvlift/sysio.hpp"

namespace mvlift {

namespace {

constexpr const char* kProvenanceTag = "provenance: ";

Json point_to_json(const std::vector<GaussianRational>& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(c.to_string());
  return out;
}

}  // namespace

Json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return Json(static_cast<long long>(v));
  return Json(v.str());
}

Json analysis_to_json(const AnalysisReport& report) {
  Json out;
  out["bkk_bound"] = integer_to_json(report.bkk_bound);
  Json dirs = Json::array();
  Json strategies = Json::array();
  for (const auto& d : report.directions) {
    Json entry;
    entry["u"] = d.u.vector();
    entry["status"] = to_string(d.status);
    entry["witness"] = d.witness ? point_to_json(*d.witness) : Json(nullptr);
    entry["certificate"] = d.certificate;
    if (d.certificate_polynomial) entry["certificate_polynomial"] = *d.certificate_polynomial;
    if (!d.note.empty()) entry["note"] = d.note;
    dirs.push_back(std::move(entry));
    for (const auto& s : d.strategies) {
      Json c;
      c["u"] = d.u.vector();
      c["strategy"] = s.strategy;
      c["applicable"] = s.applicable;
      if (!s.condition.empty()) c["condition"] = s.condition;
      if (!s.detail.empty()) c["detail"] = s.detail;
      strategies.push_back(std::move(c));
    }
  }
  out["degenerate_directions"] = std::move(dirs);
  out["strategies"] = std::move(strategies);
  return out;
}

Json change_to_json(const MonomialChange& change) {
  Json out;
  out["matrix"] = change.matrix;
  out["shifts"] = change.shifts;
  return out;
}

MonomialChange change_from_json(const Json& j) {
  try {
    MonomialChange c;
    c.matrix = j.at("matrix").get<IntMatrix>();
    c.shifts = j.at("shifts").get<std::vector<Exponent>>();
    if (!is_unimodular(c.matrix)) throw ValidationError("transform matrix is not unimodular");
    return c;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed transform: ") + e.what());
  }
}

Json provenance_to_json(const LiftResult& lift) {
  const auto& vars = lift.normalized.variables();
  Json out;
  out["strategy"] = to_string(lift.strategy);
  out["u"] = lift.u ? Json(lift.u->vector()) : Json(nullptr);
  switch (lift.strategy) {
    case Strategy::division:
      out["alpha"] = point_to_json(lift.alpha);
      break;
    case Strategy::lindep:
      out["lambda"] = lift.lambda->to_string();
      out["pair"] = {lift.i1, lift.i2};
      break;
    case Strategy::bigcd:
      out["gcd"] = format_polynomial(*lift.gcd_factor, vars);
      out["m"] = lift.m;
      break;
    case Strategy::monomial:
      out["monomial"] = *lift.monomial;
      break;
  }
  out["mv_before"] = integer_to_json(lift.mv_before);
  out["mv_after"] = integer_to_json(lift.mv_after);
  out["transform"] = change_to_json(lift.change);
  out["diagnostics"] = lift.diagnostics;
  return out;
}

std::string serialize_lift(const LiftResult& lift) {
  return serialize_system(lift.lifted, {kProvenanceTag + provenance_to_json(lift).dump()});
}

std::optional<Json> read_provenance(const std::string& system_text) {
  std::istringstream in(system_text);
  std::string line;
  const std::string prefix = std::string("# ") + kProvenanceTag;
  while (std::getline(in, line)) {
    if (line.rfind(prefix, 0) != 0) continue;
    try {
      return Json::parse(line.substr(prefix.size()));
    } catch (const Json::exception& e) {
      throw ValidationError(std::string("malformed provenance block: ") + e.what());
    }
  }
  return std::nullopt;
}

}  // namespace mvlift

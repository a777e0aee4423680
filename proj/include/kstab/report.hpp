#pragma once

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>

#include "kstab/catalog.hpp"
#include "kstab/linkspec.hpp"
#include "kstab/obstruction.hpp"

namespace kstab {

using Json = nlohmann::ordered_json;

inline std::string verdict_sentence(const ObstructionVerdict& v) {
  switch (v.tag) {
    case VerdictTag::ObstructedStrict:
      return "obstructed: no extremal Sasaki metric anywhere in the Sasaki cone";
    case VerdictTag::ObstructedObata:
      return "obstructed (boundary case): no extremal Sasaki metric anywhere in the Sasaki cone";
    case VerdictTag::NotObstructedByThisTest:
      return "no obstruction found by this test (existence is not certified)";
  }
  return "?";
}

inline Json rational_list(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

/// Full analysis of one link: cone data, index character coefficients,
/// per-coordinate charge tests, the cone-wide verdict, normal-cone Futaki
/// data on the volume-normalized slice, and the extremal field at the
/// requested Reeb vector.
inline Json analyze_link(const std::string& name, const WeightedLink& link,
                         const std::optional<ReebVector>& reeb_opt,
                         const std::string& comment = "", int order = 3) {
  Json j;
  j["name"] = name;
  if (!comment.empty()) j["comment"] = comment;

  Json jl;
  jl["hypersurface"] = link.is_hypersurface();
  Json w = Json::array();
  for (long x : link.weights()) w.push_back(x);
  jl["weights"] = w;
  jl["degree"] = link.degree();
  jl["inner_coordinates"] = static_cast<long>(link.inner_weights().size());
  jl["tail_length"] = link.tail_length();
  jl["ambient_dimension"] = link.ambient_dim();
  jl["dim_y"] = link.dim_y();
  jl["cone_rank"] = link.rank();
  jl["cone_dimension"] = link.cone_dimension();
  jl["fano_index"] = link.fano_index();
  jl["doubled_from_odd_degree"] = link.odd_inner_degree();
  j["link"] = jl;

  Json cone;
  cone["membership"] = "b0 > 0 and |b_j| < " + Rational(link.degree(), 2).str() + "*b0";
  j["sasaki_cone"] = cone;

  CharCoeffs c = char_coeffs(link, order);
  j["a0"] = c.a0.str();
  j["a1"] = c.a1.str();

  bool positive = link.fano_index() > 0;
  if (positive) {
    ReebVector sigma = link.sigma_reeb();
    j["sigma_reeb"] = rational_list(sigma);
    Json lich = Json::array();
    int coords = link.is_hypersurface() ? static_cast<int>(link.inner_weights().size())
                                        : link.ambient_dim();
    for (int i = 0; i < coords; ++i) {
      ObstructionVerdict v = link.lichnerowicz_check(i);
      Json e;
      e["coordinate"] = i;
      e["weight"] = link.weights()[static_cast<size_t>(i)];
      e["charge"] = v.decisive.str();
      e["verdict"] = verdict_tag_name(v.tag);
      lich.push_back(e);
    }
    j["lichnerowicz"] = lich;
  } else {
    j["sigma_reeb"] = nullptr;
    j["lichnerowicz"] = Json::array();
  }

  ObstructionVerdict whp = link.whp_obstruction();
  Json jw;
  jw["value"] = whp.decisive.str();
  jw["verdict"] = verdict_tag_name(whp.tag);
  jw["rule"] = whp.rule;
  j["obstruction_inequality"] = jw;

  if (positive) {
    GenLichResult g = gen_lich_obstruction(link, link.default_witness_charge(), c);
    Json jg;
    jg["witness_charge"] = g.charge.str();
    jg["alpha_vanishes_on_slice_directions"] = g.alpha_tangent_ok;
    jg["verdict"] = verdict_tag_name(g.verdict.tag);
    j["generalized_lichnerowicz"] = jg;

    Json jn;
    jn["relative"] = g.normal_cone.relative.str();
    jn["unrelative"] = g.normal_cone.unrelative.str();
    jn["chi_correction"] = g.normal_cone.chi_correction.str();
    jn["generator_norm_sq"] = g.normal_cone.norm_sq_generator.str();
    j["normal_cone_futaki_at_sigma"] = jn;

    CalabiBound cb = calabi_bound_from(g.normal_cone.relative, g.normal_cone.norm_sq_generator);
    j["calabi_bound_signed_square"] = cb.signed_square.str();
    j["calabi_bound_units"] = "c(n), squared";
  } else {
    j["generalized_lichnerowicz"] = nullptr;
    j["normal_cone_futaki_at_sigma"] = nullptr;
    j["calabi_bound_signed_square"] = nullptr;
    j["calabi_bound_units"] = "c(n), squared";
  }

  ReebVector point = reeb_opt ? *reeb_opt : (positive ? link.sigma_reeb() : link.quasi_regular_reeb());
  j["reeb_point"] = rational_list(point);
  DirectionVector chi = extremal_field(point, c);
  j["chi"] = rational_list(chi);
  j["chi_norm_sq"] = inner_product(chi, chi, point, c).str();

  j["verdict"] = verdict_tag_name(whp.tag);
  j["summary"] = verdict_sentence(whp);

  Json flags;
  flags["cone_halfwidth"] =
      "|b_j| < d*b0/2 from charge positivity; a sometimes-printed d*b0/4 variant is an erratum";
  flags["a0_b0_exponent"] =
      "b0 exponent in closed-form a0 is (#inner - 1); a sometimes-printed (#inner - 2) variant "
      "fails the exact series comparison";
  if (!link.is_hypersurface()) {
    std::vector<long> ws = link.weights();
    bool all_equal = std::all_of(ws.begin(), ws.end(), [&](long x) { return x == ws[0]; });
    if (all_equal)
      flags["flat_model"] =
          "ambient model with equal charges: the flat structure itself lies in the cone, "
          "so a boundary-case verdict here identifies the flat metric";
  }
  j["flags"] = flags;
  return j;
}

inline Json analyze_spec(const LinkSpec& spec) {
  validate_linkspec(spec);
  WeightedLink link = spec.family
                          ? catalog(*spec.family, spec.params).link
                          : WeightedLink::hypersurface(*spec.inner_weights, *spec.inner_degree,
                                                       *spec.tail);
  if (spec.reeb) {
    if (static_cast<int>(spec.reeb->size()) != link.nvars())
      throw Error(ErrorCode::Validation,
                  "record '" + spec.name + "': reeb needs " + std::to_string(link.nvars()) +
                      " coordinates");
    if (!link.in_sasaki_cone(*spec.reeb))
      throw Error(ErrorCode::Validation,
                  "record '" + spec.name + "': reeb vector is not interior to the Sasaki cone");
  }
  return analyze_link(spec.name, link, spec.reeb, spec.comment);
}

/// Canonical machine-readable form: re-parsing and re-emitting is the identity.
inline std::string to_machine(const Json& j) { return j.dump(2) + "\n"; }

inline std::string render_text(const Json& j) {
  std::ostringstream os;
  auto rat = [](const Json& v) { return v.is_null() ? std::string("-") : v.get<std::string>(); };
  for (const auto& rec : j) {
    os << "== " << rec["name"].get<std::string>() << " ==\n";
    if (rec.contains("comment")) os << "polynomial: " << rec["comment"].get<std::string>() << "\n";
    const auto& l = rec["link"];
    os << "weights: (";
    for (size_t i = 0; i < l["weights"].size(); ++i)
      os << (i ? ", " : "") << l["weights"][i].get<long>();
    os << ")  degree: " << l["degree"].get<long>()
       << "  dim Y: " << l["dim_y"].get<int>() << "\n";
    os << "cone rank: " << l["cone_rank"].get<int>()
       << "  cone dimension: " << l["cone_dimension"].get<int>()
       << "  Fano index: " << l["fano_index"].get<long>() << "\n";
    os << "Sasaki cone: " << rec["sasaki_cone"]["membership"].get<std::string>() << "\n";
    os << "a0 = " << rec["a0"].get<std::string>() << "\n";
    os << "a1 = " << rec["a1"].get<std::string>() << "\n";
    if (!rec["sigma_reeb"].is_null()) {
      os << "volume-normalized Reeb: (";
      for (size_t i = 0; i < rec["sigma_reeb"].size(); ++i)
        os << (i ? ", " : "") << rec["sigma_reeb"][i].get<std::string>();
      os << ")\n";
      for (const auto& e : rec["lichnerowicz"])
        os << "  z" << e["coordinate"].get<int>() << " (weight " << e["weight"].get<long>()
           << "): charge " << e["charge"].get<std::string>() << " -> "
           << e["verdict"].get<std::string>() << "\n";
    }
    os << "inequality value: " << rec["obstruction_inequality"]["value"].get<std::string>()
       << " -> " << rec["obstruction_inequality"]["verdict"].get<std::string>() << "\n";
    if (!rec["normal_cone_futaki_at_sigma"].is_null()) {
      const auto& n = rec["normal_cone_futaki_at_sigma"];
      os << "normal-cone relative Futaki at sigma: " << rat(n["relative"])
         << " (unrelative " << rat(n["unrelative"]) << ", chi correction "
         << rat(n["chi_correction"]) << ")\n";
    }
    os << "reeb point: (";
    for (size_t i = 0; i < rec["reeb_point"].size(); ++i)
      os << (i ? ", " : "") << rec["reeb_point"][i].get<std::string>();
    os << ")  chi: (";
    for (size_t i = 0; i < rec["chi"].size(); ++i)
      os << (i ? ", " : "") << rec["chi"][i].get<std::string>();
    os << ")  |chi|^2 = " << rec["chi_norm_sq"].get<std::string>() << "\n";
    os << "Calabi bound, signed square in c(n)^2 units: "
       << rat(rec["calabi_bound_signed_square"]) << "\n";
    os << "verdict: " << rec["verdict"].get<std::string>() << " -- "
       << rec["summary"].get<std::string>() << "\n";
    for (const auto& [key, value] : rec["flags"].items())
      os << "note [" << key << "]: " << value.get<std::string>() << "\n";
    os << "\n";
  }
  return os.str();
}

}  // namespace kstab

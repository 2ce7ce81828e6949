#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qmix/fuzz.hpp"
#include "qmix/report.hpp"
#include "qmix/scan.hpp"
#include "qmix/states.hpp"

namespace qmix {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// state interchange format
//   { "n": N, "d": d, "kind": "pure"|"density", "data": [[re,im],...] }
// pure: flat length d^N; density: row-major length d^(2N).
// ---------------------------------------------------------------------------

inline json state_to_json(const PureState& phi) {
  json data = json::array();
  for (long long i = 0; i < phi.amplitudes().size(); ++i) {
    const Complex a = phi.amplitudes()(i);
    data.push_back({a.real(), a.imag()});
  }
  return json{{"n", phi.shape().subsystems()},
              {"d", phi.shape().local_dim()},
              {"kind", "pure"},
              {"data", std::move(data)}};
}

inline json state_to_json(const DensityMatrix& rho) {
  json data = json::array();
  for (long long r = 0; r < rho.entries().rows(); ++r) {
    for (long long c = 0; c < rho.entries().cols(); ++c) {
      const Complex a = rho.entries()(r, c);
      data.push_back({a.real(), a.imag()});
    }
  }
  return json{{"n", rho.shape().subsystems()},
              {"d", rho.shape().local_dim()},
              {"kind", "density"},
              {"data", std::move(data)}};
}

using AnyState = std::variant<PureState, DensityMatrix>;

inline AnyState state_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("d") || !j.contains("kind") ||
      !j.contains("data")) {
    throw contract_error("state JSON: need fields n, d, kind, data");
  }
  const CompositeShape shape = CompositeShape::make(j.at("n").get<int>(), j.at("d").get<int>());
  const std::string kind = j.at("kind").get<std::string>();
  const json& data = j.at("data");
  auto entry = [&](std::size_t i) -> Complex {
    const json& cell = data.at(i);
    if (!cell.is_array() || cell.size() != 2) {
      throw contract_error("state JSON: data entries must be [re, im] pairs");
    }
    return {cell.at(0).get<double>(), cell.at(1).get<double>()};
  };
  if (kind == "pure") {
    if (static_cast<long long>(data.size()) != shape.dim()) {
      throw contract_error("state JSON: pure data length " + std::to_string(data.size()) +
                           " != d^N = " + std::to_string(shape.dim()));
    }
    Vector amps(shape.dim());
    for (long long i = 0; i < shape.dim(); ++i) amps(i) = entry(static_cast<std::size_t>(i));
    return PureState::make(shape, std::move(amps));
  }
  if (kind == "density") {
    if (static_cast<long long>(data.size()) != shape.dim() * shape.dim()) {
      throw contract_error("state JSON: density data length " + std::to_string(data.size()) +
                           " != d^(2N) = " + std::to_string(shape.dim() * shape.dim()));
    }
    Matrix m(shape.dim(), shape.dim());
    for (long long r = 0; r < shape.dim(); ++r) {
      for (long long c = 0; c < shape.dim(); ++c) {
        m(r, c) = entry(static_cast<std::size_t>(r * shape.dim() + c));
      }
    }
    return DensityMatrix::make(shape, std::move(m));
  }
  throw contract_error("state JSON: kind must be \"pure\" or \"density\", got \"" + kind + "\"");
}

inline DensityMatrix as_density(const AnyState& s) {
  if (std::holds_alternative<PureState>(s)) return std::get<PureState>(s).projector();
  return std::get<DensityMatrix>(s);
}

// ---------------------------------------------------------------------------
// named constructors, usable inline in mixture specs:
//   {"family":"ghz","n":4,"d":2,"sign":"-"}
// ---------------------------------------------------------------------------

inline PureState pure_from_family_json(const json& j) {
  const std::string family = j.at("family").get<std::string>();
  if (family == "bell") {
    const std::string which = j.at("which").get<std::string>();
    if (which == "psi+") return bell_state(BellKind::PsiPlus);
    if (which == "psi-") return bell_state(BellKind::PsiMinus);
    if (which == "phi+") return bell_state(BellKind::PhiPlus);
    if (which == "phi-") return bell_state(BellKind::PhiMinus);
    throw contract_error("bell: which must be one of psi+, psi-, phi+, phi-");
  }
  if (family == "ghz") {
    std::optional<GhzSign> sign;
    if (j.contains("sign")) {
      const std::string s = j.at("sign").get<std::string>();
      if (s == "+") sign = GhzSign::Plus;
      else if (s == "-") sign = GhzSign::Minus;
      else throw contract_error("ghz: sign must be \"+\" or \"-\"");
    }
    return ghz_state(j.at("n").get<int>(), j.at("d").get<int>(), sign);
  }
  if (family == "shifted") {
    return shifted_state(j.at("n").get<int>(), j.at("d").get<int>(), j.at("j").get<int>());
  }
  if (family == "dicke") {
    return dicke_state(j.at("n").get<int>(), j.at("m").get<int>());
  }
  if (family == "w") {
    return w_state(j.at("n").get<int>());
  }
  throw contract_error("unknown pure-state family \"" + family + "\"");
}

/// Mixture spec format:
///   { "weights": [...], "states": [ <state object> | <family object> | "path.json", ... ] }
/// String entries are read as state files relative to `base`.
inline MixtureSpec mixture_spec_from_json(const json& j,
                                          const std::filesystem::path& base = ".") {
  if (!j.contains("weights") || !j.contains("states")) {
    throw contract_error("mixture spec JSON: need fields weights, states");
  }
  std::vector<double> weights = j.at("weights").get<std::vector<double>>();
  std::vector<PureState> states;
  for (const json& s : j.at("states")) {
    if (s.is_string()) {
      std::ifstream in(base / s.get<std::string>());
      if (!in) throw contract_error("mixture spec: cannot open state file " + s.get<std::string>());
      const AnyState any = state_from_json(json::parse(in));
      if (!std::holds_alternative<PureState>(any)) {
        throw contract_error("mixture spec: component states must be pure");
      }
      states.push_back(std::get<PureState>(any));
    } else if (s.is_object() && s.contains("family")) {
      states.push_back(pure_from_family_json(s));
    } else if (s.is_object() && s.contains("kind")) {
      const AnyState any = state_from_json(s);
      if (!std::holds_alternative<PureState>(any)) {
        throw contract_error("mixture spec: component states must be pure");
      }
      states.push_back(std::get<PureState>(any));
    } else {
      throw contract_error("mixture spec: each state must be a state object, a family object, "
                           "or a file path string");
    }
  }
  return MixtureSpec::make(std::move(weights), std::move(states));
}

// ---------------------------------------------------------------------------
// report serialization
// ---------------------------------------------------------------------------

inline json to_json(const PurityReport& r) {
  return json{{"whole_purity", r.whole_purity},
              {"marginal_purities", r.marginal_purities},
              {"witnesses", r.witnesses},
              {"boundary", r.boundary},
              {"detected", r.detected}};
}

inline json to_json(const SeparabilityVerdict& v) {
  return json{{"verdict", to_string(v.value)}, {"certificate", v.certificate}};
}

inline json to_json(const BipartitionReport& r) {
  json parts = json::array();
  for (const BipartitionEntry& e : r.partitions) {
    parts.push_back({{"subset", e.subset}, {"purity", e.subset_purity}, {"entangled", e.entangled}});
  }
  return json{
      {"whole_purity", r.whole_purity}, {"partitions", std::move(parts)}, {"all_entangled", r.all_entangled}};
}

inline json to_json(const DetectionReport& r) {
  json ppt = json::array();
  for (const auto& [subset, result] : r.ppt) {
    ppt.push_back(
        {{"partition", subset}, {"holds", result.holds}, {"min_eigenvalue", result.min_eigenvalue}});
  }
  json j{{"shape", {{"n", r.shape.subsystems()}, {"d", r.shape.local_dim()}}},
         {"purity", to_json(r.purity)},
         {"ppt", std::move(ppt)},
         {"separability", to_json(r.separability)},
         {"classification", to_string(r.classification)}};
  if (r.concurrence.has_value()) j["concurrence"] = *r.concurrence;
  if (r.genuineness_scan.has_value()) {
    j["genuineness"] = {{"scan", to_json(*r.genuineness_scan)}, {"genuine", r.genuine_indicated}};
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline json to_json(const TheoremVerdict& v) {
  json evidence = json::object();
  for (const auto& [key, value] : v.evidence) evidence[key] = value;
  json j{{"theorem", v.theorem},
         {"hypotheses_decidable", v.hypotheses_decidable},
         {"hypotheses_hold", v.hypotheses_hold},
         {"conclusion_observed", v.conclusion_observed},
         {"affirmed", v.affirmed()},
         {"evidence", std::move(evidence)}};
  if (!v.notes.empty()) j["notes"] = v.notes;
  return j;
}

inline json to_json(const FuzzOutcome& o) {
  return json{{"theorem", o.theorem},
              {"base_seed", o.base_seed},
              {"trials", o.trials},
              {"passed", o.passed},
              {"failing_seeds", o.failing_seeds},
              {"all_passed", o.all_passed()}};
}

inline json to_json(const ClassMembership& m, int n_subsystems) {
  json j{{"max_mixed_marginals", m.max_mixed_marginals}};
  if (n_subsystems >= 3) {
    j["one_drop_separable"] = to_string(m.one_drop_separable);
  } else {
    j["one_drop_separable"] = nullptr;
  }
  return j;
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

/// 17 significant digits, '.' decimal point, no grouping: round-trips any
/// double bit-exactly.
inline std::string csv_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline std::string scan_csv_header() {
  return "parameter,whole_purity,marginal_purity,detected,ppt_holds,concurrence";
}

inline std::string to_csv(const ScanRow& row) {
  std::string s = csv_double(row.parameter) + "," + csv_double(row.whole_purity) + "," +
                  csv_double(row.marginal_purity) + "," + (row.detected ? "true" : "false") + ",";
  if (row.ppt_holds.has_value()) s += *row.ppt_holds ? "true" : "false";
  s += ",";
  if (row.concurrence.has_value()) s += csv_double(*row.concurrence);
  return s;
}

} // namespace qmix

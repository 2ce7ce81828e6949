#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qmix/io.hpp"
#include "qmix/reproduce.hpp"

namespace qmix::cli {

// Exit codes: 0 success, 1 usage error, 2 numeric/contract violation,
// 3 capacity exceeded.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_contract = 2;
inline constexpr int exit_capacity = 3;

namespace detail {

inline void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw contract_error("cannot open output file " + path);
  f << text;
}

inline json read_json(const std::string& path, std::istream& in) {
  if (path == "-") return json::parse(in);
  std::ifstream f(path);
  if (!f) throw contract_error("cannot open input file " + path);
  return json::parse(f);
}

inline std::uint64_t default_seed() {
  if (const char* env = std::getenv("QMIX_SEED")) {
    return static_cast<std::uint64_t>(std::strtoull(env, nullptr, 10));
  }
  return 20240913ull;
}

inline std::string render_table(const ReproduceResult& res) {
  std::ostringstream t;
  t << "case: " << res.name << "\n";
  std::size_t width = 4;
  for (const ReproRow& r : res.rows) width = std::max(width, r.label.size());
  char buf[128];
  for (const ReproRow& r : res.rows) {
    std::snprintf(buf, sizeof(buf), "  %-*s  expected % .12g  computed % .12g  [%s]\n",
                  static_cast<int>(width), r.label.c_str(), r.expected, r.computed,
                  r.pass ? "ok" : "FAIL");
    t << buf;
  }
  for (const std::string& n : res.notes) t << "  note: " << n << "\n";
  t << (res.all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
  return t.str();
}

inline json reproduce_to_json(const ReproduceResult& res) {
  json rows = json::array();
  for (const ReproRow& r : res.rows) {
    rows.push_back({{"label", r.label},
                    {"expected", r.expected},
                    {"computed", r.computed},
                    {"tolerance", r.tolerance},
                    {"pass", r.pass}});
  }
  return json{
      {"case", res.name}, {"rows", std::move(rows)}, {"notes", res.notes}, {"pass", res.all_pass()}};
}

} // namespace detail

/// Full command-line surface, callable in-process. `args` excludes argv[0].
inline int run(std::vector<std::string> args, std::istream& in = std::cin,
               std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"multipartite qudit states, purity-based entanglement detection, "
               "and mixture analysis",
               "qmix"};
  app.require_subcommand(1);
  int exit_code = exit_ok;

  // construct ------------------------------------------------------------
  auto* construct = app.add_subcommand("construct", "build a named state and emit its JSON");
  std::string family;
  construct->add_option("family", family, "bell | ghz | shifted | dicke | w | stormer")->required();
  std::string which = "psi+";
  int c_n = 0, c_d = 2, c_j = 1, c_m = 1;
  std::string c_sign;
  double c_alpha = 2.5;
  std::string c_output;
  construct->add_option("--which", which, "bell flavor: psi+ psi- phi+ phi-");
  construct->add_option("--n", c_n, "subsystem count");
  construct->add_option("--d", c_d, "local dimension (default 2)");
  construct->add_option("--sign", c_sign, "ghz sign, + or - (qubits only)");
  construct->add_option("--j", c_j, "shifted-site position, 1..n");
  construct->add_option("--m", c_m, "dicke excitation count");
  construct->add_option("--alpha", c_alpha, "stormer parameter, 0 <= alpha <= 5");
  construct->add_option("--output", c_output, "output file (default stdout)");
  construct->callback([&] {
    json j;
    if (family == "bell") {
      BellKind kind;
      if (which == "psi+") kind = BellKind::PsiPlus;
      else if (which == "psi-") kind = BellKind::PsiMinus;
      else if (which == "phi+") kind = BellKind::PhiPlus;
      else if (which == "phi-") kind = BellKind::PhiMinus;
      else throw CLI::ValidationError("--which must be one of psi+, psi-, phi+, phi-");
      j = state_to_json(bell_state(kind));
    } else if (family == "ghz") {
      std::optional<GhzSign> sign;
      if (!c_sign.empty()) {
        if (c_sign == "+") sign = GhzSign::Plus;
        else if (c_sign == "-") sign = GhzSign::Minus;
        else throw CLI::ValidationError("--sign must be + or -");
      }
      j = state_to_json(ghz_state(c_n, c_d, sign));
    } else if (family == "shifted") {
      j = state_to_json(shifted_state(c_n, c_d, c_j));
    } else if (family == "dicke") {
      j = state_to_json(dicke_state(c_n, c_m));
    } else if (family == "w") {
      j = state_to_json(w_state(c_n));
    } else if (family == "stormer") {
      j = state_to_json(stormer_state(c_alpha));
    } else {
      throw CLI::ValidationError("unknown family \"" + family +
                                 "\" (bell, ghz, shifted, dicke, w, stormer)");
    }
    detail::write_text(c_output, j.dump(2) + "\n", out);
  });

  // detect -----------------------------------------------------------------
  auto* det = app.add_subcommand("detect", "run every detector on a state file");
  std::string d_input, d_output;
  det->add_option("--input", d_input, "state JSON file, or - for stdin")->required();
  det->add_option("--output", d_output, "output file (default stdout)");
  det->callback([&] {
    const DensityMatrix rho = as_density(state_from_json(detail::read_json(d_input, in)));
    detail::write_text(d_output, to_json(detect(rho)).dump(2) + "\n", out);
  });

  // mix ----------------------------------------------------------------------
  auto* mix = app.add_subcommand("mix", "build a mixture and report purity, floor, Gram matrix, "
                                        "and class memberships");
  std::string m_spec, m_output, m_state_output;
  mix->add_option("--spec", m_spec, "mixture spec JSON file")->required();
  mix->add_option("--output", m_output, "report output file (default stdout)");
  mix->add_option("--state-output", m_state_output, "also write the mixed state JSON here");
  mix->callback([&] {
    const std::filesystem::path base =
        m_spec == "-" ? std::filesystem::path(".") : std::filesystem::path(m_spec).parent_path();
    const MixtureSpec spec = mixture_spec_from_json(detail::read_json(m_spec, in), base);
    const DensityMatrix rho = build_mixture(spec);

    const Eigen::MatrixXd gram = gram_overlaps(spec);
    json gram_json = json::array();
    for (int r = 0; r < gram.rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < gram.cols(); ++c) row.push_back(gram(r, c));
      gram_json.push_back(std::move(row));
    }

    json members = json::array();
    for (const PureState& phi : spec.states()) {
      members.push_back(to_json(class_membership(phi), phi.shape().subsystems()));
    }

    json j{{"shape", {{"n", spec.shape().subsystems()}, {"d", spec.shape().local_dim()}}},
           {"weights", spec.weights()},
           {"purity", mixture_purity(spec)},
           {"purity_via_state", purity(rho)},
           {"orthogonal_floor", purity_orthogonal_floor(spec.weights())},
           {"floor_gap", purity_floor_gap(spec)},
           {"gram_overlaps", std::move(gram_json)},
           {"memberships", std::move(members)},
           {"purity_criterion", to_json(purity_criterion(rho))}};
    if (spec.has_duplicates()) {
      j["warning"] = "spec contains duplicate states (unit off-diagonal Gram overlaps)";
    }
    detail::write_text(m_output, j.dump(2) + "\n", out);
    if (!m_state_output.empty()) {
      detail::write_text(m_state_output, state_to_json(rho).dump(2) + "\n", out);
    }
  });

  // theorem-check -------------------------------------------------------------
  auto* thm = app.add_subcommand("theorem-check", "evaluate one of the numbered theorems on a "
                                                  "mixture spec");
  int t_which = 0;
  std::string t_spec, t_output;
  thm->add_option("--theorem", t_which, "1, 2, or 3")->required()->check(CLI::Range(1, 3));
  thm->add_option("--spec", t_spec, "mixture spec JSON file")->required();
  thm->add_option("--output", t_output, "output file (default stdout)");
  thm->callback([&] {
    const std::filesystem::path base =
        t_spec == "-" ? std::filesystem::path(".") : std::filesystem::path(t_spec).parent_path();
    const MixtureSpec spec = mixture_spec_from_json(detail::read_json(t_spec, in), base);
    TheoremVerdict v;
    if (t_which == 1) v = check_theorem1(spec);
    else if (t_which == 2) v = check_theorem2(spec);
    else v = check_theorem3(spec);
    detail::write_text(t_output, to_json(v).dump(2) + "\n", out);
  });

  // fuzz ------------------------------------------------------------------------
  auto* fz = app.add_subcommand("fuzz", "randomized theorem verification batches");
  int f_which = 1, f_trials = 100;
  std::uint64_t f_seed = detail::default_seed();
  std::string f_output;
  fz->add_option("--theorem", f_which, "1, 2, or 3")->required()->check(CLI::Range(1, 3));
  fz->add_option("--trials", f_trials, "number of trials (default 100)");
  fz->add_option("--seed", f_seed, "base seed (default from QMIX_SEED, else fixed)");
  fz->add_option("--output", f_output, "output file (default stdout)");
  fz->callback([&] {
    const FuzzOutcome outcome = fuzz_theorem(f_which, f_trials, f_seed);
    detail::write_text(f_output, to_json(outcome).dump(2) + "\n", out);
    if (!outcome.all_passed()) exit_code = exit_contract;
  });

  // stormer-scan -------------------------------------------------------------------
  auto* scan = app.add_subcommand("stormer-scan", "CSV scan of the stormer family");
  double s_min = -2.0, s_max = 7.0, s_step = 0.5;
  std::string s_output;
  scan->add_option("--alpha-min", s_min, "grid start")->required();
  scan->add_option("--alpha-max", s_max, "grid end")->required();
  scan->add_option("--step", s_step, "grid step (> 0)")->required();
  scan->add_option("--output", s_output, "output file (default stdout)");
  scan->callback([&] {
    std::string csv = scan_csv_header() + "\n";
    for (const ScanRow& row : stormer_scan(s_min, s_max, s_step)) {
      csv += to_csv(row) + "\n";
    }
    detail::write_text(s_output, csv, out);
  });

  // reproduce ----------------------------------------------------------------------
  auto* rep = app.add_subcommand("reproduce", "re-derive a named worked example and check it");
  std::string r_case;
  std::string r_output;
  rep->add_option("case", r_case,
                  "rhoA | rhoB | bell-two-mix | bell-four-mix | dicke-marginals | "
                  "biseparable-control | stormer-boundary")
      ->required();
  rep->add_option("--output", r_output, "JSON output file (table always goes to stdout)");
  rep->callback([&] {
    const ReproduceResult res = reproduce_case(r_case);
    out << detail::render_table(res);
    if (!r_output.empty()) {
      detail::write_text(r_output, detail::reproduce_to_json(res).dump(2) + "\n", out);
    }
    if (!res.all_pass()) exit_code = exit_contract;
  });

  // ---------------------------------------------------------------------------------
  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const capacity_error& e) {
    err << "capacity error: " << e.what() << "\n";
    return exit_capacity;
  } catch (const json::parse_error& e) {
    err << "JSON parse error: " << e.what() << "\n";
    return exit_contract;
  } catch (const json::exception& e) {
    err << "JSON error: " << e.what() << "\n";
    return exit_contract;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return exit_contract;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_contract;
  }
  return exit_code;
}

} // namespace qmix::cli

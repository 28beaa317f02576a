#include "wfriend/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "wfriend/format.hpp"
#include "wfriend/hidden_qubit.hpp"
#include "wfriend/lhv.hpp"
#include "wfriend/protocol.hpp"
#include "wfriend/report.hpp"
#include "wfriend/roles.hpp"

namespace wfriend {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandOutput {
  RunReport report;
  std::string human;
  std::optional<std::string> csv;
  int exit_code = kExitOk;
};

std::string h6(double v) { return format_significant(v, 6); }

std::string h6(Amplitude a) {
  if (std::abs(a.imag()) < 1e-14) return h6(a.real());
  return h6(a.real()) + (a.imag() < 0 ? "-" : "+") + h6(std::abs(a.imag())) + "i";
}

const std::vector<std::string>& fbar_side_slots() {
  static const std::vector<std::string> s{slots::kCoin, slots::kFbarLab};
  return s;
}

CommandOutput cmd_decompositions() {
  CommandOutput out;
  out.report.command = "decompositions";
  const auto psi = fully_entangled();
  const auto decomps = decompositions(psi);
  const double discrepancy = max_reexpansion_discrepancy(psi, decomps);

  Json views = Json::array();
  for (const auto& d : decomps) views.push_back(to_json(d));
  out.report.results["decompositions"] = views;
  out.report.results["max_discrepancy"] = number(discrepancy);
  out.report.results["projections"] = projection_sequences_json();

  std::ostringstream h;
  h << "Expansions of the fully entangled state\n";
  for (const auto& d : decomps) {
    const auto [left, right] = bases_of(d.view);
    h << "\n  active agents (" << to_string(d.view) << "): " << to_string(left)
      << " x " << to_string(right) << '\n';
    for (const auto& t : d.terms) {
      if (!t.principal) continue;
      h << "    " << std::left << std::setw(8) << t.fbar_label << std::setw(6)
        << t.f_label << std::right << std::setw(12) << h6(t.value) << '\n';
    }
  }
  h << "\n  max re-expansion discrepancy: " << std::scientific
    << std::setprecision(3) << discrepancy << std::defaultfloat << '\n';

  h << "\nFriend projection sequences (Schmidt rank across Wbar|W sides)\n";
  for (auto coin : {CoinOutcome::Tails, CoinOutcome::Heads}) {
    for (auto spin : {SpinOutcome::Down, SpinOutcome::Up}) {
      h << "  " << std::left << std::setw(6) << to_string(coin) << std::setw(5)
        << to_string(spin) << std::right;
      try {
        const auto s = friend_projection_sequence(coin, spin);
        h << " rank " << schmidt_rank(s, fbar_side_slots()) << '\n';
      } catch (const ImpossibleOutcome&) {
        h << " impossible\n";
      }
    }
  }
  h << "\nWigner projection sequences\n";
  for (auto wbar : {WbarOutcome::OKbar, WbarOutcome::Failbar}) {
    for (auto w : {WOutcome::OK, WOutcome::Fail}) {
      const auto p = wigner_projection_sequence(wbar, w);
      h << "  " << std::left << std::setw(8) << to_string(wbar) << std::setw(5)
        << to_string(w) << std::right << " weight " << std::setw(9)
        << h6(p.weight) << "  rank " << schmidt_rank(p.state, fbar_side_slots())
        << '\n';
    }
  }
  out.human = h.str();
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read scenario file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RoleAssignment statement_roles(const Scenario& scenario) {
  for (auto name : {cast::kFbar, cast::kF}) {
    const Entity* e = scenario.find_entity(name);
    if (!e || e->kind != EntityKind::Friend) {
      throw InputError("scenario must declare '" + std::string(name) +
                       "' as a friend to evaluate the statements");
    }
  }
  RoleAssignment roles = canonical_roles(Role::System);
  for (const auto& [name, role] : scenario.roles.entries()) roles.set(name, role);
  return roles;
}

std::string describe_report(const StatementReport& r) {
  std::ostringstream h;
  h << "  [" << to_string(r.id) << "] " << std::left << std::setw(40)
    << statement(r.id).describe() << std::right;
  if (!r.evaluable) {
    h << "not evaluable\n      " << r.gate_reason << '\n';
    return h.str();
  }
  if (!r.holds) {
    h << "undefined\n";
  } else {
    h << (*r.holds ? "holds " : "fails ") << " p = " << h6(r.probability.value())
      << '\n';
  }
  if (!r.note.empty()) h << "      " << r.note << '\n';
  return h.str();
}

CommandOutput cmd_statements(const std::string& path, bool bypass) {
  const std::string text = read_file(path);
  Scenario scenario;
  try {
    scenario = parse_scenario(text);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ":" +
                     std::to_string(e.column()) + ": error: " + e.message());
  }
  const RoleAssignment roles = statement_roles(scenario);
  const GateMode mode = bypass ? GateMode::Bypassed : GateMode::Enforced;

  CommandOutput out;
  out.report.command = "statements";
  out.report.inputs["scenario"] = to_json(scenario);
  out.report.inputs["bypass_gate"] = bypass;

  GateVerdict plan_verdict;
  try {
    plan_verdict = gate_check(scenario.roles, scenario.plan);
  } catch (const std::out_of_range& e) {
    throw InputError(e.what());
  }
  const AuditReport audit = contradiction_audit(roles, mode);
  out.report.results["plan_verdict"] = to_json(plan_verdict);
  out.report.results["audit"] = to_json(audit);

  std::ostringstream h;
  const std::string banner =
      "!!! GATE BYPASSED: agents are also treated as measured systems. This "
      "run violates the agreement assumption and is a diagnostic only. !!!\n";
  if (bypass) h << banner << '\n';

  h << "Scenario plan: " << (plan_verdict.admitted ? "admitted" : "rejected")
    << '\n';
  for (const auto& v : plan_verdict.violations) {
    h << "  measurement " << v.measurement << ": " << v.reason << '\n';
  }
  h << "\nStatements (Fbar " << to_string(roles.role_of(cast::kFbar)) << ", F "
    << to_string(roles.role_of(cast::kF)) << ")\n";
  for (const auto& r : audit.statements) h << describe_report(r);
  if (!audit.incompatible_pairs.empty()) {
    h << "\nIncompatible statement pairs:";
    for (const auto& [a, b] : audit.incompatible_pairs) {
      h << ' ' << to_string(a) << '/' << to_string(b);
    }
    h << '\n';
  }
  if (!audit.chain.empty()) {
    h << "\nInference chain\n";
    for (const auto& step : audit.chain) h << "  " << step << '\n';
  }
  h << "\nAudit: " << audit.verdict << '\n';
  for (const auto& n : audit.notes) h << "  note: " << n << '\n';

  if (scenario.hidden_overlap) {
    const auto st = wigner_statistics(HiddenQubitModel(*scenario.hidden_overlap));
    out.report.results["hidden_qubit"] = to_json(st);
    h << "\nHidden qubit, overlap " << h6(st.gamma) << ": P(up|OKbar) = "
      << h6(st.p_up_given_okbar) << ", P(heads|OK) = " << h6(st.p_heads_given_ok)
      << ", P(OKbar,OK) = " << h6(st.p_okbar_and_ok) << '\n';
  }
  if (audit.contradiction) {
    h << "\nCONTRADICTION\n";
    out.exit_code = kExitContradiction;
  }
  if (bypass) h << '\n' << banner;
  out.human = h.str();
  return out;
}

CommandOutput cmd_hidden_qubit(std::optional<double> gamma, std::optional<int> steps) {
  CommandOutput out;
  out.report.command = "hidden-qubit";
  std::ostringstream h;
  if (gamma) {
    out.report.inputs["gamma"] = number(*gamma);
    const HiddenQubitModel model(*gamma);
    const auto st = wigner_statistics(model);
    out.report.results["statistics"] = to_json(st);

    Json expansion = Json::array();
    const auto exp = wigner_expansion(model);
    const auto wl = principal_labels(BasisId::Sbar);
    const auto ol = principal_labels(BasisId::S);
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        Json row = Json::object();
        row["wbar"] = wl[a];
        row["w"] = ol[b];
        row["hG"] = amplitude_json(exp[a][b].amplitude(0));
        row["gperp"] = amplitude_json(exp[a][b].amplitude(1));
        expansion.push_back(row);
      }
    }
    out.report.results["expansion"] = expansion;

    h << "Hidden qubit, overlap <h_G|t_G> = " << h6(*gamma) << '\n'
      << "  P(OKbar,OK)  = " << h6(st.p_okbar_and_ok) << '\n'
      << "  P(OKbar)     = " << h6(st.p_okbar) << '\n'
      << "  P(up|OKbar)  = " << h6(st.p_up_given_okbar) << '\n'
      << "  P(heads|OK)  = " << h6(st.p_heads_given_ok) << '\n'
      << "\n  components along G (hG, gperp)\n";
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        h << "    " << std::left << std::setw(8) << wl[a] << std::setw(5) << ol[b]
          << std::right << std::setw(11) << h6(exp[a][b].amplitude(0))
          << std::setw(11) << h6(exp[a][b].amplitude(1)) << '\n';
      }
    }

    if (std::abs(*gamma) <= kExactTol) {
      Json proj = Json::array();
      for (auto which : {HiddenBranch::HG, HiddenBranch::TG}) {
        const auto p = project_on_hidden(model, which);
        Json j = Json::object();
        j["branch"] = which == HiddenBranch::HG ? "hG" : "tG";
        j["weight"] = number(p.weight);
        j["schmidt_rank"] = schmidt_rank(p.state, {slots::kCoin});
        proj.push_back(j);
        h << "  project on " << (which == HiddenBranch::HG ? "hG" : "tG")
          << ": weight " << h6(p.weight) << '\n';
      }
      out.report.results["hidden_projections"] = proj;
    }
    out.csv = sweep_csv({{*gamma, st.p_up_given_okbar, st.p_heads_given_ok,
                          st.p_okbar_and_ok}});
  } else {
    out.report.inputs["sweep"] = *steps;
    const auto rows = overlap_sweep(*steps);
    Json j = Json::array();
    for (const auto& r : rows) j.push_back(to_json(r));
    out.report.results["sweep"] = j;
    h << std::setw(10) << "gamma" << std::setw(14) << "P(up|OKbar)"
      << std::setw(14) << "P(heads|OK)" << std::setw(14) << "P(OKbar,OK)" << '\n';
    for (const auto& r : rows) {
      h << std::setw(10) << h6(r.gamma) << std::setw(14) << h6(r.p_up_given_okbar)
        << std::setw(14) << h6(r.p_heads_given_ok) << std::setw(14)
        << h6(r.p_okbar_and_ok) << '\n';
    }
    out.csv = sweep_csv(rows);
  }
  out.human = h.str();
  return out;
}

CommandOutput cmd_lhv() {
  CommandOutput out;
  out.report.command = "lhv";
  const auto generated = universal_constraints();
  const auto reference = reference_constraints();
  const auto result = verdict();

  Json constraints = Json::array();
  for (const auto& c : generated) constraints.push_back(to_json(c));
  out.report.results["constraints"] = constraints;
  out.report.results["constraints_match_reference"] = generated == reference;
  out.report.results["verdict"] = to_json(result);

  std::ostringstream h;
  h << "Universal constraints read off the state\n";
  for (const auto& c : generated) h << "  " << c.describe() << '\n';
  h << "\nAdmissible deterministic assignments (Fbar, F, Wbar, W): "
    << result.admissible.size() << " of 16\n";
  for (const auto& a : result.admissible) h << "  " << a.describe() << '\n';
  h << "\nmax achievable P(OKbar,OK): " << h6(result.max_ok_ok_fraction) << '\n'
    << "quantum prediction:         " << h6(result.qm_prediction) << '\n'
    << "local hidden variables "
    << (result.contradiction ? "cannot reproduce the prediction" : "suffice")
    << '\n';
  out.human = h.str();
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Wigner's-friend protocol analyses"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "human";
  std::string output_path;
  app.add_option("--format", format, "human, machine or csv")
      ->check(CLI::IsMember({"human", "machine", "csv"}));
  app.add_option("--output", output_path, "write the report to this file");

  auto* decomp = app.add_subcommand("decompositions",
                                    "expansions of the state in all viewpoints");

  auto* statements = app.add_subcommand("statements",
                                        "evaluate the four statements for a scenario");
  std::string scenario_path;
  bool bypass = false;
  statements->add_option("file", scenario_path, "scenario file")->required();
  statements->add_flag("--bypass-gate", bypass,
                       "ignore roles (violates the agreement assumption)");

  auto* hidden = app.add_subcommand("hidden-qubit", "hidden-qubit statistics");
  double gamma = 0.0;
  int steps = 0;
  auto* gamma_opt = hidden->add_option("--gamma", gamma, "overlap in [0,1]")
                        ->check(CLI::Range(0.0, 1.0));
  auto* sweep_opt = hidden->add_option("--sweep", steps, "number of grid points")
                        ->check(CLI::Range(2, 1000000));
  gamma_opt->excludes(sweep_opt);
  hidden->require_option(1);

  auto* lhv = app.add_subcommand("lhv", "local hidden-variable scan");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  CommandOutput result;
  try {
    if (*decomp) {
      result = cmd_decompositions();
    } else if (*statements) {
      result = cmd_statements(scenario_path, bypass);
    } else if (*hidden) {
      result = cmd_hidden_qubit(
          gamma_opt->count() ? std::optional<double>(gamma) : std::nullopt,
          sweep_opt->count() ? std::optional<int>(steps) : std::nullopt);
    } else if (*lhv) {
      result = cmd_lhv();
    }
  } catch (const InputError& e) {
    err << e.what() << '\n';
    return kExitInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  result.report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                start)
          .count();

  std::string document;
  if (format == "machine") {
    document = to_machine(result.report);
  } else if (format == "csv") {
    if (!result.csv) {
      err << "error: --format csv is only available for hidden-qubit\n";
      return kExitInputError;
    }
    document = *result.csv;
  } else {
    std::ostringstream h;
    h << result.human << "\n(elapsed " << std::fixed << std::setprecision(3)
      << result.report.elapsed_ms << " ms)\n";
    document = h.str();
  }

  if (output_path.empty()) {
    out << document;
  } else {
    std::ofstream file(output_path, std::ios::binary);
    if (!file || !(file << document)) {
      err << "error: cannot write '" << output_path << "'\n";
      return kExitInputError;
    }
  }
  return result.exit_code;
}

}  // namespace wfriend

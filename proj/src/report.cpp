#include "wfriend/report.hpp"

#include "wfriend/format.hpp"

namespace wfriend {

Json number(double value) { return round_significant(value); }

Json amplitude_json(Amplitude a) {
  Json j = Json::object();
  j["re"] = number(a.real());
  j["im"] = number(a.imag());
  return j;
}

std::string to_machine(const RunReport& report) {
  Json doc = Json::object();
  doc["command"] = report.command;
  doc["inputs"] = report.inputs;
  doc["results"] = report.results;
  return doc.dump(2) + "\n";
}

Json to_json(const Scenario& scenario) {
  Json j = Json::object();
  Json entities = Json::array();
  for (const auto& e : scenario.entities) {
    entities.push_back({{"name", e.name},
                        {"kind", to_string(e.kind)},
                        {"role", to_string(scenario.roles.role_of(e.name))}});
  }
  j["entities"] = entities;
  Json plan = Json::array();
  for (const auto& m : scenario.plan) {
    plan.push_back({{"actor", m.actor},
                    {"targets", m.targets},
                    {"basis", to_string(m.basis)}});
  }
  j["plan"] = plan;
  j["hidden_qubit_overlap"] =
      scenario.hidden_overlap ? number(*scenario.hidden_overlap) : Json(nullptr);
  j["canonical_text"] = serialize_scenario(scenario);
  return j;
}

Json to_json(const GateVerdict& verdict) {
  Json j = Json::object();
  j["admitted"] = verdict.admitted;
  Json v = Json::array();
  for (const auto& x : verdict.violations) {
    v.push_back({{"measurement", x.measurement},
                 {"entity", x.entity},
                 {"reason", x.reason}});
  }
  j["violations"] = v;
  return j;
}

Json to_json(const Decomposition& d) {
  const auto [left, right] = bases_of(d.view);
  Json j = Json::object();
  j["viewpoint"] = to_string(d.view);
  j["fbar_side_basis"] = to_string(left);
  j["f_side_basis"] = to_string(right);
  Json terms = Json::array();
  for (const auto& t : d.terms) {
    if (!t.principal) continue;
    Json term = Json::object();
    term["fbar_side"] = t.fbar_label;
    term["f_side"] = t.f_label;
    term["coefficient"] = amplitude_json(t.value);
    terms.push_back(term);
  }
  j["terms"] = terms;
  return j;
}

namespace {

Json roles_json(const RoleAssignment& roles) {
  Json j = Json::object();
  for (const auto& [name, role] : roles.entries()) j[name] = to_string(role);
  return j;
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, double>) {
    return number(*v);
  } else {
    return *v;
  }
}

// Principal-outcome coefficients of a protocol-space state in the given pair
// of bases.
Json coefficient_table(const StateVector& state, BasisId left, BasisId right) {
  Json rows = Json::array();
  for (const auto& a : principal_labels(left)) {
    for (const auto& b : principal_labels(right)) {
      const auto c =
          inner_product(tensor(side_vector(left, a), side_vector(right, b)), state);
      Json row = Json::object();
      row["fbar_side"] = a;
      row["f_side"] = b;
      row["coefficient"] = amplitude_json(c);
      rows.push_back(row);
    }
  }
  return rows;
}

const std::vector<std::string>& fbar_side_slots() {
  static const std::vector<std::string> s{slots::kCoin, slots::kFbarLab};
  return s;
}

}  // namespace

Json to_json(const StatementReport& r) {
  Json j = Json::object();
  j["id"] = to_string(r.id);
  j["statement"] = statement(r.id).describe();
  j["roles"] = roles_json(r.roles);
  j["evaluable"] = r.evaluable;
  j["holds"] = optional_json(r.holds);
  j["probability"] = optional_json(r.probability);
  j["violation_probability"] = optional_json(r.violation_probability);
  j["gate_reason"] = r.gate_reason;
  j["note"] = r.note;
  return j;
}

Json to_json(const AuditReport& audit) {
  Json j = Json::object();
  j["gate"] = audit.mode == GateMode::Enforced ? "enforced" : "bypassed";
  if (audit.mode == GateMode::Bypassed) {
    j["watermark"] =
        "GATE BYPASSED: agents are also treated as measured systems; this "
        "output violates the agreement assumption and is a diagnostic only";
  }
  j["roles"] = roles_json(audit.roles);
  Json statements = Json::array();
  for (const auto& s : audit.statements) statements.push_back(to_json(s));
  j["statements"] = statements;
  Json pairs = Json::array();
  for (const auto& [a, b] : audit.incompatible_pairs) {
    pairs.push_back({to_string(a), to_string(b)});
  }
  j["incompatible_pairs"] = pairs;
  j["chain"] = audit.chain;
  j["contradiction"] = audit.contradiction;
  j["verdict"] = audit.verdict;
  j["notes"] = audit.notes;
  return j;
}

Json to_json(const WignerStatistics& st) {
  Json j = Json::object();
  j["gamma"] = number(st.gamma);
  j["p_okbar_ok"] = number(st.joint[0][0]);
  j["p_okbar_fail"] = number(st.joint[0][1]);
  j["p_failbar_ok"] = number(st.joint[1][0]);
  j["p_failbar_fail"] = number(st.joint[1][1]);
  j["p_okbar"] = number(st.p_okbar);
  j["p_ok"] = number(st.p_ok);
  j["p_up_given_okbar"] = number(st.p_up_given_okbar);
  j["p_heads_given_ok"] = number(st.p_heads_given_ok);
  j["p_okbar_and_ok_g_perp"] = number(st.p_okbar_and_ok_g_perp);
  return j;
}

Json to_json(const SweepRow& row) {
  Json j = Json::object();
  j["gamma"] = number(row.gamma);
  j["p_up_given_okbar"] = number(row.p_up_given_okbar);
  j["p_heads_given_ok"] = number(row.p_heads_given_ok);
  j["p_okbar_and_ok"] = number(row.p_okbar_and_ok);
  return j;
}

Json to_json(const LhvAssignment& a) {
  Json j = Json::object();
  j["fbar"] = a.value(BasisId::Nbar);
  j["f"] = a.value(BasisId::N);
  j["wbar"] = a.value(BasisId::Sbar);
  j["w"] = a.value(BasisId::S);
  return j;
}

Json to_json(const ForbiddenPair& c) {
  Json j = Json::object();
  j["first_basis"] = to_string(c.first);
  j["first_outcome"] = c.first_outcome;
  j["second_basis"] = to_string(c.second);
  j["second_outcome"] = c.second_outcome;
  j["reads"] = c.describe();
  return j;
}

Json to_json(const LhvResult& r) {
  Json j = Json::object();
  Json admissible = Json::array();
  for (const auto& a : r.admissible) admissible.push_back(to_json(a));
  j["admissible"] = admissible;
  j["max_ok_ok_fraction"] = number(r.max_ok_ok_fraction);
  j["qm_prediction"] = number(r.qm_prediction);
  j["contradiction"] = r.contradiction;
  return j;
}

Json projection_sequences_json() {
  Json friends = Json::array();
  for (auto coin : {CoinOutcome::Tails, CoinOutcome::Heads}) {
    for (auto spin : {SpinOutcome::Down, SpinOutcome::Up}) {
      Json j = Json::object();
      j["coin"] = to_string(coin);
      j["spin"] = to_string(spin);
      try {
        const StateVector s = friend_projection_sequence(coin, spin);
        j["possible"] = true;
        j["schmidt_rank"] = schmidt_rank(s, fbar_side_slots());
        j["wigner_basis_coefficients"] =
            coefficient_table(s, BasisId::Sbar, BasisId::S);
      } catch (const ImpossibleOutcome& e) {
        j["possible"] = false;
        j["reason"] = e.what();
      }
      friends.push_back(j);
    }
  }

  Json wigners = Json::array();
  for (auto wbar : {WbarOutcome::OKbar, WbarOutcome::Failbar}) {
    for (std::optional<WOutcome> w :
         {std::optional<WOutcome>{}, std::optional{WOutcome::OK},
          std::optional{WOutcome::Fail}}) {
      const auto p = wigner_projection_sequence(wbar, w);
      Json j = Json::object();
      j["wbar"] = to_string(wbar);
      j["w"] = w ? Json(to_string(*w)) : Json(nullptr);
      j["weight"] = number(p.weight);
      j["schmidt_rank"] = schmidt_rank(p.state, fbar_side_slots());
      j["friend_basis_coefficients"] =
          coefficient_table(p.state, BasisId::Nbar, BasisId::N);
      wigners.push_back(j);
    }
  }

  Json j = Json::object();
  j["friend_sequences"] = friends;
  j["wigner_sequences"] = wigners;
  return j;
}

}  // namespace wfriend

#include "wfriend/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace wfriend {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);
const double kSqrt2Over3 = std::sqrt(2.0 / 3.0);

StateVector two_slot(const FactorSpace& space, double c_correlated0,
                     double c_correlated1) {
  const auto& a = space.slot(0).labels;
  const auto& b = space.slot(1).labels;
  return make_state(space, {{c_correlated0, {a[0], b[0]}},
                            {c_correlated1, {a[1], b[1]}}});
}

StateVector anti(const FactorSpace& space, double sign) {
  const auto& a = space.slot(0).labels;
  const auto& b = space.slot(1).labels;
  return make_state(space, {{kInvSqrt2, {a[0], b[1]}},
                            {sign * kInvSqrt2, {a[1], b[0]}}});
}

MeasurementBasis side_basis(const FactorSpace& space, const std::string& first,
                            const std::string& second, bool superposed) {
  std::vector<BasicOutcome<double>> out;
  if (superposed) {
    // first = (|00> - |11>)/sqrt2, second = (|00> + |11>)/sqrt2
    out.push_back({first, two_slot(space, kInvSqrt2, -kInvSqrt2)});
    out.push_back({second, two_slot(space, kInvSqrt2, kInvSqrt2)});
  } else {
    out.push_back({first, two_slot(space, 1.0, 0.0)});
    out.push_back({second, two_slot(space, 0.0, 1.0)});
  }
  out.push_back({"anti+", anti(space, 1.0)});
  out.push_back({"anti-", anti(space, -1.0)});
  return MeasurementBasis(std::move(out));
}

}  // namespace

const Slot& coin_slot() {
  static const Slot s{slots::kCoin, {"h", "t"}};
  return s;
}
const Slot& fbar_lab_slot() {
  static const Slot s{slots::kFbarLab, {"h", "t"}};
  return s;
}
const Slot& spin_slot() {
  static const Slot s{slots::kSpin, {"down", "up"}};
  return s;
}
const Slot& f_lab_slot() {
  static const Slot s{slots::kFLab, {"down", "up"}};
  return s;
}
const Slot& wbar_lab_slot() {
  static const Slot s{slots::kWbarLab, {"OKbar", "failbar"}};
  return s;
}
const Slot& w_lab_slot() {
  static const Slot s{slots::kWLab, {"OK", "fail"}};
  return s;
}

const FactorSpace& fbar_side_space() {
  static const FactorSpace s{coin_slot(), fbar_lab_slot()};
  return s;
}
const FactorSpace& f_side_space() {
  static const FactorSpace s{spin_slot(), f_lab_slot()};
  return s;
}
const FactorSpace& protocol_space() {
  static const FactorSpace s = fbar_side_space().concat(f_side_space());
  return s;
}

const MeasurementBasis& basis(BasisId id) {
  static const MeasurementBasis nbar =
      side_basis(fbar_side_space(), "heads", "tails", false);
  static const MeasurementBasis sbar =
      side_basis(fbar_side_space(), "OKbar", "failbar", true);
  static const MeasurementBasis n =
      side_basis(f_side_space(), "down", "up", false);
  static const MeasurementBasis s = side_basis(f_side_space(), "OK", "fail", true);
  switch (id) {
    case BasisId::Nbar: return nbar;
    case BasisId::Sbar: return sbar;
    case BasisId::N: return n;
    case BasisId::S: return s;
  }
  throw std::invalid_argument("unknown basis id");
}

std::array<std::string, 2> principal_labels(BasisId id) {
  switch (id) {
    case BasisId::Nbar: return {"heads", "tails"};
    case BasisId::Sbar: return {"OKbar", "failbar"};
    case BasisId::N: return {"down", "up"};
    case BasisId::S: return {"OK", "fail"};
  }
  throw std::invalid_argument("unknown basis id");
}

bool on_fbar_side(BasisId id) {
  return id == BasisId::Nbar || id == BasisId::Sbar;
}

const StateVector& side_vector(BasisId id, std::string_view label) {
  return basis(id).outcome(label).vector;
}

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::CoinOnly: return "CoinOnly";
    case Stage::FriendEntangled: return "FriendEntangled";
    case Stage::SpinPrepared: return "SpinPrepared";
    case Stage::FullyEntangled: return "FullyEntangled";
    case Stage::WithPointers: return "WithPointers";
  }
  return "?";
}

std::vector<ProtocolState> build_protocol() {
  std::vector<ProtocolState> out;
  const FactorSpace coin{coin_slot()};
  out.push_back({Stage::CoinOnly,
                 make_state(coin, {{kInvSqrt3, {"h"}}, {kSqrt2Over3, {"t"}}})});

  out.push_back({Stage::FriendEntangled,
                 make_state(fbar_side_space(), {{kInvSqrt3, {"h", "h"}},
                                                {kSqrt2Over3, {"t", "t"}}})});

  // Heads prepares |down>, tails prepares (|down> + |up>)/sqrt2.
  const FactorSpace spin3 = fbar_side_space().concat(FactorSpace{spin_slot()});
  out.push_back({Stage::SpinPrepared,
                 make_state(spin3, {{kInvSqrt3, {"h", "h", "down"}},
                                    {kSqrt2Over3 * kInvSqrt2, {"t", "t", "down"}},
                                    {kSqrt2Over3 * kInvSqrt2, {"t", "t", "up"}}})});

  out.push_back(fully_entangled());
  return out;
}

ProtocolState fully_entangled() {
  return {Stage::FullyEntangled,
          make_state(protocol_space(),
                     {{kInvSqrt3, {"h", "h", "down", "down"}},
                      {kInvSqrt3, {"t", "t", "down", "down"}},
                      {kInvSqrt3, {"t", "t", "up", "up"}}})};
}

ProtocolState with_pointers() {
  const StateVector psi = fully_entangled().state;
  const FactorSpace pointers{wbar_lab_slot(), w_lab_slot()};
  const FactorSpace space = protocol_space().concat(pointers);
  StateVector total(space, StateVector::Vector::Zero(space.dimension()));
  for (const auto& a : principal_labels(BasisId::Sbar)) {
    for (const auto& b : principal_labels(BasisId::S)) {
      const StateVector branch =
          tensor(side_vector(BasisId::Sbar, a), side_vector(BasisId::S, b));
      const Amplitude c = inner_product(branch, psi);
      total = total + c * tensor(branch, StateVector::basis(pointers, {a, b}));
    }
  }
  return {Stage::WithPointers, total};
}

std::string_view to_string(Viewpoint view) {
  switch (view) {
    case Viewpoint::FbarF: return "Fbar,F";
    case Viewpoint::WbarF: return "Wbar,F";
    case Viewpoint::FbarW: return "Fbar,W";
    case Viewpoint::WbarW: return "Wbar,W";
  }
  return "?";
}

std::pair<BasisId, BasisId> bases_of(Viewpoint view) {
  switch (view) {
    case Viewpoint::FbarF: return {BasisId::Nbar, BasisId::N};
    case Viewpoint::WbarF: return {BasisId::Sbar, BasisId::N};
    case Viewpoint::FbarW: return {BasisId::Nbar, BasisId::S};
    case Viewpoint::WbarW: return {BasisId::Sbar, BasisId::S};
  }
  throw std::invalid_argument("unknown viewpoint");
}

Amplitude Decomposition::coefficient(std::string_view fbar_label,
                                     std::string_view f_label) const {
  for (const auto& t : terms) {
    if (t.fbar_label == fbar_label && t.f_label == f_label) return t.value;
  }
  throw ContractError("no term (" + std::string(fbar_label) + ", " +
                      std::string(f_label) + ") in decomposition");
}

std::array<Decomposition, 4> decompositions(const ProtocolState& state) {
  if (state.stage != Stage::FullyEntangled) {
    throw ContractError("decompositions need the FullyEntangled stage, got " +
                        std::string(to_string(state.stage)));
  }
  const auto& psi = state.state;
  auto expand = [&](Viewpoint view) {
    const auto [left_id, right_id] = bases_of(view);
    const auto left_principal = principal_labels(left_id);
    const auto right_principal = principal_labels(right_id);
    auto is_principal = [](const auto& labels, const std::string& l) {
      return l == labels[0] || l == labels[1];
    };
    Decomposition d{view, {},
                    StateVector(psi.space(),
                                StateVector::Vector::Zero(psi.dimension()))};
    for (const auto& a : basis(left_id).outcomes()) {
      for (const auto& b : basis(right_id).outcomes()) {
        const StateVector ab = tensor(a.vector, b.vector);
        const Amplitude c = inner_product(ab, psi);
        d.terms.push_back({a.label, b.label, c,
                           is_principal(left_principal, a.label) &&
                               is_principal(right_principal, b.label)});
        d.reexpanded = d.reexpanded + c * ab;
      }
    }
    return d;
  };
  return {expand(Viewpoint::FbarF), expand(Viewpoint::WbarF),
          expand(Viewpoint::FbarW), expand(Viewpoint::WbarW)};
}

double max_reexpansion_discrepancy(const ProtocolState& state,
                                   const std::array<Decomposition, 4>& decomps) {
  double worst = 0.0;
  for (const auto& d : decomps) {
    worst = std::max(worst, max_abs_difference(d.reexpanded, state.state));
    for (const auto& other : decomps) {
      worst = std::max(worst, max_abs_difference(d.reexpanded, other.reexpanded));
    }
  }
  return worst;
}

// Statements ------------------------------------------------------------------

std::string_view to_string(StatementId id) {
  switch (id) {
    case StatementId::A: return "A";
    case StatementId::B: return "B";
    case StatementId::C: return "C";
    case StatementId::D: return "D";
  }
  return "?";
}

Statement statement(StatementId id) {
  switch (id) {
    case StatementId::A:
      return {id, Conditional{{BasisId::N, "up"}, {BasisId::Nbar, "tails"}}};
    case StatementId::B:
      return {id, Conditional{{BasisId::Sbar, "OKbar"}, {BasisId::N, "up"}}};
    case StatementId::C:
      return {id, Conditional{{BasisId::S, "OK"}, {BasisId::Nbar, "heads"}}};
    case StatementId::D:
      return {id, JointPossibility{{BasisId::Sbar, "OKbar"},
                                   {BasisId::S, "OK"},
                                   1.0 / 12.0}};
  }
  throw std::invalid_argument("unknown statement id");
}

std::array<Statement, 4> all_statements() {
  return {statement(StatementId::A), statement(StatementId::B),
          statement(StatementId::C), statement(StatementId::D)};
}

std::string Statement::describe() const {
  if (const auto* c = std::get_if<Conditional>(&form)) {
    return "if " + c->condition.outcome + " then " + c->consequence.outcome;
  }
  const auto& j = std::get<JointPossibility>(form);
  return j.first.outcome + " and " + j.second.outcome + " with probability 1/12";
}

std::vector<BasisId> Statement::bases() const {
  if (const auto* c = std::get_if<Conditional>(&form)) {
    return {c->condition.basis, c->consequence.basis};
  }
  const auto& j = std::get<JointPossibility>(form);
  return {j.first.basis, j.second.basis};
}

std::vector<MeasurementSpec> required_measurements(const Statement& s,
                                                   const RoleAssignment& roles) {
  const std::string coin(cast::kCoin), spin(cast::kSpin);
  const std::string fbar(cast::kFbar), f(cast::kF);
  const std::string wbar(cast::kWbar), w(cast::kW);
  std::vector<MeasurementSpec> plan;
  for (BasisId b : s.bases()) {
    switch (b) {
      case BasisId::Nbar:
        if (roles.role_of(fbar) == Role::Agent) {
          plan.push_back({fbar, {coin}, b});
        } else {
          plan.push_back({wbar, {coin, fbar}, b});
        }
        break;
      case BasisId::N:
        if (roles.role_of(f) == Role::Agent) {
          plan.push_back({f, {spin}, b});
        } else {
          plan.push_back({w, {spin, f}, b});
        }
        break;
      case BasisId::Sbar:
        plan.push_back({wbar, {coin, fbar}, b});
        break;
      case BasisId::S:
        plan.push_back({w, {spin, f}, b});
        break;
    }
  }
  return plan;
}

namespace {

struct EventPair {
  const Event* fbar_side;
  const Event* f_side;
};

EventPair split_sides(const Event& a, const Event& b) {
  const bool a_left = on_fbar_side(a.basis);
  if (a_left == on_fbar_side(b.basis)) {
    throw ContractError("statement events must sit on opposite sides");
  }
  return a_left ? EventPair{&a, &b} : EventPair{&b, &a};
}

// Joint Born probabilities over the product of the two sides' bases, keyed by
// (fbar-side label, f-side label).
std::map<std::pair<std::string, std::string>, double> joint_distribution(
    const StateVector& state, const MeasurementBasis& left,
    const MeasurementBasis& right) {
  std::map<std::pair<std::string, std::string>, double> out;
  for (const auto& a : left.outcomes()) {
    for (const auto& b : right.outcomes()) {
      const StateVector ab = tensor(a.vector, b.vector);
      double p;
      if (ab.space() == state.space()) {
        p = std::norm(inner_product(ab, state));
      } else {
        p = partial_inner_product(ab, state).squared_norm();
      }
      out[{a.label, b.label}] = p;
    }
  }
  return out;
}

}  // namespace

StatementReport evaluate_on_state(const Statement& s, const StateVector& state,
                                  const BasisLookup& bases) {
  if (!state.is_normalized()) {
    throw ContractError("statement evaluation requires a normalized state");
  }
  StatementReport r;
  r.id = s.id;
  r.evaluable = true;

  if (const auto* c = std::get_if<Conditional>(&s.form)) {
    const auto sides = split_sides(c->condition, c->consequence);
    const auto& left = bases(sides.fbar_side->basis);
    const auto& right = bases(sides.f_side->basis);
    const auto joint = joint_distribution(state, left, right);
    const bool condition_left = sides.fbar_side == &c->condition;

    double p_condition = 0.0, p_both = 0.0;
    for (const auto& [labels, p] : joint) {
      const std::string& cond_label = condition_left ? labels.first : labels.second;
      const std::string& cons_label = condition_left ? labels.second : labels.first;
      if (cond_label != c->condition.outcome) continue;
      p_condition += p;
      if (cons_label == c->consequence.outcome) p_both += p;
    }
    r.violation_probability = p_condition - p_both;
    if (p_condition < kExactTol) {
      r.note = "condition '" + c->condition.outcome +
               "' has zero probability; the conditional is undefined";
      return r;
    }
    r.probability = p_both / p_condition;
    r.holds = std::abs(*r.probability - 1.0) <= kDerivedTol;
  } else {
    const auto& j = std::get<JointPossibility>(s.form);
    const auto sides = split_sides(j.first, j.second);
    const auto joint = joint_distribution(state, bases(sides.fbar_side->basis),
                                          bases(sides.f_side->basis));
    const double p = joint.at({sides.fbar_side->outcome, sides.f_side->outcome});
    r.probability = p;
    r.holds = std::abs(p - j.probability) <= kDerivedTol;
  }
  return r;
}

StatementReport evaluate_statement(const Statement& s, const RoleAssignment& roles,
                                   GateMode mode) {
  StatementReport r;
  if (mode == GateMode::Enforced) {
    const auto plan = required_measurements(s, roles);
    const auto verdict = gate_check(roles, plan);
    if (!verdict.admitted) {
      r.id = s.id;
      r.roles = roles;
      r.evaluable = false;
      std::string reason = "statement " + std::string(to_string(s.id)) +
                           " needs measurements the gate refuses: ";
      for (std::size_t i = 0; i < verdict.violations.size(); ++i) {
        if (i) reason += "; ";
        reason += verdict.violations[i].reason;
      }
      r.gate_reason = reason;
      return r;
    }
  }
  r = evaluate_on_state(s, fully_entangled().state,
                        [](BasisId id) -> const MeasurementBasis& { return basis(id); });
  r.roles = roles;
  if (mode == GateMode::Bypassed) {
    r.note = "gate bypassed: roles ignored, violates the agents' agreement on what the system is";
  } else if ((s.id == StatementId::B || s.id == StatementId::C) &&
             roles.role_of(cast::kFbar) == Role::System) {
    r.note = "friends are systems here: heads/up refer to the coin/spin records "
             "read by the Wigners, not to results the friends hold";
  }
  return r;
}

bool compatible(const Statement& a, const Statement& b) {
  for (BasisId x : a.bases()) {
    for (BasisId y : b.bases()) {
      if (x == y) continue;
      if (on_fbar_side(x) != on_fbar_side(y)) continue;  // disjoint slots
      if (!bases_commute(basis(x), basis(y), protocol_space())) return false;
    }
  }
  return true;
}

namespace {

// Forward chaining from D through the conditionals. After every firing the
// scan restarts from the first conditional.
void run_chain(const std::vector<StatementReport>& reports, AuditReport& audit) {
  auto holds = [&](StatementId id) {
    for (const auto& r : reports) {
      if (r.id == id) return r.holds.value_or(false);
    }
    return false;
  };
  if (!holds(StatementId::D)) return;

  const auto d = std::get<JointPossibility>(statement(StatementId::D).form);
  std::map<BasisId, std::string> facts{{d.first.basis, d.first.outcome},
                                       {d.second.basis, d.second.outcome}};
  audit.chain.push_back("D: " + d.first.outcome + " and " + d.second.outcome +
                        " occur together (p = 1/12)");

  std::vector<StatementId> fired;
  bool progress = true;
  while (progress && !audit.contradiction) {
    progress = false;
    for (StatementId id : {StatementId::A, StatementId::B, StatementId::C}) {
      if (!holds(id) ||
          std::find(fired.begin(), fired.end(), id) != fired.end()) {
        continue;
      }
      const auto c = std::get<Conditional>(statement(id).form);
      auto known = facts.find(c.condition.basis);
      if (known == facts.end() || known->second != c.condition.outcome) continue;

      fired.push_back(id);
      progress = true;
      std::string step = std::string(to_string(id)) + ": " + c.condition.outcome +
                         " => " + c.consequence.outcome;
      auto prior = facts.find(c.consequence.basis);
      if (prior != facts.end() && prior->second != c.consequence.outcome) {
        step += ", but " + prior->second + " was already derived";
        audit.chain.push_back(step);
        audit.contradiction = true;
        break;
      }
      facts[c.consequence.basis] = c.consequence.outcome;
      audit.chain.push_back(step);
      break;
    }
  }
}

}  // namespace

AuditReport contradiction_audit(const RoleAssignment& roles, GateMode mode) {
  AuditReport audit;
  audit.roles = roles;
  audit.mode = mode;
  const auto statements = all_statements();
  for (const auto& s : statements) {
    audit.statements.push_back(evaluate_statement(s, roles, mode));
  }
  for (std::size_t i = 0; i < statements.size(); ++i) {
    for (std::size_t j = i + 1; j < statements.size(); ++j) {
      if (!compatible(statements[i], statements[j])) {
        audit.incompatible_pairs.emplace_back(statements[i].id, statements[j].id);
      }
    }
  }

  audit.notes.push_back(
      "agents trust each other's conclusions: every statement is read off the "
      "same shared state");
  audit.notes.push_back(
      "single outcome per measurement: each projection keeps one renormalized "
      "branch");

  std::vector<std::string> not_evaluable, not_holding;
  for (const auto& r : audit.statements) {
    if (!r.evaluable) {
      not_evaluable.emplace_back(to_string(r.id));
    } else if (!r.holds.value_or(false)) {
      not_holding.emplace_back(to_string(r.id));
    }
  }
  auto join = [](const std::vector<std::string>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
    return out;
  };

  if (mode == GateMode::Bypassed) {
    audit.notes.push_back(
        "GATE BYPASSED: friends are treated as agents and as superposable "
        "systems at once; this diagnostic violates the agreement assumption");
    run_chain(audit.statements, audit);
    audit.verdict = audit.contradiction
                        ? "CONTRADICTION"
                        : "no contradiction (chain does not close)";
    return audit;
  }

  if (!not_evaluable.empty()) {
    audit.verdict = "no contradiction: statements " + join(not_evaluable) +
                    " are not evaluable under these roles";
  } else if (!not_holding.empty()) {
    audit.verdict = "no contradiction: statements " + join(not_holding) +
                    " do not hold";
  } else if (!audit.incompatible_pairs.empty()) {
    audit.verdict =
        "no contradiction: the statements require mutually incompatible "
        "measurements and cannot be true together";
  } else {
    run_chain(audit.statements, audit);
    audit.verdict = audit.contradiction ? "CONTRADICTION" : "no contradiction";
  }
  return audit;
}

// Projection sequences ---------------------------------------------------------

std::string_view to_string(CoinOutcome o) {
  return o == CoinOutcome::Heads ? "heads" : "tails";
}
std::string_view to_string(SpinOutcome o) {
  return o == SpinOutcome::Down ? "down" : "up";
}
std::string_view to_string(WbarOutcome o) {
  return o == WbarOutcome::OKbar ? "OKbar" : "failbar";
}
std::string_view to_string(WOutcome o) {
  return o == WOutcome::OK ? "OK" : "fail";
}

StateVector friend_projection_sequence(CoinOutcome coin, SpinOutcome spin) {
  const auto first =
      project(fully_entangled().state, basis(BasisId::Nbar), to_string(coin));
  return project(first.state, basis(BasisId::N), to_string(spin)).state;
}

Projection wigner_projection_sequence(WbarOutcome wbar, std::optional<WOutcome> w) {
  auto first =
      project(fully_entangled().state, basis(BasisId::Sbar), to_string(wbar));
  if (!w) return first;
  auto second = project(first.state, basis(BasisId::S), to_string(*w));
  return {first.weight * second.weight, std::move(second.state)};
}

}  // namespace wfriend

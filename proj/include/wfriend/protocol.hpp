// The extended Wigner's-friend protocol: state preparation, the four
// measurement viewpoints, the four certainty/possibility statements and the
// audit that decides whether they can be conjoined.
#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "wfriend/qstate.hpp"
#include "wfriend/roles.hpp"

namespace wfriend {

/// Slot names, in the canonical factor order.
namespace slots {
inline const std::string kCoin = "coin";
inline const std::string kFbarLab = "Fbar_lab";
inline const std::string kSpin = "spin";
inline const std::string kFLab = "F_lab";
inline const std::string kHidden = "G";
inline const std::string kWbarLab = "Wbar_lab";
inline const std::string kWLab = "W_lab";
}  // namespace slots

const Slot& coin_slot();
const Slot& fbar_lab_slot();
const Slot& spin_slot();
const Slot& f_lab_slot();
const Slot& wbar_lab_slot();
const Slot& w_lab_slot();

/// {coin, Fbar_lab} and {spin, F_lab}.
const FactorSpace& fbar_side_space();
const FactorSpace& f_side_space();
/// {coin, Fbar_lab, spin, F_lab}.
const FactorSpace& protocol_space();

/// Two-slot measurement bases. The two principal outcomes span the correlated
/// subspace (e.g. |h>|Fbar:h>, |t>|Fbar:t>); the basis is completed with the
/// anti-correlated pair (|h,t> +- |t,h>)/sqrt2, labeled "anti+" and "anti-",
/// which carries no amplitude in any protocol state.
const MeasurementBasis& basis(BasisId id);

/// The two principal outcome labels of a basis, e.g. {"OKbar", "failbar"}.
std::array<std::string, 2> principal_labels(BasisId id);

/// Which side of the experiment a basis acts on.
bool on_fbar_side(BasisId id);

enum class Stage { CoinOnly, FriendEntangled, SpinPrepared, FullyEntangled, WithPointers };
std::string_view to_string(Stage stage);

struct ProtocolState {
  Stage stage;
  StateVector state;
};

/// Stages CoinOnly through FullyEntangled, in order.
std::vector<ProtocolState> build_protocol();
ProtocolState fully_entangled();
/// The fully entangled state after both Wigners have premeasured, with
/// pointer slots Wbar_lab {OKbar, failbar} and W_lab {OK, fail}, before any
/// projection.
ProtocolState with_pointers();

enum class Viewpoint { FbarF, WbarF, FbarW, WbarW };
std::string_view to_string(Viewpoint view);
std::pair<BasisId, BasisId> bases_of(Viewpoint view);

struct Coefficient {
  std::string fbar_label;
  std::string f_label;
  Amplitude value;
  /// True when both labels are principal (not completion) outcomes.
  bool principal;
};

struct Decomposition {
  Viewpoint view;
  std::vector<Coefficient> terms;  // all 16 pairs, fbar label major
  StateVector reexpanded;

  Amplitude coefficient(std::string_view fbar_label,
                        std::string_view f_label) const;
};

/// Expands the FullyEntangled state in each of the four viewpoints' product
/// bases. Throws ContractError for any other stage.
std::array<Decomposition, 4> decompositions(const ProtocolState& state);

/// Largest amplitude difference between the original state and any
/// re-expansion.
double max_reexpansion_discrepancy(const ProtocolState& state,
                                   const std::array<Decomposition, 4>& decomps);

// Statements -----------------------------------------------------------------

enum class StatementId { A, B, C, D };
std::string_view to_string(StatementId id);

struct Event {
  BasisId basis;
  std::string outcome;
};

struct Conditional {
  Event condition;
  Event consequence;
};

struct JointPossibility {
  Event first;
  Event second;
  double probability;
};

struct Statement {
  StatementId id;
  std::variant<Conditional, JointPossibility> form;

  std::string describe() const;
  std::vector<BasisId> bases() const;
};

/// A: up => tails (no heads with up). B: OKbar => up. C: OK => heads.
/// D: OKbar and OK jointly, with probability 1/12.
Statement statement(StatementId id);
std::array<Statement, 4> all_statements();

/// The measurements that realize a statement under `roles`. Heads/tails and
/// up/down are read by the friends when they are agents and by the Wigners
/// otherwise; the OK/fail bases always need the Wigner to measure friend and
/// system together.
std::vector<MeasurementSpec> required_measurements(const Statement& s,
                                                   const RoleAssignment& roles);

enum class GateMode { Enforced, Bypassed };

struct StatementReport {
  StatementId id;
  RoleAssignment roles;
  bool evaluable = false;
  /// Empty when not evaluable or when the condition has zero probability.
  std::optional<bool> holds;
  /// P(consequence | condition) for conditionals, the joint probability for D.
  std::optional<double> probability;
  /// P(condition and not consequence); zero exactly when a conditional holds.
  std::optional<double> violation_probability;
  std::string gate_reason;
  std::string note;
};

StatementReport evaluate_statement(const Statement& s, const RoleAssignment& roles,
                                   GateMode mode = GateMode::Enforced);

/// Maps each BasisId to a concrete basis on some state's space.
using BasisLookup = std::function<const MeasurementBasis&(BasisId)>;

/// Evaluates a statement directly against `state`, with no gate. Outcome
/// labels of the looked-up bases must match principal_labels().
StatementReport evaluate_on_state(const Statement& s, const StateVector& state,
                                  const BasisLookup& bases);

/// Two statements are compatible when every basis one needs commutes with
/// every basis the other needs on the protocol space.
bool compatible(const Statement& a, const Statement& b);

struct AuditReport {
  RoleAssignment roles;
  GateMode mode;
  std::vector<StatementReport> statements;
  std::vector<std::pair<StatementId, StatementId>> incompatible_pairs;
  /// Inference steps, starting from D, when the chain is followed.
  std::vector<std::string> chain;
  bool contradiction = false;
  std::string verdict;
  std::vector<std::string> notes;
};

/// Evaluates all four statements and decides whether they can be jointly
/// asserted. With the gate bypassed the statements are conjoined regardless
/// of roles or compatibility, which is what produces the contradiction.
AuditReport contradiction_audit(const RoleAssignment& roles,
                                GateMode mode = GateMode::Enforced);

// Projection sequences -------------------------------------------------------

enum class CoinOutcome { Heads, Tails };
enum class SpinOutcome { Down, Up };
enum class WbarOutcome { OKbar, Failbar };
enum class WOutcome { OK, Fail };

std::string_view to_string(CoinOutcome o);
std::string_view to_string(SpinOutcome o);
std::string_view to_string(WbarOutcome o);
std::string_view to_string(WOutcome o);

/// Projects the fully entangled state onto the friends' results in turn.
/// (heads, up) throws ImpossibleOutcome.
StateVector friend_projection_sequence(CoinOutcome coin, SpinOutcome spin);

/// Projects onto Wbar's result and optionally W's. The weight is the joint
/// Born probability of the projected outcomes.
Projection wigner_projection_sequence(WbarOutcome wbar,
                                      std::optional<WOutcome> w = std::nullopt);

/// Two-slot vectors of the four bases, e.g. side_vector(BasisId::Sbar, "OKbar").
const StateVector& side_vector(BasisId id, std::string_view label);

}  // namespace wfriend

// Scenario configuration: entities, their roles, measurement plans, and the
// consistency gate that refuses any measurement whose target includes an
// agent.
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wfriend {

enum class EntityKind { Coin, Spin, Friend, Wigner, HiddenQubit };
enum class Role { Agent, System };

/// The four two-outcome measurements of the protocol: heads/tails and
/// OKbar/failbar on the coin side, up/down and OK/fail on the spin side.
enum class BasisId { Nbar, Sbar, N, S };

std::string_view to_string(EntityKind kind);
std::string_view to_string(Role role);
std::string_view to_string(BasisId basis);
std::optional<EntityKind> parse_entity_kind(std::string_view text);
std::optional<Role> parse_role(std::string_view text);
std::optional<BasisId> parse_basis_id(std::string_view text);

/// Canonical cast names used throughout the protocol.
namespace cast {
inline constexpr std::string_view kCoin = "coin";
inline constexpr std::string_view kSpin = "spin";
inline constexpr std::string_view kFbar = "Fbar";
inline constexpr std::string_view kF = "F";
inline constexpr std::string_view kWbar = "Wbar";
inline constexpr std::string_view kW = "W";
inline constexpr std::string_view kHidden = "G";
}  // namespace cast

struct Entity {
  std::string name;
  EntityKind kind;

  bool operator==(const Entity&) const = default;
};

class RoleAssignment {
 public:
  void set(std::string name, Role role) { roles_[std::move(name)] = role; }
  bool contains(std::string_view name) const {
    return roles_.find(std::string(name)) != roles_.end();
  }
  /// Throws std::out_of_range for an unknown entity.
  Role role_of(std::string_view name) const;
  const std::map<std::string, Role>& entries() const { return roles_; }

  bool operator==(const RoleAssignment&) const = default;

 private:
  std::map<std::string, Role> roles_;
};

/// Coin and spin are systems, the two Wigners are agents, and both friends
/// take `friends`.
RoleAssignment canonical_roles(Role friends);

struct MeasurementSpec {
  std::string actor;
  std::vector<std::string> targets;
  BasisId basis;

  bool operator==(const MeasurementSpec&) const = default;
};

struct Violation {
  std::size_t measurement;
  std::string entity;
  std::string reason;
};

struct GateVerdict {
  bool admitted = true;
  std::vector<Violation> violations;
};

/// Flags every measurement that has an Agent among its targets. All
/// violations are collected; the gate never stops at the first one.
GateVerdict gate_check(const RoleAssignment& roles,
                       std::span<const MeasurementSpec> plan);

struct Configuration {
  BasisId fbar_side;
  BasisId f_side;
  std::vector<MeasurementSpec> plan;

  std::string name() const;
};

/// The four joint measurements (Nbar,N), (Nbar,S), (Sbar,N), (Sbar,S), all
/// performed by the Wigners on the friends treated as systems.
std::vector<Configuration> enumerate_configurations();

struct Scenario {
  std::vector<Entity> entities;
  RoleAssignment roles;
  std::vector<MeasurementSpec> plan;
  std::optional<double> hidden_overlap;

  const Entity* find_entity(std::string_view name) const;
  bool operator==(const Scenario&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Parses the line-oriented scenario format:
///
///   entity <name> <kind>
///   role <name> agent|system
///   measure <actor> on <name>[,<name>...] basis <NbarBasis|SbarBasis|NBasis|SBasis>
///   hidden_qubit overlap <real in [0,1]>
///
/// '#' starts a comment. Coins, spins and hidden qubits default to system and
/// Wigners to agent; every friend needs an explicit role line.
Scenario parse_scenario(std::string_view text);

/// Canonical text form; parse_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const Scenario& scenario);

}  // namespace wfriend

#include "wfriend/roles.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

namespace wfriend {

std::string_view to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::Coin: return "coin";
    case EntityKind::Spin: return "spin";
    case EntityKind::Friend: return "friend";
    case EntityKind::Wigner: return "wigner";
    case EntityKind::HiddenQubit: return "hidden_qubit";
  }
  return "?";
}

std::string_view to_string(Role role) {
  return role == Role::Agent ? "agent" : "system";
}

std::string_view to_string(BasisId basis) {
  switch (basis) {
    case BasisId::Nbar: return "NbarBasis";
    case BasisId::Sbar: return "SbarBasis";
    case BasisId::N: return "NBasis";
    case BasisId::S: return "SBasis";
  }
  return "?";
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

std::optional<EntityKind> parse_entity_kind(std::string_view text) {
  const std::string t = lower(text);
  if (t == "coin") return EntityKind::Coin;
  if (t == "spin") return EntityKind::Spin;
  if (t == "friend") return EntityKind::Friend;
  if (t == "wigner") return EntityKind::Wigner;
  if (t == "hidden_qubit" || t == "hiddenqubit") return EntityKind::HiddenQubit;
  return std::nullopt;
}

std::optional<Role> parse_role(std::string_view text) {
  const std::string t = lower(text);
  if (t == "agent") return Role::Agent;
  if (t == "system") return Role::System;
  return std::nullopt;
}

std::optional<BasisId> parse_basis_id(std::string_view text) {
  for (BasisId b : {BasisId::Nbar, BasisId::Sbar, BasisId::N, BasisId::S}) {
    if (text == to_string(b)) return b;
  }
  return std::nullopt;
}

Role RoleAssignment::role_of(std::string_view name) const {
  auto it = roles_.find(std::string(name));
  if (it == roles_.end()) {
    throw std::out_of_range("no role assigned to '" + std::string(name) + "'");
  }
  return it->second;
}

RoleAssignment canonical_roles(Role friends) {
  RoleAssignment r;
  r.set(std::string(cast::kCoin), Role::System);
  r.set(std::string(cast::kSpin), Role::System);
  r.set(std::string(cast::kFbar), friends);
  r.set(std::string(cast::kF), friends);
  r.set(std::string(cast::kWbar), Role::Agent);
  r.set(std::string(cast::kW), Role::Agent);
  return r;
}

GateVerdict gate_check(const RoleAssignment& roles,
                       std::span<const MeasurementSpec> plan) {
  GateVerdict verdict;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    const auto& m = plan[i];
    for (const auto& target : m.targets) {
      if (roles.role_of(target) == Role::Agent) {
        verdict.violations.push_back(
            {i, target,
             target + " is an agent and cannot be part of the system that " +
                 m.actor + " measures in " + std::string(to_string(m.basis))});
      }
    }
  }
  verdict.admitted = verdict.violations.empty();
  return verdict;
}

std::string Configuration::name() const {
  auto side = [](BasisId b) -> std::string_view {
    switch (b) {
      case BasisId::Nbar: return "Nbar";
      case BasisId::Sbar: return "Sbar";
      case BasisId::N: return "N";
      case BasisId::S: return "S";
    }
    return "?";
  };
  return "(" + std::string(side(fbar_side)) + "," + std::string(side(f_side)) +
         ")";
}

std::vector<Configuration> enumerate_configurations() {
  std::vector<Configuration> out;
  for (BasisId left : {BasisId::Nbar, BasisId::Sbar}) {
    for (BasisId right : {BasisId::N, BasisId::S}) {
      Configuration c{left, right, {}};
      c.plan.push_back({std::string(cast::kWbar),
                        {std::string(cast::kCoin), std::string(cast::kFbar)},
                        left});
      c.plan.push_back({std::string(cast::kW),
                        {std::string(cast::kSpin), std::string(cast::kF)},
                        right});
      out.push_back(std::move(c));
    }
  }
  return out;
}

const Entity* Scenario::find_entity(std::string_view name) const {
  for (const auto& e : entities) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-';
  });
}

class ScenarioParser {
 public:
  Scenario run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      ++line_no;
      if (const auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      const auto tokens = tokenize(line);
      if (!tokens.empty()) directive(line_no, tokens);
      if (end == text.size()) break;
      pos = end + 1;
    }
    finish();
    return std::move(scenario_);
  }

 private:
  [[noreturn]] void fail(std::size_t line, std::size_t column,
                         const std::string& message) {
    throw ParseError(line, column, message);
  }

  void expect_count(std::size_t line, const std::vector<Token>& t,
                    std::size_t n, std::string_view usage) {
    if (t.size() != n) {
      const std::size_t col = t.size() > n ? t[n].column : t.back().column;
      fail(line, col, "expected '" + std::string(usage) + "'");
    }
  }

  const Entity& require_entity(std::size_t line, const Token& tok) {
    const Entity* e = scenario_.find_entity(tok.text);
    if (!e) fail(line, tok.column, "unknown entity '" + tok.text + "'");
    return *e;
  }

  void directive(std::size_t line, const std::vector<Token>& t) {
    const std::string& head = t[0].text;
    if (head == "entity") {
      entity(line, t);
    } else if (head == "role") {
      role(line, t);
    } else if (head == "measure") {
      measure(line, t);
    } else if (head == "hidden_qubit") {
      hidden_qubit(line, t);
    } else {
      fail(line, t[0].column, "unknown directive '" + head + "'");
    }
  }

  void entity(std::size_t line, const std::vector<Token>& t) {
    expect_count(line, t, 3, "entity <name> <kind>");
    if (!valid_name(t[1].text)) {
      fail(line, t[1].column, "invalid entity name '" + t[1].text + "'");
    }
    if (scenario_.find_entity(t[1].text)) {
      fail(line, t[1].column, "duplicate entity '" + t[1].text + "'");
    }
    const auto kind = parse_entity_kind(t[2].text);
    if (!kind) {
      fail(line, t[2].column,
           "unknown entity kind '" + t[2].text +
               "' (expected coin, spin, friend, wigner or hidden_qubit)");
    }
    scenario_.entities.push_back({t[1].text, *kind});
    declared_at_.push_back(line);
  }

  void role(std::size_t line, const std::vector<Token>& t) {
    expect_count(line, t, 3, "role <name> agent|system");
    const Entity& e = require_entity(line, t[1]);
    const auto r = parse_role(t[2].text);
    if (!r) fail(line, t[2].column, "unknown role '" + t[2].text + "'");
    if (explicit_roles_.contains(e.name)) {
      fail(line, t[1].column, "role of '" + e.name + "' assigned twice");
    }
    switch (e.kind) {
      case EntityKind::Coin:
      case EntityKind::Spin:
      case EntityKind::HiddenQubit:
        if (*r != Role::System) {
          fail(line, t[2].column,
               "'" + e.name + "' is a " + std::string(to_string(e.kind)) +
                   " and must be a system");
        }
        break;
      case EntityKind::Wigner:
        if (*r != Role::Agent) {
          fail(line, t[2].column,
               "'" + e.name + "' is a wigner and must be an agent");
        }
        break;
      case EntityKind::Friend:
        break;
    }
    explicit_roles_.set(e.name, *r);
  }

  void measure(std::size_t line, const std::vector<Token>& t) {
    constexpr std::string_view usage =
        "measure <actor> on <name>[,<name>...] basis <basis>";
    if (t.size() < 6 || t[2].text != "on") {
      fail(line, t.size() > 2 ? t[2].column : t.back().column,
           "expected '" + std::string(usage) + "'");
    }
    std::size_t basis_kw = 0;
    for (std::size_t i = 3; i < t.size(); ++i) {
      if (t[i].text == "basis") {
        basis_kw = i;
        break;
      }
    }
    if (basis_kw == 0 || basis_kw == 3) {
      fail(line, t[3].column, "expected target list followed by 'basis'");
    }
    if (basis_kw + 2 != t.size()) {
      const std::size_t col =
          basis_kw + 1 < t.size() ? t.back().column : t[basis_kw].column;
      fail(line, col, "expected exactly one basis name after 'basis'");
    }

    MeasurementSpec spec;
    spec.actor = require_entity(line, t[1]).name;

    // Targets may be split across tokens ("coin, Fbar"); empty pieces
    // between commas are skipped.
    for (std::size_t i = 3; i < basis_kw; ++i) {
      const Token& tok = t[i];
      std::size_t start = 0;
      while (start <= tok.text.size()) {
        std::size_t comma = tok.text.find(',', start);
        if (comma == std::string::npos) comma = tok.text.size();
        const Token part{tok.text.substr(start, comma - start),
                         tok.column + start};
        if (!part.text.empty()) {
          const Entity& e = require_entity(line, part);
          if (e.name == spec.actor) {
            fail(line, part.column, "'" + e.name + "' cannot measure itself");
          }
          if (std::find(spec.targets.begin(), spec.targets.end(), e.name) !=
              spec.targets.end()) {
            fail(line, part.column, "target '" + e.name + "' listed twice");
          }
          spec.targets.push_back(e.name);
        }
        start = comma + 1;
      }
    }
    if (spec.targets.empty()) {
      fail(line, t[3].column, "measurement has no targets");
    }

    const Token& b = t[basis_kw + 1];
    const auto basis = parse_basis_id(b.text);
    if (!basis) {
      fail(line, b.column,
           "unknown basis '" + b.text +
               "' (expected NbarBasis, SbarBasis, NBasis or SBasis)");
    }
    spec.basis = *basis;
    scenario_.plan.push_back(std::move(spec));
  }

  void hidden_qubit(std::size_t line, const std::vector<Token>& t) {
    expect_count(line, t, 3, "hidden_qubit overlap <real in [0,1]>");
    if (t[1].text != "overlap") {
      fail(line, t[1].column, "expected 'overlap'");
    }
    if (scenario_.hidden_overlap) {
      fail(line, t[0].column, "hidden_qubit given twice");
    }
    double value = 0.0;
    const std::string& s = t[2].text;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
      fail(line, t[2].column, "'" + s + "' is not a real number");
    }
    if (value < 0.0 || value > 1.0) {
      fail(line, t[2].column, "overlap " + s + " is outside [0,1]");
    }
    scenario_.hidden_overlap = value;
  }

  void finish() {
    for (std::size_t i = 0; i < scenario_.entities.size(); ++i) {
      const Entity& e = scenario_.entities[i];
      if (explicit_roles_.contains(e.name)) {
        scenario_.roles.set(e.name, explicit_roles_.role_of(e.name));
        continue;
      }
      switch (e.kind) {
        case EntityKind::Friend:
          fail(declared_at_[i], 1,
               "friend '" + e.name + "' needs an explicit role line");
        case EntityKind::Wigner:
          scenario_.roles.set(e.name, Role::Agent);
          break;
        default:
          scenario_.roles.set(e.name, Role::System);
          break;
      }
    }
  }

  Scenario scenario_;
  RoleAssignment explicit_roles_;
  std::vector<std::size_t> declared_at_;
};

}  // namespace

Scenario parse_scenario(std::string_view text) {
  return ScenarioParser().run(text);
}

std::string serialize_scenario(const Scenario& scenario) {
  std::ostringstream out;
  for (const auto& e : scenario.entities) {
    out << "entity " << e.name << ' ' << to_string(e.kind) << '\n';
  }
  for (const auto& e : scenario.entities) {
    out << "role " << e.name << ' ' << to_string(scenario.roles.role_of(e.name))
        << '\n';
  }
  for (const auto& m : scenario.plan) {
    out << "measure " << m.actor << " on ";
    for (std::size_t i = 0; i < m.targets.size(); ++i) {
      if (i) out << ',';
      out << m.targets[i];
    }
    out << " basis " << to_string(m.basis) << '\n';
  }
  if (scenario.hidden_overlap) {
    char buf[32];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof buf, *scenario.hidden_overlap);
    out << "hidden_qubit overlap " << std::string_view(buf, ptr - buf) << '\n';
  }
  return out.str();
}

}  // namespace wfriend

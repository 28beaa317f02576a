// Machine-readable report documents. Field order is fixed and every number
// is rounded to 12 significant digits, so identical inputs serialize to
// identical bytes.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "wfriend/hidden_qubit.hpp"
#include "wfriend/lhv.hpp"
#include "wfriend/protocol.hpp"
#include "wfriend/roles.hpp"

namespace wfriend {

using Json = nlohmann::ordered_json;

struct RunReport {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  double elapsed_ms = 0.0;
};

/// Canonical document: {"command", "inputs", "results"}. elapsed_ms is left
/// out on purpose so repeated runs compare byte for byte.
std::string to_machine(const RunReport& report);

Json number(double value);
Json amplitude_json(Amplitude a);

Json to_json(const Scenario& scenario);
Json to_json(const GateVerdict& verdict);
Json to_json(const Decomposition& d);
Json to_json(const StatementReport& r);
Json to_json(const AuditReport& audit);
Json to_json(const WignerStatistics& st);
Json to_json(const SweepRow& row);
Json to_json(const LhvAssignment& a);
Json to_json(const ForbiddenPair& c);
Json to_json(const LhvResult& r);

/// Friend and Wigner projection sequences: weight, Schmidt rank across the
/// two sides, and the coefficients in the other side's bases.
Json projection_sequences_json();

}  // namespace wfriend

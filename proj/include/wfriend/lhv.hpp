// Exhaustive check of deterministic local hidden-variable models for the
// four observables of the protocol.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "wfriend/protocol.hpp"
#include "wfriend/roles.hpp"

namespace wfriend {

/// One predetermined outcome per observable, fixed independently of which
/// measurement any other agent chooses.
struct LhvAssignment {
  CoinOutcome fbar;
  SpinOutcome f;
  WbarOutcome wbar;
  WOutcome w;

  /// Outcome label of the observable measured in `basis`.
  std::string value(BasisId basis) const;
  std::string describe() const;
  bool operator==(const LhvAssignment&) const = default;
};

/// All 16 assignments.
std::vector<LhvAssignment> enumerate_assignments();

/// "These two outcomes never occur together." Stored with the Fbar-side
/// observable first.
struct ForbiddenPair {
  BasisId first;
  std::string first_outcome;
  BasisId second;
  std::string second_outcome;

  std::string describe() const;
  bool operator==(const ForbiddenPair&) const = default;
};

/// The three universal constraints, generated from the state: every
/// principal outcome pair with zero joint probability in the (Nbar,N),
/// (Sbar,N) and (Nbar,S) expansions.
std::vector<ForbiddenPair> universal_constraints();

/// The same three constraints written out by hand:
///   no heads with up;  OKbar => up;  OK => heads.
std::vector<ForbiddenPair> reference_constraints();

/// Whether `a` satisfies each constraint, in order.
std::vector<bool> check_constraints(
    const LhvAssignment& a,
    const std::vector<ForbiddenPair>& constraints = universal_constraints());

struct LhvResult {
  std::vector<LhvAssignment> admissible;
  /// Largest OKbar-and-OK frequency any mixture of admissible assignments
  /// can reach: 1 if some admissible assignment has both, otherwise 0.
  double max_ok_ok_fraction = 0;
  double qm_prediction = 0;
  bool contradiction = false;
};

LhvResult verdict();

}  // namespace wfriend

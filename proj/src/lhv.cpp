#include "wfriend/lhv.hpp"

#include <algorithm>
#include <cmath>

namespace wfriend {

std::string LhvAssignment::value(BasisId basis) const {
  switch (basis) {
    case BasisId::Nbar: return std::string(to_string(fbar));
    case BasisId::N: return std::string(to_string(f));
    case BasisId::Sbar: return std::string(to_string(wbar));
    case BasisId::S: return std::string(to_string(w));
  }
  return {};
}

std::string LhvAssignment::describe() const {
  return "(" + value(BasisId::Nbar) + "," + value(BasisId::N) + "," +
         value(BasisId::Sbar) + "," + value(BasisId::S) + ")";
}

std::vector<LhvAssignment> enumerate_assignments() {
  std::vector<LhvAssignment> out;
  for (auto fbar : {CoinOutcome::Heads, CoinOutcome::Tails}) {
    for (auto f : {SpinOutcome::Down, SpinOutcome::Up}) {
      for (auto wbar : {WbarOutcome::OKbar, WbarOutcome::Failbar}) {
        for (auto w : {WOutcome::OK, WOutcome::Fail}) {
          out.push_back({fbar, f, wbar, w});
        }
      }
    }
  }
  return out;
}

std::string ForbiddenPair::describe() const {
  return "not (" + first_outcome + " and " + second_outcome + ")";
}

std::vector<ForbiddenPair> universal_constraints() {
  const auto decomps = decompositions(fully_entangled());
  std::vector<ForbiddenPair> out;
  for (Viewpoint view : {Viewpoint::FbarF, Viewpoint::WbarF, Viewpoint::FbarW}) {
    const auto& d = decomps[static_cast<std::size_t>(view)];
    const auto [left, right] = bases_of(view);
    for (const auto& a : principal_labels(left)) {
      for (const auto& b : principal_labels(right)) {
        if (std::norm(d.coefficient(a, b)) < kExactTol) {
          out.push_back({left, a, right, b});
        }
      }
    }
  }
  return out;
}

std::vector<ForbiddenPair> reference_constraints() {
  return {
      {BasisId::Nbar, "heads", BasisId::N, "up"},     // never heads with up
      {BasisId::Sbar, "OKbar", BasisId::N, "down"},   // OKbar => up
      {BasisId::Nbar, "tails", BasisId::S, "OK"},     // OK => heads
  };
}

std::vector<bool> check_constraints(const LhvAssignment& a,
                                    const std::vector<ForbiddenPair>& constraints) {
  std::vector<bool> out;
  out.reserve(constraints.size());
  for (const auto& c : constraints) {
    out.push_back(!(a.value(c.first) == c.first_outcome &&
                    a.value(c.second) == c.second_outcome));
  }
  return out;
}

LhvResult verdict() {
  const auto constraints = universal_constraints();
  LhvResult r;
  for (const auto& a : enumerate_assignments()) {
    const auto ok = check_constraints(a, constraints);
    if (std::all_of(ok.begin(), ok.end(), [](bool b) { return b; })) {
      r.admissible.push_back(a);
    }
  }
  for (const auto& a : r.admissible) {
    if (a.wbar == WbarOutcome::OKbar && a.w == WOutcome::OK) {
      r.max_ok_ok_fraction = 1.0;
    }
  }
  const auto decomps = decompositions(fully_entangled());
  r.qm_prediction =
      std::norm(decomps[static_cast<std::size_t>(Viewpoint::WbarW)].coefficient(
          "OKbar", "OK"));
  r.contradiction = r.max_ok_ok_fraction < r.qm_prediction;
  return r;
}

}  // namespace wfriend

#include "wfriend/hidden_qubit.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "wfriend/format.hpp"

namespace wfriend {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

MeasurementBasis single_slot_basis(const Slot& slot, const std::string& first,
                                   const std::string& second, bool superposed) {
  const FactorSpace space{slot};
  const auto& l = slot.labels;
  if (superposed) {
    return MeasurementBasis(
        {{first, make_state(space, {{kInvSqrt2, {l[0]}}, {-kInvSqrt2, {l[1]}}})},
         {second, make_state(space, {{kInvSqrt2, {l[0]}}, {kInvSqrt2, {l[1]}}})}});
  }
  return MeasurementBasis({{first, StateVector::basis(space, {l[0]})},
                           {second, StateVector::basis(space, {l[1]})}});
}

const MeasurementBasis& lookup_condensed(BasisId id) { return condensed_basis(id); }

const MeasurementBasis& lookup_full(BasisId id) { return basis(id); }

WignerStatistics statistics_on(const StateVector& state, const BasisLookup& bases) {
  WignerStatistics st;
  const auto& sbar = bases(BasisId::Sbar);
  const auto& s = bases(BasisId::S);
  const auto wbar_labels = principal_labels(BasisId::Sbar);
  const auto w_labels = principal_labels(BasisId::S);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const StateVector ab = tensor(sbar.outcome(wbar_labels[a]).vector,
                                    s.outcome(w_labels[b]).vector);
      st.joint[a][b] = ab.space() == state.space()
                           ? std::norm(inner_product(ab, state))
                           : partial_inner_product(ab, state).squared_norm();
    }
  }
  st.p_okbar = st.joint[0][0] + st.joint[0][1];
  st.p_ok = st.joint[0][0] + st.joint[1][0];
  st.p_okbar_and_ok = st.joint[0][0];
  st.p_up_given_okbar =
      evaluate_on_state(statement(StatementId::B), state, bases).probability.value();
  st.p_heads_given_ok =
      evaluate_on_state(statement(StatementId::C), state, bases).probability.value();
  return st;
}

}  // namespace

const Slot& hidden_slot() {
  static const Slot s{slots::kHidden, {"hG", "gperp"}};
  return s;
}

const FactorSpace& hidden_model_space() {
  static const FactorSpace s{coin_slot(), spin_slot(), hidden_slot()};
  return s;
}

const MeasurementBasis& condensed_basis(BasisId id) {
  static const MeasurementBasis nbar =
      single_slot_basis(coin_slot(), "heads", "tails", false);
  static const MeasurementBasis sbar =
      single_slot_basis(coin_slot(), "OKbar", "failbar", true);
  static const MeasurementBasis n =
      single_slot_basis(spin_slot(), "down", "up", false);
  static const MeasurementBasis s =
      single_slot_basis(spin_slot(), "OK", "fail", true);
  switch (id) {
    case BasisId::Nbar: return nbar;
    case BasisId::Sbar: return sbar;
    case BasisId::N: return n;
    case BasisId::S: return s;
  }
  throw std::invalid_argument("unknown basis id");
}

HiddenQubitModel::HiddenQubitModel(double gamma) : gamma_(gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::domain_error("hidden-qubit overlap must lie in [0,1], got " +
                            std::to_string(gamma));
  }
  const FactorSpace g{hidden_slot()};
  h_g_ = StateVector::basis(g, {"hG"});
  const double perp = std::sqrt(std::max(0.0, 1.0 - gamma * gamma));
  t_g_ = gamma == 1.0 ? h_g_
                      : make_state(g, {{gamma, {"hG"}}, {perp, {"gperp"}}});

  const FactorSpace coin_spin{coin_slot(), spin_slot()};
  auto cs = [&](const char* coin, const char* spin) {
    return StateVector::basis(coin_spin, {coin, spin});
  };
  state_ = kInvSqrt3 * tensor(cs("h", "down"), h_g_) +
           kInvSqrt3 * tensor(cs("t", "down"), t_g_) +
           kInvSqrt3 * tensor(cs("t", "up"), t_g_);
}

HiddenQubitModel build_hidden_qubit_state(double gamma) {
  return HiddenQubitModel(gamma);
}

WignerStatistics wigner_statistics(const HiddenQubitModel& model) {
  WignerStatistics st = statistics_on(model.state(), lookup_condensed);
  st.gamma = model.gamma();
  const StateVector okbar_ok_perp =
      tensor(tensor(condensed_basis(BasisId::Sbar).outcome("OKbar").vector,
                    condensed_basis(BasisId::S).outcome("OK").vector),
             StateVector::basis(FactorSpace{hidden_slot()}, {"gperp"}));
  st.p_okbar_and_ok_g_perp = std::norm(inner_product(okbar_ok_perp, model.state()));
  return st;
}

WignerStatistics full_space_statistics() {
  WignerStatistics st = statistics_on(fully_entangled().state, lookup_full);
  st.gamma = 1.0;
  return st;
}

std::array<std::array<StateVector, 2>, 2> wigner_expansion(
    const HiddenQubitModel& model) {
  const auto wbar_labels = principal_labels(BasisId::Sbar);
  const auto w_labels = principal_labels(BasisId::S);
  std::array<std::array<StateVector, 2>, 2> out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const StateVector ab =
          tensor(condensed_basis(BasisId::Sbar).outcome(wbar_labels[a]).vector,
                 condensed_basis(BasisId::S).outcome(w_labels[b]).vector);
      out[a][b] = partial_inner_product(ab, model.state());
    }
  }
  return out;
}

Projection project_on_hidden(const HiddenQubitModel& model, HiddenBranch which) {
  if (std::abs(model.gamma()) > kExactTol) {
    throw ContractError(
        "projection onto h_G/t_G is only a measurement of G when the overlap is "
        "0 (got " + std::to_string(model.gamma()) +
        "); measure G in an orthonormal basis instead");
  }
  const StateVector& bra = which == HiddenBranch::HG ? model.h_g() : model.t_g();
  const StateVector reduced = partial_inner_product(bra, model.state());
  const double w = reduced.squared_norm();
  if (w < kExactTol) throw ImpossibleOutcome("hidden-qubit branch has zero weight");
  return {w, reduced.normalized()};
}

std::vector<SweepRow> overlap_sweep(int steps) {
  if (steps < 2) {
    throw std::invalid_argument("overlap sweep needs at least 2 steps, got " +
                                std::to_string(steps));
  }
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double gamma =
        i == steps - 1 ? 1.0 : static_cast<double>(i) / (steps - 1);
    const auto st = wigner_statistics(HiddenQubitModel(gamma));
    rows.push_back({gamma, st.p_up_given_okbar, st.p_heads_given_ok,
                    st.p_okbar_and_ok});
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "gamma,p_up_given_okbar,p_heads_given_ok,p_okbar_and_ok\n";
  for (const auto& r : rows) {
    out << format_significant(r.gamma) << ','
        << format_significant(r.p_up_given_okbar) << ','
        << format_significant(r.p_heads_given_ok) << ','
        << format_significant(r.p_okbar_and_ok) << '\n';
  }
  return out.str();
}

}  // namespace wfriend

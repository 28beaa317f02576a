// Hidden-qubit model: an ancilla G in Fbar's lab records her result and
// escapes Wbar's measurement. The overlap gamma = <h_G|t_G> interpolates
// between a fully superposable friend (gamma = 1) and a decohered one
// (gamma = 0).
//
// The model uses the condensed space {coin, spin, G}, where |h> stands for
// |h>|Fbar:h> and |down> for |down>|F:down>. G's computational basis is
// {|h_G>, |g_perp>} with |t_G> = gamma |h_G> + sqrt(1 - gamma^2) |g_perp>.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "wfriend/protocol.hpp"
#include "wfriend/qstate.hpp"

namespace wfriend {

const Slot& hidden_slot();
/// {coin, spin, G}.
const FactorSpace& hidden_model_space();

/// Single-slot bases on the condensed coin and spin slots, with the same
/// outcome labels as the full-space bases.
const MeasurementBasis& condensed_basis(BasisId id);

class HiddenQubitModel {
 public:
  /// Throws std::domain_error when gamma is outside [0, 1].
  explicit HiddenQubitModel(double gamma);

  double gamma() const { return gamma_; }
  const StateVector& state() const { return state_; }
  /// |h_G> and |t_G> as vectors on the G slot.
  const StateVector& h_g() const { return h_g_; }
  const StateVector& t_g() const { return t_g_; }

 private:
  double gamma_;
  StateVector h_g_;
  StateVector t_g_;
  StateVector state_;
};

HiddenQubitModel build_hidden_qubit_state(double gamma);

struct WignerStatistics {
  double gamma = 1.0;
  /// P(Wbar outcome, W outcome), indexed [OKbar|failbar][OK|fail].
  std::array<std::array<double, 2>, 2> joint{};
  double p_okbar = 0;
  double p_ok = 0;
  double p_up_given_okbar = 0;
  double p_heads_given_ok = 0;
  double p_okbar_and_ok = 0;
  /// P(OKbar, OK, and G found in |g_perp>).
  double p_okbar_and_ok_g_perp = 0;
};

WignerStatistics wigner_statistics(const HiddenQubitModel& model);

/// The same statistics computed on the full four-slot protocol state, with
/// no hidden qubit. Used as the reference for gamma = 1.
WignerStatistics full_space_statistics();

/// Components of the state along each joint Wigner outcome, as vectors on G:
/// entry [a][b] is <a b|Psi>, indexed like WignerStatistics::joint.
std::array<std::array<StateVector, 2>, 2> wigner_expansion(
    const HiddenQubitModel& model);

enum class HiddenBranch { HG, TG };

/// <h_G|Psi> or <t_G|Psi>, renormalized, as a state on {coin, spin}. Only
/// defined for gamma = 0, where {h_G, t_G} is an orthonormal basis of G.
Projection project_on_hidden(const HiddenQubitModel& model, HiddenBranch which);

struct SweepRow {
  double gamma;
  double p_up_given_okbar;
  double p_heads_given_ok;
  double p_okbar_and_ok;
};

/// `steps` evenly spaced overlaps from 0 to 1 inclusive. Needs steps >= 2.
std::vector<SweepRow> overlap_sweep(int steps);

/// Header line plus one comma-separated row per gamma, 12 significant digits.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace wfriend

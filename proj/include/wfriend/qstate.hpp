// Dense state vectors on small labeled tensor-product spaces.
//
// Every subsystem is two-dimensional. A FactorSpace is an ordered list of
// named slots; amplitudes are stored in the standard binary ordering with
// slot 0 as the most significant bit. All types are immutable values and
// every operation is a free function, templated on the real scalar type.
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wfriend {

/// Tolerance for exact-algebra identities (norms, orthonormality, equality).
inline constexpr double kExactTol = 1e-12;
/// Tolerance for derived quantities (probabilities, singular values).
inline constexpr double kDerivedTol = 1e-9;
/// 2^7 = 128 is the largest Hilbert dimension we allow.
inline constexpr std::size_t kMaxSlots = 7;

class QStateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad labels or coefficients handed to a state constructor.
class ConstructionError : public QStateError {
 public:
  using QStateError::QStateError;
};

/// Operands live on different (or incompatible) factor spaces.
class DimensionError : public QStateError {
 public:
  using QStateError::QStateError;
};

/// Tensor composition of spaces that share a slot name.
class CompositionError : public QStateError {
 public:
  using QStateError::QStateError;
};

/// A precondition on the operands does not hold (e.g. unnormalized input).
class ContractError : public QStateError {
 public:
  using QStateError::QStateError;
};

class BipartitionError : public QStateError {
 public:
  using QStateError::QStateError;
};

/// A projection onto an outcome whose Born weight is zero.
class ImpossibleOutcome : public QStateError {
 public:
  using QStateError::QStateError;
};

struct Slot {
  std::string name;
  std::array<std::string, 2> labels;

  bool operator==(const Slot&) const = default;
};

class FactorSpace {
 public:
  FactorSpace() = default;
  FactorSpace(std::initializer_list<Slot> slots)
      : FactorSpace(std::vector<Slot>(slots)) {}

  explicit FactorSpace(std::vector<Slot> slots) : slots_(std::move(slots)) {
    if (slots_.size() > kMaxSlots) {
      throw ConstructionError("factor space has " +
                              std::to_string(slots_.size()) +
                              " slots; at most " + std::to_string(kMaxSlots) +
                              " are supported");
    }
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      const Slot& s = slots_[i];
      if (s.name.empty()) throw ConstructionError("slot name must be nonempty");
      if (s.labels[0] == s.labels[1] || s.labels[0].empty() ||
          s.labels[1].empty()) {
        throw ConstructionError("slot '" + s.name +
                                "' needs two distinct nonempty basis labels");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (slots_[j].name == s.name) {
          throw ConstructionError("duplicate slot name '" + s.name + "'");
        }
      }
    }
  }

  std::size_t num_slots() const { return slots_.size(); }
  Eigen::Index dimension() const { return Eigen::Index{1} << slots_.size(); }
  const std::vector<Slot>& slots() const { return slots_; }
  const Slot& slot(std::size_t i) const { return slots_.at(i); }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      if (slots_[i].name == name) return i;
    }
    return std::nullopt;
  }

  bool contains(std::string_view name) const { return find(name).has_value(); }

  std::size_t index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw DimensionError("no slot named '" + std::string(name) + "' in " +
                         describe());
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    out.reserve(slots_.size());
    for (const auto& s : slots_) out.push_back(s.name);
    return out;
  }

  /// Slots with the given names, in the order given.
  FactorSpace subspace(std::span<const std::string> names) const {
    std::vector<Slot> out;
    for (const auto& n : names) out.push_back(slots_[index_of(n)]);
    return FactorSpace(std::move(out));
  }

  /// Slots not named in `names`, in canonical order.
  FactorSpace complement(std::span<const std::string> names) const {
    std::vector<Slot> out;
    for (const auto& s : slots_) {
      if (std::find(names.begin(), names.end(), s.name) == names.end()) {
        out.push_back(s);
      }
    }
    return FactorSpace(std::move(out));
  }

  FactorSpace concat(const FactorSpace& other) const {
    std::vector<Slot> out = slots_;
    for (const auto& s : other.slots_) {
      if (contains(s.name)) {
        throw CompositionError("slot '" + s.name +
                               "' appears on both sides of a tensor product");
      }
      out.push_back(s);
    }
    return FactorSpace(std::move(out));
  }

  /// Bit of slot `slot` inside a flat basis index.
  int bit(Eigen::Index basis_index, std::size_t slot) const {
    return static_cast<int>((basis_index >> (slots_.size() - 1 - slot)) & 1);
  }

  /// Flat basis index for one label per slot.
  Eigen::Index index_for(std::span<const std::string> labels) const {
    if (labels.size() != slots_.size()) {
      throw ConstructionError("expected " + std::to_string(slots_.size()) +
                              " labels for " + describe() + ", got " +
                              std::to_string(labels.size()));
    }
    Eigen::Index idx = 0;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      const auto& s = slots_[i];
      int b;
      if (labels[i] == s.labels[0]) {
        b = 0;
      } else if (labels[i] == s.labels[1]) {
        b = 1;
      } else {
        throw ConstructionError("unknown label '" + labels[i] + "' for slot '" +
                                s.name + "' (expected " + s.labels[0] + " or " +
                                s.labels[1] + ")");
      }
      idx = (idx << 1) | b;
    }
    return idx;
  }

  std::string label_string(Eigen::Index basis_index) const {
    std::string out;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      if (i) out += ',';
      out += slots_[i].labels[bit(basis_index, i)];
    }
    return out;
  }

  std::string describe() const {
    std::string out = "{";
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      if (i) out += ", ";
      out += slots_[i].name;
    }
    return out + "}";
  }

  bool operator==(const FactorSpace&) const = default;

 private:
  std::vector<Slot> slots_;
};

template <typename Real>
class BasicStateVector {
 public:
  using RealScalar = Real;
  using Scalar = std::complex<Real>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  BasicStateVector() = default;

  BasicStateVector(FactorSpace space, Vector amps)
      : space_(std::move(space)), amps_(std::move(amps)) {
    if (amps_.size() != space_.dimension()) {
      throw DimensionError("amplitude array of length " +
                           std::to_string(amps_.size()) + " does not match " +
                           space_.describe() + " of dimension " +
                           std::to_string(space_.dimension()));
    }
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
      if (!std::isfinite(amps_[i].real()) || !std::isfinite(amps_[i].imag())) {
        throw ConstructionError("non-finite amplitude at " +
                                space_.label_string(i));
      }
    }
  }

  static BasicStateVector basis(FactorSpace space,
                                std::span<const std::string> labels) {
    Vector v = Vector::Zero(space.dimension());
    v[space.index_for(labels)] = Scalar(1);
    return BasicStateVector(std::move(space), std::move(v));
  }

  static BasicStateVector basis(FactorSpace space,
                                std::initializer_list<std::string> labels) {
    std::vector<std::string> l(labels);
    return basis(std::move(space), std::span<const std::string>(l));
  }

  const FactorSpace& space() const { return space_; }
  const Vector& amplitudes() const { return amps_; }
  Eigen::Index dimension() const { return amps_.size(); }
  Scalar amplitude(Eigen::Index i) const { return amps_[i]; }
  Scalar amplitude(std::initializer_list<std::string> labels) const {
    std::vector<std::string> l(labels);
    return amps_[space_.index_for(l)];
  }

  Real squared_norm() const { return amps_.squaredNorm(); }
  Real norm() const { return amps_.norm(); }
  bool is_normalized(Real tol = Real(kExactTol)) const {
    return std::abs(squared_norm() - Real(1)) <= tol;
  }

  BasicStateVector normalized() const {
    const Real n = norm();
    if (n <= Real(0)) throw ContractError("cannot normalize the zero vector");
    return BasicStateVector(space_, amps_ / n);
  }

  friend BasicStateVector operator+(const BasicStateVector& a,
                                    const BasicStateVector& b) {
    require_same_space(a, b);
    return BasicStateVector(a.space_, a.amps_ + b.amps_);
  }
  friend BasicStateVector operator-(const BasicStateVector& a,
                                    const BasicStateVector& b) {
    require_same_space(a, b);
    return BasicStateVector(a.space_, a.amps_ - b.amps_);
  }
  friend BasicStateVector operator-(const BasicStateVector& a) {
    return BasicStateVector(a.space_, -a.amps_);
  }
  friend BasicStateVector operator*(Scalar c, const BasicStateVector& a) {
    return BasicStateVector(a.space_, c * a.amps_);
  }
  friend BasicStateVector operator*(Real c, const BasicStateVector& a) {
    return BasicStateVector(a.space_, Scalar(c) * a.amps_);
  }

  static void require_same_space(const BasicStateVector& a,
                                 const BasicStateVector& b) {
    if (!(a.space_ == b.space_)) {
      throw DimensionError("state spaces differ: " + a.space_.describe() +
                           " vs " + b.space_.describe());
    }
  }

 private:
  FactorSpace space_;
  Vector amps_;
};

using StateVector = BasicStateVector<double>;
using Amplitude = std::complex<double>;

template <typename Real = double>
struct BasicTerm {
  std::complex<Real> coefficient;
  std::vector<std::string> labels;
};
using Term = BasicTerm<double>;

/// Sum of coefficient-weighted basis vectors. The result is not normalized.
template <typename Real = double>
BasicStateVector<Real> make_state(const FactorSpace& space,
                                  const std::vector<BasicTerm<Real>>& terms) {
  using State = BasicStateVector<Real>;
  typename State::Vector v = State::Vector::Zero(space.dimension());
  bool any_nonzero = false;
  for (const auto& t : terms) {
    v[space.index_for(t.labels)] += t.coefficient;
    if (std::abs(t.coefficient) > Real(0)) any_nonzero = true;
  }
  if (!any_nonzero) {
    throw ConstructionError("state on " + space.describe() +
                            " has no nonzero coefficient");
  }
  return State(space, std::move(v));
}

/// <a|b>, conjugate-linear in `a`.
template <typename Real>
std::complex<Real> inner_product(const BasicStateVector<Real>& a,
                                 const BasicStateVector<Real>& b) {
  BasicStateVector<Real>::require_same_space(a, b);
  return a.amplitudes().dot(b.amplitudes());
}

template <typename Real>
BasicStateVector<Real> tensor(const BasicStateVector<Real>& a,
                              const BasicStateVector<Real>& b) {
  FactorSpace space = a.space().concat(b.space());
  const Eigen::Index db = b.dimension();
  typename BasicStateVector<Real>::Vector v(space.dimension());
  for (Eigen::Index i = 0; i < a.dimension(); ++i) {
    v.segment(i * db, db) = a.amplitude(i) * b.amplitudes();
  }
  return BasicStateVector<Real>(std::move(space), std::move(v));
}

template <typename Real>
Real max_abs_difference(const BasicStateVector<Real>& a,
                        const BasicStateVector<Real>& b) {
  BasicStateVector<Real>::require_same_space(a, b);
  return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff();
}

/// Amplitude-wise equality in the canonical ordering.
template <typename Real>
bool approx_equal(const BasicStateVector<Real>& a,
                  const BasicStateVector<Real>& b, Real tol = Real(kExactTol)) {
  return a.space() == b.space() && max_abs_difference(a, b) <= tol;
}

/// Equality of rays: |<a|b>| = 1 after normalizing both.
template <typename Real>
bool equal_up_to_phase(const BasicStateVector<Real>& a,
                       const BasicStateVector<Real>& b,
                       Real tol = Real(kDerivedTol)) {
  if (!(a.space() == b.space())) return false;
  const Real overlap = std::abs(inner_product(a.normalized(), b.normalized()));
  return std::abs(overlap - Real(1)) <= tol;
}

namespace detail {

inline std::vector<std::size_t> slot_positions(
    const FactorSpace& space, std::span<const std::string> names) {
  std::vector<std::size_t> pos;
  pos.reserve(names.size());
  for (const auto& n : names) {
    const std::size_t p = space.index_of(n);
    if (std::find(pos.begin(), pos.end(), p) != pos.end()) {
      throw DimensionError("slot '" + n + "' listed twice");
    }
    pos.push_back(p);
  }
  return pos;
}

// Splits a flat index into (row, col), where rows enumerate `row_slots` in the
// order given and columns enumerate the remaining slots in canonical order.
inline std::pair<Eigen::Index, Eigen::Index> split_index(
    const FactorSpace& space, const std::vector<std::size_t>& row_slots,
    Eigen::Index flat) {
  Eigen::Index row = 0;
  for (std::size_t p : row_slots) row = (row << 1) | space.bit(flat, p);
  Eigen::Index col = 0;
  for (std::size_t s = 0; s < space.num_slots(); ++s) {
    if (std::find(row_slots.begin(), row_slots.end(), s) != row_slots.end()) {
      continue;
    }
    col = (col << 1) | space.bit(flat, s);
  }
  return {row, col};
}

}  // namespace detail

/// Reshapes the amplitudes into a matrix whose rows enumerate `row_slots`
/// (in the order given) and whose columns enumerate the remaining slots.
template <typename Real>
Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic> matricize(
    const BasicStateVector<Real>& state, std::span<const std::string> row_slots) {
  const FactorSpace& space = state.space();
  const auto pos = detail::slot_positions(space, row_slots);
  const Eigen::Index rows = Eigen::Index{1} << pos.size();
  const Eigen::Index cols = space.dimension() / rows;
  Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic> m(rows,
                                                                       cols);
  for (Eigen::Index i = 0; i < space.dimension(); ++i) {
    const auto [r, c] = detail::split_index(space, pos, i);
    m(r, c) = state.amplitude(i);
  }
  return m;
}

/// Inverse of matricize.
template <typename Derived>
BasicStateVector<typename Derived::RealScalar> dematricize(
    const FactorSpace& space, std::span<const std::string> row_slots,
    const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Derived::RealScalar;
  const auto pos = detail::slot_positions(space, row_slots);
  typename BasicStateVector<Real>::Vector v(space.dimension());
  for (Eigen::Index i = 0; i < space.dimension(); ++i) {
    const auto [r, c] = detail::split_index(space, pos, i);
    v[i] = m(r, c);
  }
  return BasicStateVector<Real>(space, std::move(v));
}

template <typename Real>
struct BasicOutcome {
  std::string label;
  BasicStateVector<Real> vector;
};

/// Labeled orthonormal family spanning the space of its target slots.
template <typename Real>
class BasicMeasurementBasis {
 public:
  using Outcome = BasicOutcome<Real>;

  explicit BasicMeasurementBasis(std::vector<Outcome> outcomes)
      : outcomes_(std::move(outcomes)) {
    if (outcomes_.empty()) throw ConstructionError("basis has no outcomes");
    target_ = outcomes_.front().vector.space();
    const Eigen::Index dim = target_.dimension();
    if (static_cast<Eigen::Index>(outcomes_.size()) != dim) {
      throw ConstructionError("basis on " + target_.describe() + " needs " +
                              std::to_string(dim) + " outcomes, got " +
                              std::to_string(outcomes_.size()));
    }
    using Matrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic,
                                 Eigen::Dynamic>;
    Matrix vecs(dim, dim);
    for (std::size_t k = 0; k < outcomes_.size(); ++k) {
      const auto& o = outcomes_[k];
      if (!(o.vector.space() == target_)) {
        throw DimensionError("outcome '" + o.label + "' lives on " +
                             o.vector.space().describe() + ", expected " +
                             target_.describe());
      }
      for (std::size_t j = 0; j < k; ++j) {
        if (outcomes_[j].label == o.label) {
          throw ConstructionError("duplicate outcome label '" + o.label + "'");
        }
      }
      vecs.col(static_cast<Eigen::Index>(k)) = o.vector.amplitudes();
    }
    const Matrix identity = Matrix::Identity(dim, dim);
    const Real gram_err = (vecs.adjoint() * vecs - identity).cwiseAbs().maxCoeff();
    if (gram_err > Real(kExactTol)) {
      throw ConstructionError("basis vectors on " + target_.describe() +
                              " are not orthonormal");
    }
    const Real completeness_err =
        (vecs * vecs.adjoint() - identity).cwiseAbs().maxCoeff();
    if (completeness_err > Real(kExactTol)) {
      throw ConstructionError("basis projectors on " + target_.describe() +
                              " do not sum to the identity");
    }
  }

  const FactorSpace& target() const { return target_; }
  std::vector<std::string> target_slots() const { return target_.names(); }
  const std::vector<Outcome>& outcomes() const { return outcomes_; }

  const Outcome& outcome(std::string_view label) const {
    for (const auto& o : outcomes_) {
      if (o.label == label) return o;
    }
    throw ContractError("basis on " + target_.describe() +
                        " has no outcome '" + std::string(label) + "'");
  }

 private:
  FactorSpace target_;
  std::vector<Outcome> outcomes_;
};

using MeasurementBasis = BasicMeasurementBasis<double>;

/// Joint basis on the concatenation of two disjoint targets. Labels are
/// joined with a comma.
template <typename Real>
BasicMeasurementBasis<Real> product_basis(const BasicMeasurementBasis<Real>& a,
                                          const BasicMeasurementBasis<Real>& b) {
  std::vector<BasicOutcome<Real>> out;
  for (const auto& oa : a.outcomes()) {
    for (const auto& ob : b.outcomes()) {
      out.push_back({oa.label + "," + ob.label, tensor(oa.vector, ob.vector)});
    }
  }
  return BasicMeasurementBasis<Real>(std::move(out));
}

template <typename Real>
struct BasicMeasurementResult {
  std::string label;
  Real probability;
  /// Empty when the outcome has (numerically) zero probability.
  std::optional<BasicStateVector<Real>> post_state;
};

template <typename Real>
struct BasicProjection {
  Real weight;
  BasicStateVector<Real> state;
};

using MeasurementResult = BasicMeasurementResult<double>;
using Projection = BasicProjection<double>;

namespace detail {

template <typename Real>
void require_measurable(const BasicStateVector<Real>& state,
                        const BasicMeasurementBasis<Real>& basis) {
  if (!state.is_normalized()) {
    throw ContractError("measurement requires a normalized state (squared norm " +
                        std::to_string(state.squared_norm()) + ")");
  }
  for (const auto& s : basis.target().slots()) {
    const std::size_t i = state.space().index_of(s.name);
    if (!(state.space().slot(i) == s)) {
      throw DimensionError("slot '" + s.name +
                           "' has different basis labels in state and basis");
    }
  }
}

// Unnormalized (|v><v| (x) 1) |psi>.
template <typename Real>
BasicStateVector<Real> apply_projector(const BasicStateVector<Real>& state,
                                       const BasicStateVector<Real>& v) {
  const auto names = v.space().names();
  const auto m = matricize(state, names);
  const auto coeffs = (v.amplitudes().adjoint() * m).eval();
  return dematricize(state.space(), names, (v.amplitudes() * coeffs).eval());
}

}  // namespace detail

/// Born-rule measurement of a subset of slots. Post-measurement states are
/// renormalized.
template <typename Real>
std::vector<BasicMeasurementResult<Real>> measure(
    const BasicStateVector<Real>& state,
    const BasicMeasurementBasis<Real>& basis) {
  detail::require_measurable(state, basis);
  std::vector<BasicMeasurementResult<Real>> out;
  out.reserve(basis.outcomes().size());
  for (const auto& o : basis.outcomes()) {
    auto projected = detail::apply_projector(state, o.vector);
    const Real p = projected.squared_norm();
    if (p < Real(kExactTol)) {
      out.push_back({o.label, p, std::nullopt});
    } else {
      out.push_back({o.label, p, projected.normalized()});
    }
  }
  return out;
}

/// Projects onto one outcome. A zero-weight outcome is reported as
/// ImpossibleOutcome rather than as a zero vector.
template <typename Real>
BasicProjection<Real> project(const BasicStateVector<Real>& state,
                              const BasicMeasurementBasis<Real>& basis,
                              std::string_view label) {
  detail::require_measurable(state, basis);
  const auto& o = basis.outcome(label);
  auto projected = detail::apply_projector(state, o.vector);
  const Real w = projected.squared_norm();
  if (w < Real(kExactTol)) {
    throw ImpossibleOutcome("outcome '" + std::string(label) + "' on " +
                            basis.target().describe() +
                            " has zero probability");
  }
  return {w, projected.normalized()};
}

/// <bra|_S |psi>: contracts the slots of `bra` and returns the (unnormalized)
/// vector on the remaining slots.
template <typename Real>
BasicStateVector<Real> partial_inner_product(const BasicStateVector<Real>& bra,
                                             const BasicStateVector<Real>& state) {
  const auto names = bra.space().names();
  const FactorSpace rest = state.space().complement(names);
  if (rest.num_slots() == 0) {
    throw DimensionError("partial inner product contracts every slot; use inner_product");
  }
  for (const auto& s : bra.space().slots()) {
    if (!(state.space().slot(state.space().index_of(s.name)) == s)) {
      throw DimensionError("slot '" + s.name + "' differs between bra and state");
    }
  }
  const auto m = matricize(state, names);
  const auto coeffs = (bra.amplitudes().adjoint() * m).transpose().eval();
  return BasicStateVector<Real>(rest, coeffs);
}

template <typename Real>
Eigen::Matrix<Real, Eigen::Dynamic, 1> schmidt_coefficients(
    const BasicStateVector<Real>& state, std::span<const std::string> left_slots) {
  if (left_slots.empty() || left_slots.size() >= state.space().num_slots()) {
    throw BipartitionError("bipartition needs a nonempty proper subset of " +
                           state.space().describe());
  }
  const auto m = matricize(state, left_slots);
  Eigen::JacobiSVD<std::decay_t<decltype(m)>> svd(m);
  return svd.singularValues();
}

/// Number of singular values above kDerivedTol across the bipartition.
template <typename Real>
int schmidt_rank(const BasicStateVector<Real>& state,
                 std::span<const std::string> left_slots) {
  const auto sv = schmidt_coefficients(state, left_slots);
  return static_cast<int>((sv.array() > Real(kDerivedTol)).count());
}

template <typename Real>
int schmidt_rank(const BasicStateVector<Real>& state,
                 std::initializer_list<std::string> left_slots) {
  std::vector<std::string> l(left_slots);
  return schmidt_rank(state, std::span<const std::string>(l));
}

/// |v><v| on `target` embedded as a dense operator on `space`.
template <typename Real>
Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>
embedded_projector(const BasicStateVector<Real>& v, const FactorSpace& space) {
  using Matrix =
      Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index dim = space.dimension();
  Matrix p(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    typename BasicStateVector<Real>::Vector e =
        BasicStateVector<Real>::Vector::Zero(dim);
    e[j] = std::complex<Real>(1);
    p.col(j) = detail::apply_projector(BasicStateVector<Real>(space, e), v)
                   .amplitudes();
  }
  return p;
}

/// True when every projector of `a` commutes with every projector of `b`,
/// both embedded in `space`.
template <typename Real>
bool bases_commute(const BasicMeasurementBasis<Real>& a,
                   const BasicMeasurementBasis<Real>& b,
                   const FactorSpace& space) {
  for (const auto& oa : a.outcomes()) {
    const auto pa = embedded_projector(oa.vector, space);
    for (const auto& ob : b.outcomes()) {
      const auto pb = embedded_projector(ob.vector, space);
      if ((pa * pb - pb * pa).cwiseAbs().maxCoeff() > Real(kExactTol)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace wfriend

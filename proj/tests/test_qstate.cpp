#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "wfriend/qstate.hpp"

using namespace wfriend;

namespace {

const Slot kCoin{"coin", {"h", "t"}};
const Slot kSpin{"spin", {"down", "up"}};
const Slot kExtraA{"a", {"0", "1"}};
const Slot kExtraB{"b", {"0", "1"}};

FactorSpace space_of(std::initializer_list<Slot> s) { return FactorSpace(s); }

StateVector coin_state() {
  return make_state(space_of({kCoin}),
                    {{1 / std::sqrt(3.0), {"h"}}, {std::sqrt(2.0 / 3.0), {"t"}}});
}

MeasurementBasis computational(const Slot& slot) {
  const FactorSpace s({slot});
  return MeasurementBasis({{slot.labels[0], StateVector::basis(s, {slot.labels[0]})},
                           {slot.labels[1], StateVector::basis(s, {slot.labels[1]})}});
}

StateVector random_state(const FactorSpace& space, std::mt19937& rng) {
  std::normal_distribution<double> n;
  StateVector::Vector v(space.dimension());
  for (auto& a : v) a = {n(rng), n(rng)};
  return StateVector(space, v).normalized();
}

// Random orthonormal basis on `space` by Gram-Schmidt via QR.
MeasurementBasis random_basis(const FactorSpace& space, std::mt19937& rng) {
  std::normal_distribution<double> n;
  const auto dim = space.dimension();
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = {n(rng), n(rng)};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
  const Eigen::MatrixXcd q = qr.householderQ();
  std::vector<BasicOutcome<double>> out;
  for (Eigen::Index k = 0; k < dim; ++k) {
    out.push_back({"o" + std::to_string(k), StateVector(space, q.col(k))});
  }
  return MeasurementBasis(out);
}

}  // namespace

TEST(FactorSpace, RejectsDuplicateAndOversizedSlots) {
  EXPECT_THROW(space_of({kCoin, kCoin}), ConstructionError);
  std::vector<Slot> many;
  for (int i = 0; i < 8; ++i) many.push_back({"s" + std::to_string(i), {"0", "1"}});
  EXPECT_THROW(FactorSpace{many}, ConstructionError);
  many.pop_back();
  EXPECT_EQ(FactorSpace(many).dimension(), 128);
}

TEST(FactorSpace, FirstSlotIsMostSignificant) {
  const auto s = space_of({kCoin, kSpin});
  std::vector<std::string> l{"t", "down"};
  EXPECT_EQ(s.index_for(l), 2);
  EXPECT_EQ(s.label_string(1), "h,up");
}

TEST(MakeState, CoinState) {
  const auto c = coin_state();
  EXPECT_NEAR(c.squared_norm(), 1.0, kExactTol);
  EXPECT_NEAR(c.amplitude({"h"}).real(), 1 / std::sqrt(3.0), kExactTol);
}

TEST(MakeState, BasisAndBellLike) {
  EXPECT_NEAR(make_state(space_of({kCoin}), {{1.0, {"h"}}}).norm(), 1.0, kExactTol);
  const double r = 1 / std::sqrt(2.0);
  const auto bell =
      make_state(space_of({kCoin, kSpin}), {{r, {"h", "down"}}, {r, {"t", "up"}}});
  EXPECT_NEAR(bell.norm(), 1.0, kExactTol);
}

TEST(MakeState, Errors) {
  const auto s = space_of({kCoin, kSpin});
  EXPECT_THROW(make_state(s, {{1.0, {"h"}}}), ConstructionError);
  EXPECT_THROW(make_state(s, {{1.0, {"h", "sideways"}}}), ConstructionError);
  EXPECT_THROW(make_state(s, {{0.0, {"h", "up"}}}), ConstructionError);
}

TEST(StateVector, RejectsWrongLengthAndNonFinite) {
  const auto s = space_of({kCoin});
  EXPECT_THROW(StateVector(s, StateVector::Vector::Zero(4)), DimensionError);
  StateVector::Vector v(2);
  v << std::nan(""), 0.0;
  EXPECT_THROW(StateVector(s, v), ConstructionError);
}

TEST(InnerProduct, Examples) {
  const auto s = space_of({kCoin});
  const auto h = StateVector::basis(s, {"h"});
  const auto t = StateVector::basis(s, {"t"});
  EXPECT_NEAR(std::abs(inner_product(h, t)), 0.0, kExactTol);
  EXPECT_NEAR(inner_product(coin_state(), h).real(), 1 / std::sqrt(3.0), kExactTol);
  EXPECT_NEAR(inner_product(coin_state(), coin_state()).real(), 1.0, kExactTol);
  EXPECT_THROW(inner_product(h, StateVector::basis(space_of({kSpin}), {"up"})),
               DimensionError);
}

TEST(InnerProduct, ConjugateLinearInFirstArgument) {
  const auto s = space_of({kCoin});
  const Amplitude i{0, 1};
  const auto a = i * StateVector::basis(s, {"h"});
  const auto b = StateVector::basis(s, {"h"});
  EXPECT_NEAR(std::abs(inner_product(a, b) - std::conj(i)), 0.0, kExactTol);
}

TEST(Tensor, ProductExpansion) {
  const auto down = StateVector::basis(space_of({kSpin}), {"down"});
  const auto p = tensor(coin_state(), down);
  EXPECT_NEAR(p.amplitude({"h", "down"}).real(), 1 / std::sqrt(3.0), kExactTol);
  EXPECT_NEAR(p.amplitude({"t", "down"}).real(), std::sqrt(2.0 / 3.0), kExactTol);
  EXPECT_NEAR(std::abs(p.amplitude({"t", "up"})), 0.0, kExactTol);
}

TEST(Tensor, BasisTimesBasisIsBasis) {
  const Slot other{"coin2", {"h", "t"}};
  const auto p = tensor(StateVector::basis(space_of({kCoin}), {"h"}),
                        StateVector::basis(space_of({other}), {"h"}));
  EXPECT_EQ(p.dimension(), 4);
  EXPECT_NEAR(p.amplitude(0).real(), 1.0, kExactTol);
  EXPECT_NEAR(p.amplitudes().tail(3).norm(), 0.0, kExactTol);
}

TEST(Tensor, DuplicateSlotIsCompositionError) {
  EXPECT_THROW(tensor(coin_state(), coin_state()), CompositionError);
}

TEST(Measure, CoinStatistics) {
  const auto r = measure(coin_state(), computational(kCoin));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r[0].probability, 1.0 / 3.0, kExactTol);
  EXPECT_NEAR(r[1].probability, 2.0 / 3.0, kExactTol);
}

TEST(Measure, EigenstateAndNullPostState) {
  const auto h = StateVector::basis(space_of({kCoin}), {"h"});
  const auto r = measure(h, computational(kCoin));
  EXPECT_NEAR(r[0].probability, 1.0, kExactTol);
  ASSERT_TRUE(r[0].post_state);
  EXPECT_TRUE(approx_equal(*r[0].post_state, h));
  EXPECT_FALSE(r[1].post_state.has_value());
}

TEST(Measure, UnnormalizedIsContractError) {
  EXPECT_THROW(measure(2.0 * coin_state(), computational(kCoin)), ContractError);
}

TEST(Project, ImpossibleOutcome) {
  const auto h = StateVector::basis(space_of({kCoin}), {"h"});
  EXPECT_THROW(project(h, computational(kCoin), "t"), ImpossibleOutcome);
  const auto p = project(h, computational(kCoin), "h");
  EXPECT_NEAR(p.weight, 1.0, kExactTol);
  EXPECT_THROW(project(h, computational(kCoin), "x"), ContractError);
}

TEST(MeasurementBasis, RejectsIncompleteOrNonOrthogonal) {
  const auto s = space_of({kCoin});
  const auto h = StateVector::basis(s, {"h"});
  EXPECT_THROW(MeasurementBasis({{"h", h}}), ConstructionError);
  const auto diag = make_state(s, {{1 / std::sqrt(2.0), {"h"}}, {1 / std::sqrt(2.0), {"t"}}});
  EXPECT_THROW(MeasurementBasis({{"h", h}, {"d", diag}}), ConstructionError);
  EXPECT_THROW(MeasurementBasis({{"h", h}, {"h", StateVector::basis(s, {"t"})}}),
               ConstructionError);
}

TEST(Schmidt, BasisStateHasRankOne) {
  const auto s = space_of({kCoin, kSpin, kExtraA});
  EXPECT_EQ(schmidt_rank(StateVector::basis(s, {"t", "up", "0"}), {"coin"}), 1);
  EXPECT_EQ(schmidt_rank(StateVector::basis(s, {"t", "up", "0"}), {"coin", "a"}), 1);
}

TEST(Schmidt, BellStateHasRankTwo) {
  const double r = 1 / std::sqrt(2.0);
  const auto bell =
      make_state(space_of({kCoin, kSpin}), {{r, {"h", "down"}}, {r, {"t", "up"}}});
  EXPECT_EQ(schmidt_rank(bell, {"coin"}), 2);
  const auto sv = schmidt_coefficients(bell, std::vector<std::string>{"coin"});
  EXPECT_NEAR(sv[0], r, kExactTol);
  EXPECT_NEAR(sv[1], r, kExactTol);
}

TEST(Schmidt, DegenerateBipartitionsRejected) {
  const auto s = space_of({kCoin, kSpin});
  const auto b = StateVector::basis(s, {"h", "up"});
  EXPECT_THROW(schmidt_rank(b, std::vector<std::string>{}), BipartitionError);
  EXPECT_THROW(schmidt_rank(b, {"coin", "spin"}), BipartitionError);
}

TEST(Matricize, RoundTrip) {
  std::mt19937 rng(7);
  const auto s = space_of({kCoin, kSpin, kExtraA, kExtraB});
  const auto psi = random_state(s, rng);
  const std::vector<std::string> rows{"b", "spin"};
  const auto m = matricize(psi, rows);
  EXPECT_EQ(m.rows(), 4);
  EXPECT_TRUE(approx_equal(dematricize(s, rows, m), psi));
}

TEST(PartialInnerProduct, MatchesFullInnerProductOnProducts) {
  std::mt19937 rng(11);
  const auto a = random_state(space_of({kCoin}), rng);
  const auto b = random_state(space_of({kSpin, kExtraA}), rng);
  const auto psi = tensor(a, b);
  const auto rest = partial_inner_product(a, psi);
  EXPECT_TRUE(approx_equal(rest, b));
}

TEST(BasesCommute, ComputationalVsDiagonal) {
  const auto s = space_of({kCoin});
  const double r = 1 / std::sqrt(2.0);
  const MeasurementBasis diag(
      {{"+", make_state(s, {{r, {"h"}}, {r, {"t"}}})},
       {"-", make_state(s, {{r, {"h"}}, {-r, {"t"}}})}});
  const FactorSpace whole({kCoin, kSpin});
  EXPECT_FALSE(bases_commute(computational(kCoin), diag, whole));
  EXPECT_TRUE(bases_commute(computational(kCoin), computational(kSpin), whole));
}

// Property tests over random states and bases.

class RandomProperties : public ::testing::TestWithParam<int> {};

TEST_P(RandomProperties, ProbabilitiesSumToOne) {
  std::mt19937 rng(GetParam());
  const auto s = space_of({kCoin, kSpin, kExtraA});
  const auto psi = random_state(s, rng);
  const auto basis = random_basis(space_of({kSpin, kExtraA}), rng);
  double total = 0;
  for (const auto& r : measure(psi, basis)) total += r.probability;
  EXPECT_NEAR(total, 1.0, kDerivedTol);
}

TEST_P(RandomProperties, ProjectionIsIdempotent) {
  std::mt19937 rng(GetParam() + 100);
  const auto s = space_of({kCoin, kSpin, kExtraA});
  const auto psi = random_state(s, rng);
  const auto basis = random_basis(space_of({kCoin}), rng);
  const auto first = project(psi, basis, "o0");
  const auto second = project(first.state, basis, "o0");
  EXPECT_NEAR(second.weight, 1.0, kExactTol);
  EXPECT_LE(max_abs_difference(first.state, second.state), kExactTol);
}

TEST_P(RandomProperties, EigenstateMeasuredWithCertainty) {
  std::mt19937 rng(GetParam() + 200);
  const auto target = space_of({kCoin, kSpin});
  const auto basis = random_basis(target, rng);
  const auto& o = basis.outcomes()[GetParam() % 4];
  const auto psi = tensor(o.vector, random_state(space_of({kExtraA}), rng));
  const auto p = project(psi, basis, o.label);
  EXPECT_NEAR(p.weight, 1.0, kExactTol);
}

TEST_P(RandomProperties, SchmidtRankSymmetricUnderSwap) {
  std::mt19937 rng(GetParam() + 300);
  const auto s = space_of({kCoin, kSpin, kExtraA, kExtraB});
  // Mix ranks: a product of two random pairs, or a generic state.
  const auto psi = GetParam() % 2
                       ? tensor(random_state(space_of({kCoin, kSpin}), rng),
                                random_state(space_of({kExtraA, kExtraB}), rng))
                       : random_state(s, rng);
  EXPECT_EQ(schmidt_rank(psi, {"coin", "spin"}), schmidt_rank(psi, {"a", "b"}));
  EXPECT_EQ(schmidt_rank(psi, {"coin", "a"}), schmidt_rank(psi, {"spin", "b"}));
}

TEST_P(RandomProperties, NormMultipliesUnderTensor) {
  std::mt19937 rng(GetParam() + 400);
  const auto a = 1.7 * random_state(space_of({kCoin}), rng);
  const auto b = 0.3 * random_state(space_of({kSpin}), rng);
  EXPECT_NEAR(tensor(a, b).norm(), a.norm() * b.norm(), kExactTol);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomProperties, ::testing::Range(1, 21));

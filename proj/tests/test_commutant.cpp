#include <gtest/gtest.h>

#include "oracle.hpp"
#include "seqeff/commutant.hpp"
#include "seqeff/errors.hpp"
#include "seqeff/order_iso.hpp"
#include "seqeff/seqprod.hpp"
#include "seqeff/spectral.hpp"

using namespace seqeff;

namespace {

Element diag(const AlgebraDescriptor& alg, const std::vector<double>& d) {
  return Element::from_real_matrix(alg, Eigen::Map<const Eigen::VectorXd>(d.data(), d.size()).asDiagonal());
}

// Conjugate by a random unitary so nothing is accidentally diagonal.
Element rotated(const Element& a, std::uint64_t seed) {
  return OrderIso(a.algebra(), IsoSpec{IsoKind::unitary_conjugation, seed}).apply(a);
}

}  // namespace

TEST(Commutant, DimensionsByHand) {
  const auto r3 = AlgebraDescriptor::real_symmetric(3);
  const auto c3 = AlgebraDescriptor::complex_hermitian(3);
  // distinct eigenvalues: diagonal elements only
  EXPECT_EQ(commutant_basis({rotated(diag(r3, {1, 2, 3}), 1)}).size(), 3u);
  EXPECT_EQ(commutant_basis({rotated(diag(c3, {1, 2, 3}), 1)}).size(), 3u);
  // a 2-dimensional eigenspace contributes a full 2x2 block
  EXPECT_EQ(commutant_basis({rotated(diag(r3, {1, 1, 3}), 2)}).size(), 3u + 1u);
  EXPECT_EQ(commutant_basis({rotated(diag(c3, {1, 1, 3}), 2)}).size(), 4u + 1u);
  EXPECT_EQ(commutant_basis({Element::identity(c3)}).size(), 9u);
}

TEST(Commutant, QuaternionicByHand) {
  const auto q2 = AlgebraDescriptor::quaternionic_hermitian(2);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
  m(0, 0) = 1;
  m(2, 2) = 1;  // Kramers partner
  const Element p = rotated(Element::from_matrix(q2, m), 3);
  EXPECT_TRUE(is_sharp(p));
  // Hermitian quaternionic 2x2 commuting with a rank-one projection: diagonal reals.
  EXPECT_EQ(commutant_basis({p}).size(), 2u);
}

TEST(Commutant, SpinCases) {
  const auto alg = AlgebraDescriptor::spin_factor(4);
  EXPECT_EQ(commutant_basis({Element::identity(alg)}).size(), 5u);
  const Element a = oracle::effect(alg, 1);
  const auto basis = commutant_basis({a});
  EXPECT_EQ(basis.size(), 2u);
  EXPECT_LT(span_residual(basis, a), 1e-12);
  const Element b = oracle::effect(alg, 2);
  EXPECT_EQ(commutant_basis({a, b}).size(), 1u);
}

TEST(Commutant, BasisIsOrthonormalAndCommutes) {
  for (const auto& alg : oracle::matrix_kinds()) {
    const Element a = oracle::effect(alg, 5);
    const Element b = functional_calculus(a, [](double x) { return x * x; });
    const auto basis = commutant_basis({a, b});
    for (std::size_t i = 0; i < basis.size(); ++i) {
      EXPECT_LT(commutator_norm(basis[i], a), 1e-10) << alg.shorthand();
      for (std::size_t j = 0; j < basis.size(); ++j) {
        EXPECT_NEAR(trace_inner_product(basis[i], basis[j]), i == j ? 1.0 : 0.0, 1e-10);
      }
    }
  }
}

TEST(Commutant, BicommutantDimensionIsDistinctEigenvalueCount) {
  const auto c4 = AlgebraDescriptor::complex_hermitian(4);
  EXPECT_EQ(bicommutant_basis({rotated(diag(c4, {0.1, 0.1, 0.5, 0.9}), 4)}).size(), 3u);
  EXPECT_EQ(bicommutant_basis({rotated(diag(c4, {0.1, 0.3, 0.5, 0.9}), 4)}).size(), 4u);
  const auto q3 = AlgebraDescriptor::quaternionic_hermitian(3);
  EXPECT_EQ(bicommutant_basis({oracle::effect(q3, 6)}).size(), 3u);
  EXPECT_EQ(bicommutant_basis({oracle::effect(AlgebraDescriptor::spin_factor(3), 7)}).size(), 2u);
}

TEST(Commutant, Preconditions) {
  const auto c3 = AlgebraDescriptor::complex_hermitian(3);
  EXPECT_THROW(commutant_basis({}), PreconditionError);
  EXPECT_THROW(bicommutant_basis({oracle::effect(c3, 1), oracle::effect(c3, 2)}), PreconditionError);
  const auto sum = AlgebraDescriptor::direct_sum({c3, c3});
  EXPECT_THROW(commutant_basis({Element::identity(sum)}), CapabilityError);
}

TEST(Commutant, SerialParallelBitIdentical) {
  for (const auto& alg : oracle::matrix_kinds()) {
    const Element a = oracle::effect(alg, 9);
    const auto s = commutant_basis({a}, Execution::serial);
    const auto p = commutant_basis({a}, Execution::parallel);
    ASSERT_EQ(s.size(), p.size());
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_TRUE(s[i].coords() == p[i].coords());
  }
}

TEST(FunctionModelTest, ProductIsPointwise) {
  for (const auto& alg : oracle::matrix_kinds()) {
    const Element a = oracle::effect(alg, 10);
    const Element a2 = jordan_product(a, a);
    const Element ap = Element::identity(alg) - a;
    const FunctionModel m = simultaneous_diagonalize({a, a2, ap});
    EXPECT_EQ(m.points(), alg.rank()) << alg.shorthand();
    const Eigen::VectorXd fa = m.to_function(a);
    const Eigen::VectorXd fap = m.to_function(ap);
    const Element prod = seq_product(SequentialProduct::standard(), a, ap);
    EXPECT_LT((m.to_function(prod) - fa.cwiseProduct(fap)).cwiseAbs().maxCoeff(), 1e-8) << alg.shorthand();
    EXPECT_LT(rel_residual(m.from_function(fa), a), 1e-10);
    EXPECT_LT(rel_residual(m.from_function(m.to_function(a2)), a2), 1e-10);
  }
}

TEST(FunctionModelTest, DegenerateSpectrumMergesPoints) {
  const auto c3 = AlgebraDescriptor::complex_hermitian(3);
  const Element a = rotated(diag(c3, {0.2, 0.2, 0.7}), 11);
  const FunctionModel m = simultaneous_diagonalize({a});
  EXPECT_EQ(m.points(), 2);
  EXPECT_THROW(simultaneous_diagonalize({oracle::effect(c3, 1), oracle::effect(c3, 2)}), PreconditionError);
}

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "seqeff/algebra.hpp"
#include "seqeff/errors.hpp"
#include "seqeff/linear_map.hpp"
#include "seqeff/random.hpp"

using namespace seqeff;
using oracle::C;
using oracle::MatrixXcd;

TEST(Descriptor, DimensionsAndRanks) {
  EXPECT_EQ(AlgebraDescriptor::real_symmetric(4).real_dimension(), 10);
  EXPECT_EQ(AlgebraDescriptor::complex_hermitian(3).real_dimension(), 9);
  EXPECT_EQ(AlgebraDescriptor::quaternionic_hermitian(3).real_dimension(), 15);
  EXPECT_EQ(AlgebraDescriptor::spin_factor(5).real_dimension(), 6);
  EXPECT_EQ(AlgebraDescriptor::spin_factor(5).rank(), 2);
  EXPECT_EQ(AlgebraDescriptor::quaternionic_hermitian(3).rank(), 3);
  EXPECT_EQ(AlgebraDescriptor::quaternionic_hermitian(3).matrix_size(), 6);
  const auto sum = AlgebraDescriptor::direct_sum(
      {AlgebraDescriptor::complex_hermitian(2), AlgebraDescriptor::real_symmetric(3)});
  EXPECT_EQ(sum.real_dimension(), 4 + 6);
  EXPECT_EQ(sum.rank(), 5);
  EXPECT_EQ(sum.shorthand(), "sum(complex:2,real:3)");
}

TEST(Descriptor, RejectsBadSizes) {
  EXPECT_THROW(AlgebraDescriptor::real_symmetric(0), PreconditionError);
  EXPECT_THROW(AlgebraDescriptor::direct_sum({}), PreconditionError);
}

TEST(Element, CoordinatesRoundTripAndAreOrthonormal) {
  for (const auto& alg : oracle::all_kinds()) {
    Rng rng(11);
    const Element a = random_element(alg, rng);
    const Element b = random_element(alg, rng);
    EXPECT_EQ(a.coords().size(), alg.real_dimension());
    EXPECT_LT(rel_residual(Element::from_coords(alg, a.coords()), a), 1e-14) << alg.shorthand();
    EXPECT_NEAR(trace_inner_product(a, b), a.coords().dot(b.coords()), 1e-12) << alg.shorthand();
  }
}

TEST(Element, TraceInnerProductMatchesMatrixTrace) {
  const auto alg = AlgebraDescriptor::complex_hermitian(3);
  Rng rng(3);
  const Element a = random_element(alg, rng);
  const Element b = random_element(alg, rng);
  EXPECT_NEAR(trace_inner_product(a, b), (a.matrix() * b.matrix()).trace().real(), 1e-12);
}

TEST(Element, FromMatrixSymmetrizes) {
  const auto alg = AlgebraDescriptor::complex_hermitian(2);
  MatrixXcd m(2, 2);
  m << C(1, 0), C(2, 1), C(0, 0), C(3, 0);
  const Element e = Element::from_matrix(alg, m);
  EXPECT_LT(oracle::max_abs(e.matrix() - e.matrix().adjoint()), 1e-15);
  EXPECT_NEAR(e.matrix()(0, 1).real(), 1.0, 1e-15);
}

TEST(Element, QuaternionicStructureIsKept) {
  const auto alg = AlgebraDescriptor::quaternionic_hermitian(3);
  Rng rng(5);
  const Element a = random_element(alg, rng);
  const Element b = random_element(alg, rng);
  EXPECT_LT(quaternionic_symmetry_defect(a), 1e-14);
  EXPECT_LT(quaternionic_symmetry_defect(jordan_product(a, b)), 1e-12);
  EXPECT_LT(quaternionic_symmetry_defect(quadratic_rep(a, b)), 1e-12);
  EXPECT_EQ(eigenvalues(a).size(), 3u);
  // Identity has trace n under the half-trace inner product.
  EXPECT_NEAR(trace_inner_product(Element::identity(alg), Element::identity(alg)), 3.0, 1e-14);
}

TEST(Element, JordanAndQuadraticMatchMatrixFormulas) {
  for (const auto& alg : oracle::matrix_kinds()) {
    Rng rng(17);
    const Element a = random_element(alg, rng);
    const Element b = random_element(alg, rng);
    const MatrixXcd A = a.matrix(), B = b.matrix();
    EXPECT_LT(oracle::max_abs(jordan_product(a, b).matrix() - 0.5 * (A * B + B * A)), 1e-12) << alg.shorthand();
    EXPECT_LT(oracle::max_abs(quadratic_rep(a, b).matrix() - A * B * A), 1e-11) << alg.shorthand();
  }
}

TEST(Element, SpinProductByHand) {
  const auto alg = AlgebraDescriptor::spin_factor(2);
  const Element a = Element::spin(alg, Eigen::Vector2d(1, 0), 2);
  const Element b = Element::spin(alg, Eigen::Vector2d(0, 3), 1);
  // (v,t)*(w,s) = (s v + t w, <v,w> + t s)
  const Element ab = jordan_product(a, b);
  EXPECT_NEAR(ab.spin_vector()(0), 1, 1e-15);
  EXPECT_NEAR(ab.spin_vector()(1), 6, 1e-15);
  EXPECT_NEAR(ab.spin_scalar(), 2, 1e-15);
  const Element a2 = jordan_product(a, a);
  EXPECT_NEAR(a2.spin_vector()(0), 4, 1e-15);
  EXPECT_NEAR(a2.spin_scalar(), 5, 1e-15);
  // Q_a(1) = a^2
  EXPECT_LT(rel_residual(quadratic_rep(a, Element::identity(alg)), a2), 1e-15);
  const auto ev = eigenvalues(a);
  ASSERT_EQ(ev.size(), 2u);
  EXPECT_NEAR(ev[0], 1, 1e-15);
  EXPECT_NEAR(ev[1], 3, 1e-15);
  EXPECT_NEAR(trace_inner_product(a, b), 2 * (0 + 2), 1e-15);
}

TEST(Element, OrderAndNorm) {
  const auto alg = AlgebraDescriptor::real_symmetric(3);
  const Element a = Element::from_real_matrix(alg, Eigen::Vector3d(0.2, 0.5, 0.9).asDiagonal());
  const Element b = Element::from_real_matrix(alg, Eigen::Vector3d(0.3, 0.5, 1.0).asDiagonal());
  EXPECT_TRUE(is_effect(a));
  EXPECT_TRUE(leq(a, b));
  EXPECT_FALSE(leq(b, a));
  EXPECT_NEAR(order_unit_norm(a - b), 0.1, 1e-15);
  EXPECT_FALSE(is_effect(2.0 * b));
  EXPECT_FALSE(is_positive(-1.0 * a));
}

TEST(Element, DirectSumActsBlockwise) {
  const auto sum = AlgebraDescriptor::direct_sum(
      {AlgebraDescriptor::complex_hermitian(2), AlgebraDescriptor::spin_factor(3)});
  Rng rng(2);
  const Element a = random_element(sum, rng);
  const Element b = random_element(sum, rng);
  const Element ab = jordan_product(a, b);
  for (int k = 0; k < 2; ++k) {
    EXPECT_LT(rel_residual(ab.parts()[k], jordan_product(a.parts()[k], b.parts()[k])), 1e-14);
  }
  EXPECT_EQ(eigenvalues(a).size(), 4u);
}

TEST(Element, MismatchedAlgebrasThrow) {
  const Element a = Element::identity(AlgebraDescriptor::complex_hermitian(2));
  const Element b = Element::identity(AlgebraDescriptor::complex_hermitian(3));
  EXPECT_THROW(jordan_product(a, b), DescriptorMismatch);
  EXPECT_THROW(a + b, DescriptorMismatch);
}

TEST(Element, CommutatorNorm) {
  const auto alg = AlgebraDescriptor::spin_factor(3);
  const Element a = Element::spin(alg, Eigen::Vector3d(1, 0, 0), 0.5);
  const Element b = Element::spin(alg, Eigen::Vector3d(2, 0, 0), 0.1);
  const Element c = Element::spin(alg, Eigen::Vector3d(0, 1, 0), 0.1);
  EXPECT_NEAR(commutator_norm(a, b), 0.0, 1e-15);
  EXPECT_NEAR(commutator_norm(a, c), 1.0, 1e-15);
}

TEST(LinearMapTest, SerialAndParallelAreBitIdentical) {
  for (const auto& alg : oracle::all_kinds()) {
    Rng rng(8);
    const Element a = random_element(alg, rng);
    const LinearMap s = quadratic_operator(a, Execution::serial);
    const LinearMap p = quadratic_operator(a, Execution::parallel);
    EXPECT_TRUE(s.matrix() == p.matrix()) << alg.shorthand();
  }
}

TEST(LinearMapTest, ComposeInverseNorm) {
  const auto alg = AlgebraDescriptor::complex_hermitian(3);
  const Element a = random_effect(alg, 4, EffectProfile::invertible);
  const LinearMap q = quadratic_operator(a);
  const LinearMap id = q.compose(q.inverse());
  EXPECT_LT((id.matrix() - Eigen::MatrixXd::Identity(9, 9)).cwiseAbs().maxCoeff(), 1e-10);
  // ||Q_a||_op = lambda_max^2
  EXPECT_NEAR(q.operator_norm(), std::pow(max_eigenvalue(a), 2), 1e-12);
  EXPECT_THROW(LinearMap::zero(alg).inverse(), NumericalFailure);
}

#pragma once

// Direct Eigen computations used as independent references.

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "seqeff/algebra.hpp"
#include "seqeff/random.hpp"

namespace oracle {

using Eigen::MatrixXcd;
using C = std::complex<double>;

inline MatrixXcd fn(const MatrixXcd& a, double (*f)(double)) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(a);
  Eigen::VectorXd d = es.eigenvalues().unaryExpr([f](double x) { return f(x); });
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

inline MatrixXcd sqrtm(const MatrixXcd& a) {
  return fn(a, [](double x) { return std::sqrt(std::max(x, 0.0)); });
}

// sqrt(a) a^{it} b a^{-it} sqrt(a)
inline MatrixXcd twisted(const MatrixXcd& a, const MatrixXcd& b, double t) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(a);
  Eigen::VectorXcd w(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    const double l = std::max(es.eigenvalues()(i), 0.0);
    w(i) = l > 0 ? std::sqrt(l) * std::exp(C(0, t * std::log(l))) : C(0);
  }
  const MatrixXcd W = es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
  return W * b * W.adjoint();
}

inline double max_abs(const MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

inline seqeff::Element effect(const seqeff::AlgebraDescriptor& alg, std::uint64_t seed,
                              seqeff::EffectProfile p = seqeff::EffectProfile::generic) {
  return seqeff::random_effect(alg, seed, p);
}

inline std::vector<seqeff::AlgebraDescriptor> all_kinds() {
  using seqeff::AlgebraDescriptor;
  return {AlgebraDescriptor::real_symmetric(4), AlgebraDescriptor::complex_hermitian(4),
          AlgebraDescriptor::quaternionic_hermitian(3), AlgebraDescriptor::spin_factor(5),
          AlgebraDescriptor::direct_sum({AlgebraDescriptor::complex_hermitian(2), AlgebraDescriptor::real_symmetric(3)})};
}

inline std::vector<seqeff::AlgebraDescriptor> matrix_kinds() {
  using seqeff::AlgebraDescriptor;
  return {AlgebraDescriptor::real_symmetric(4), AlgebraDescriptor::complex_hermitian(4),
          AlgebraDescriptor::quaternionic_hermitian(3)};
}

}  // namespace oracle

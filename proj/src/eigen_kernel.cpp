#include "eigen_kernel.hpp"

#include <algorithm>
#include <complex>
#include <string>

#include "seqeff/errors.hpp"

namespace seqeff::detail {

namespace {

double max_abs(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

void check_residual(const Eigen::MatrixXcd& m, HermitianEigen& out) {
  const Eigen::MatrixXcd r =
      m * out.vectors - out.vectors * out.values.cast<std::complex<double>>().asDiagonal();
  out.residual = max_abs(r);
  const double scale = std::max(1.0, max_abs(m));
  if (!(out.residual <= 1e-9 * scale)) {
    throw NumericalFailure(
        "eigensolver residual too large: " + std::to_string(out.residual), out.residual);
  }
}

}  // namespace

HermitianEigen hermitian_eigen(const Eigen::MatrixXcd& m, bool real_input) {
  HermitianEigen out;
  if (real_input) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.real());
    if (solver.info() != Eigen::Success) {
      throw NumericalFailure("real symmetric eigensolver did not converge", -1.0);
    }
    out.values = solver.eigenvalues();
    out.vectors = solver.eigenvectors().cast<std::complex<double>>();
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) {
      throw NumericalFailure("Hermitian eigensolver did not converge", -1.0);
    }
    out.values = solver.eigenvalues();
    out.vectors = solver.eigenvectors();
  }
  check_residual(real_input ? Eigen::MatrixXcd(m.real().cast<std::complex<double>>()) : m, out);
  return out;
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m, bool real_input) {
  if (real_input) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.real(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw NumericalFailure("real symmetric eigensolver did not converge", -1.0);
    }
    return solver.eigenvalues();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("Hermitian eigensolver did not converge", -1.0);
  }
  return solver.eigenvalues();
}

Eigen::MatrixXcd quaternionic_conjugate(const Eigen::MatrixXcd& x) {
  const Eigen::Index n = x.rows() / 2;
  Eigen::MatrixXcd y(x.rows(), x.cols());
  const Eigen::MatrixXcd c = x.conjugate();
  y.topLeftCorner(n, n) = c.bottomRightCorner(n, n);
  y.topRightCorner(n, n) = -c.bottomLeftCorner(n, n);
  y.bottomLeftCorner(n, n) = -c.topRightCorner(n, n);
  y.bottomRightCorner(n, n) = c.topLeftCorner(n, n);
  return y;
}

}  // namespace seqeff::detail

#pragma once

// Internal dense Hermitian eigensolver wrapper shared by the algebra,
// spectral and product code.

#include <Eigen/Dense>

namespace seqeff::detail {

struct HermitianEigen {
  Eigen::VectorXd values;    // ascending
  Eigen::MatrixXcd vectors;  // columns are orthonormal eigenvectors
  double residual = 0.0;     // max-entry |A V - V diag(values)|
};

// real_input selects the real symmetric solver (the imaginary part of m is
// ignored). Throws NumericalFailure when the solver does not converge or the
// residual is out of bounds.
HermitianEigen hermitian_eigen(const Eigen::MatrixXcd& m, bool real_input);

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m, bool real_input);

// J conj(X) J^-1 for the 2n x 2n quaternionic embedding.
Eigen::MatrixXcd quaternionic_conjugate(const Eigen::MatrixXcd& x);

}  // namespace seqeff::detail

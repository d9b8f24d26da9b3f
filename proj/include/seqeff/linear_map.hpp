#pragma once

#include <functional>
#include <string>

#include <Eigen/Dense>

#include "seqeff/algebra.hpp"

namespace seqeff {

// Selects between the OpenMP kernels and the serial reference loops. Both
// produce bit-identical results; the serial path exists for testing and
// benchmarking.
enum class Execution { serial, parallel };

// A real-linear operator on an algebra, stored as a matrix acting on the
// orthonormal element coordinates.
class LinearMap {
 public:
  LinearMap(AlgebraDescriptor alg, Eigen::MatrixXd matrix, std::string label);

  static LinearMap identity(const AlgebraDescriptor& alg);
  static LinearMap zero(const AlgebraDescriptor& alg);
  // Tabulates fn on the coordinate basis. fn must be linear.
  static LinearMap from_function(const AlgebraDescriptor& alg, const std::function<Element(const Element&)>& fn,
                                 std::string label, Execution exec = Execution::parallel);

  const AlgebraDescriptor& algebra() const { return alg_; }
  const Eigen::MatrixXd& matrix() const { return matrix_; }
  const std::string& label() const { return label_; }

  Element apply(const Element& x) const;
  // (*this) o inner: applies inner first.
  LinearMap compose(const LinearMap& inner) const;
  // Throws NumericalFailure when the map is numerically singular.
  LinearMap inverse() const;
  // Operator norm with respect to the trace-inner-product norm.
  double operator_norm() const;

  friend LinearMap operator-(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator+(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator*(double s, const LinearMap& a);

 private:
  AlgebraDescriptor alg_;
  Eigen::MatrixXd matrix_;
  std::string label_;
};

// T_a: b -> a * b.
LinearMap jordan_mult_operator(const Element& a, Execution exec = Execution::parallel);
// Q_a: b -> Q_a(b).
LinearMap quadratic_operator(const Element& a, Execution exec = Execution::parallel);
// A o B - B o A
LinearMap commutator(const LinearMap& a, const LinearMap& b);

}  // namespace seqeff

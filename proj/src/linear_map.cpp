#include "seqeff/linear_map.hpp"

#include <exception>
#include <vector>

#include "seqeff/errors.hpp"

namespace seqeff {

LinearMap::LinearMap(AlgebraDescriptor alg, Eigen::MatrixXd matrix, std::string label)
    : alg_(std::move(alg)), matrix_(std::move(matrix)), label_(std::move(label)) {
  const int d = alg_.real_dimension();
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw PreconditionError("linear map matrix must be " + std::to_string(d) + "x" + std::to_string(d));
  }
}

LinearMap LinearMap::identity(const AlgebraDescriptor& alg) {
  const int d = alg.real_dimension();
  return {alg, Eigen::MatrixXd::Identity(d, d), "id"};
}

LinearMap LinearMap::zero(const AlgebraDescriptor& alg) {
  const int d = alg.real_dimension();
  return {alg, Eigen::MatrixXd::Zero(d, d), "0"};
}

LinearMap LinearMap::from_function(const AlgebraDescriptor& alg,
                                   const std::function<Element(const Element&)>& fn, std::string label,
                                   Execution exec) {
  const int d = alg.real_dimension();
  Eigen::MatrixXd m(d, d);
  if (exec == Execution::serial) {
    for (int k = 0; k < d; ++k) {
      m.col(k) = fn(Element::from_coords(alg, Eigen::VectorXd::Unit(d, k))).coords();
    }
  } else {
    std::vector<std::exception_ptr> errors(d);
#pragma omp parallel for schedule(static)
    for (int k = 0; k < d; ++k) {
      try {
        m.col(k) = fn(Element::from_coords(alg, Eigen::VectorXd::Unit(d, k))).coords();
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  return {alg, std::move(m), std::move(label)};
}

Element LinearMap::apply(const Element& x) const {
  if (!(x.algebra() == alg_)) {
    throw DescriptorMismatch("map on " + alg_.shorthand() + " applied to element of " + x.algebra().shorthand());
  }
  return Element::from_coords(alg_, matrix_ * x.coords());
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
  if (!(inner.alg_ == alg_)) throw DescriptorMismatch("cannot compose maps on different algebras");
  return {alg_, matrix_ * inner.matrix_, label_ + " o " + inner.label_};
}

LinearMap LinearMap::inverse() const {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(matrix_);
  lu.setThreshold(1e-12);
  if (!lu.isInvertible()) {
    const double rcond = lu.rcond();
    throw NumericalFailure("linear map " + label_ + " is singular", rcond);
  }
  return {alg_, lu.inverse(), "(" + label_ + ")^-1"};
}

double LinearMap::operator_norm() const {
  if (matrix_.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(matrix_);
  return svd.singularValues()[0];
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) {
  if (!(a.alg_ == b.alg_)) throw DescriptorMismatch("cannot subtract maps on different algebras");
  return {a.alg_, a.matrix_ - b.matrix_, a.label_ + " - " + b.label_};
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  if (!(a.alg_ == b.alg_)) throw DescriptorMismatch("cannot add maps on different algebras");
  return {a.alg_, a.matrix_ + b.matrix_, a.label_ + " + " + b.label_};
}

LinearMap operator*(double s, const LinearMap& a) { return {a.alg_, s * a.matrix_, a.label_}; }

LinearMap jordan_mult_operator(const Element& a, Execution exec) {
  return LinearMap::from_function(
      a.algebra(), [&a](const Element& b) { return jordan_product(a, b); }, "T_a", exec);
}

LinearMap quadratic_operator(const Element& a, Execution exec) {
  return LinearMap::from_function(
      a.algebra(), [&a](const Element& b) { return quadratic_rep(a, b); }, "Q_a", exec);
}

LinearMap commutator(const LinearMap& a, const LinearMap& b) {
  return a.compose(b) - b.compose(a);
}

}  // namespace seqeff

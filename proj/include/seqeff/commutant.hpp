#pragma once

#include <vector>

#include "seqeff/algebra.hpp"
#include "seqeff/linear_map.hpp"

namespace seqeff {

// Orthonormal (trace inner product) basis of {x : x commutes with every s in S}.
// Matrix kinds use the null space of the stacked maps X -> Xs - sX; spin
// factors use the analytic answer. Direct sums are not supported.
std::vector<Element> commutant_basis(const std::vector<Element>& s, Execution exec = Execution::parallel);

// Basis of (S')'. Requires the members of S to commute pairwise.
std::vector<Element> bicommutant_basis(const std::vector<Element>& s, Execution exec = Execution::parallel);

// Distance from x to span(basis) in the trace norm, relative to max(1, |x|).
// basis must be orthonormal.
double span_residual(const std::vector<Element>& basis, const Element& x);

// A commutative family realized as functions on a finite set of points: one
// point per joint eigenprojection.
class FunctionModel {
 public:
  FunctionModel(std::vector<Element> frame, Eigen::MatrixXd embedding);

  int points() const { return static_cast<int>(frame_.size()); }
  const std::vector<Element>& frame() const { return frame_; }
  // points() x real_dimension; row j extracts the value at point j.
  const Eigen::MatrixXd& embedding() const { return embedding_; }

  Eigen::VectorXd to_function(const Element& x) const;
  Element from_function(const Eigen::VectorXd& values) const;

 private:
  std::vector<Element> frame_;
  Eigen::MatrixXd embedding_;
};

// Joint eigenprojections of a commuting family, found by splitting the
// identity along each member's eigenspaces in turn.
FunctionModel simultaneous_diagonalize(const std::vector<Element>& s);

}  // namespace seqeff

#pragma once

#include <string>
#include <vector>

#include "seqeff/algebra.hpp"
#include "seqeff/linear_map.hpp"

namespace seqeff {

// Which sequential product: the standard a o b = Q_{sqrt a}(b), or the twisted
// family a o_t b = sqrt(a) a^{it} b a^{-it} sqrt(a) on complex Hermitian
// matrices (and direct sums of those).
class SequentialProduct {
 public:
  static SequentialProduct standard() { return SequentialProduct(false, 0.0); }
  static SequentialProduct twisted(double t) { return SequentialProduct(true, t); }

  bool is_twisted() const { return twisted_; }
  double twist() const { return t_; }

  // Throws CapabilityError when the product is not defined on alg.
  void require_supported(const AlgebraDescriptor& alg) const;
  bool supports(const AlgebraDescriptor& alg) const;

  // "standard" or "twisted:<t>"
  std::string descriptor() const;
  static SequentialProduct parse(const std::string& s);

  friend bool operator==(const SequentialProduct&, const SequentialProduct&) = default;

 private:
  SequentialProduct(bool twisted, double t) : twisted_(twisted), t_(t) {}
  bool twisted_;
  double t_;
};

// b -> a o b for a fixed positive a, with the square root (and twist)
// computed once. Negative eigenvalues of a are clamped to zero.
class LeftAction {
 public:
  LeftAction(const SequentialProduct& product, const Element& a);
  Element operator()(const Element& b) const;

 private:
  AlgebraDescriptor alg_;
  Eigen::MatrixXcd weight_;      // matrix kinds: b -> W b W*
  std::vector<Element> root_;    // spin factors: b -> Q_root(b); holds one element
  std::vector<LeftAction> parts_;
};

Element seq_product(const SequentialProduct& product, const Element& a, const Element& b);

// L_a: b -> a o b
LinearMap multiplication_operator(const SequentialProduct& product, const Element& a,
                                  Execution exec = Execution::parallel);

// ||a o b - b o a|| <= tol
bool commutes(const SequentialProduct& product, const Element& a, const Element& b, double tol = 1e-8);

// The four equivalent commutation measures for a pair of effects.
struct CommutationMeasures {
  double product;     // ||a o b - b o a||
  double quadratic;   // ||[Q_a, Q_b]||_op
  double jordan;      // ||[T_a, T_b]||_op
  double operator_;   // ||ab - ba|| (analytic on spin factors)
};
CommutationMeasures commutation_measures(const SequentialProduct& product, const Element& a, const Element& b,
                                         Execution exec = Execution::parallel);

// c = q^-1 o a, the unique effect below ceil(q) with q o c = a.
// Requires a <= q (within 1e-9).
Element divide(const SequentialProduct& product, const Element& q, const Element& a);

// Inverse of an invertible positive element (min eigenvalue >= min_eig).
Element inverse(const Element& a, double min_eig = 1e-12);

// Phi = L_b L_{a^-1}, an order automorphism with Phi(a) = b. a and b must be
// invertible (min eigenvalue >= 1e-6). homogeneity_iso(b, a) is its inverse.
LinearMap homogeneity_iso(const Element& a, const Element& b,
                          const SequentialProduct& product = SequentialProduct::standard(),
                          Execution exec = Execution::parallel);

// Theta_q = (L_q)^-1 L'_q, so that q o' x = q o Theta_q(x). q must be invertible.
LinearMap theta_between(const SequentialProduct& product, const SequentialProduct& other, const Element& q,
                        Execution exec = Execution::parallel);

// x -> q^{it} x q^{-it} on complex Hermitian matrices and their direct sums.
LinearMap twist_conjugation(const Element& q, double t, Execution exec = Execution::parallel);

}  // namespace seqeff

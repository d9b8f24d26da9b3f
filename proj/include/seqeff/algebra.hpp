#pragma once

// Finite-dimensional Euclidean Jordan algebras and their elements.
//
// Supported simple algebras: real symmetric, complex Hermitian and quaternionic
// Hermitian matrices, and spin factors; plus finite direct sums of these.
//
// Every matrix kind is stored as a dense complex Hermitian matrix. Real
// symmetric elements keep a zero imaginary part. A quaternionic Hermitian
// n x n matrix A + Bj is stored through its complex 2n x 2n embedding
//
//     X = [[ A,  B    ],
//          [-conj(B), conj(A)]]
//
// which satisfies J conj(X) J^-1 = X for J = [[0, I], [-I, 0]]. The inner
// product on that kind is half the trace of the embedding.
//
// Element coordinates are orthonormal with respect to the trace inner product,
// so <a, b> = coords(a) . coords(b) and operator norms of LinearMap matrices
// are norms with respect to the trace inner product.

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace seqeff {

using Complex = std::complex<double>;

enum class AlgebraKind {
  real_symmetric,
  complex_hermitian,
  quaternionic_hermitian,
  spin_factor,
  direct_sum,
};

class AlgebraDescriptor {
 public:
  static AlgebraDescriptor real_symmetric(int n);
  static AlgebraDescriptor complex_hermitian(int n);
  static AlgebraDescriptor quaternionic_hermitian(int n);
  static AlgebraDescriptor spin_factor(int d);
  static AlgebraDescriptor direct_sum(std::vector<AlgebraDescriptor> summands);

  AlgebraKind kind() const { return kind_; }
  // n for matrix kinds, d for spin factors, 0 for direct sums.
  int size() const { return size_; }
  const std::vector<AlgebraDescriptor>& summands() const { return summands_; }

  int real_dimension() const;
  // Number of elements in a maximal family of orthogonal minimal idempotents.
  int rank() const;
  // Side length of the stored complex matrix (2n for quaternionic).
  int matrix_size() const;
  bool is_matrix_kind() const;

  // Compact form: real:n | complex:n | quat:n | spin:d | sum(<a>,<b>,...)
  std::string shorthand() const;

  friend bool operator==(const AlgebraDescriptor&, const AlgebraDescriptor&) = default;

 private:
  AlgebraDescriptor(AlgebraKind kind, int size, std::vector<AlgebraDescriptor> summands)
      : kind_(kind), size_(size), summands_(std::move(summands)) {}

  AlgebraKind kind_;
  int size_;
  std::vector<AlgebraDescriptor> summands_;
};

class Element {
 public:
  static Element zero(const AlgebraDescriptor& alg);
  static Element identity(const AlgebraDescriptor& alg);
  // Symmetrizes the input (and imposes the real / quaternionic structure).
  static Element from_matrix(const AlgebraDescriptor& alg, const Eigen::MatrixXcd& m);
  static Element from_real_matrix(const AlgebraDescriptor& alg, const Eigen::MatrixXd& m);
  static Element spin(const AlgebraDescriptor& alg, Eigen::VectorXd v, double t);
  static Element direct_sum(const AlgebraDescriptor& alg, std::vector<Element> parts);
  static Element from_coords(const AlgebraDescriptor& alg, const Eigen::VectorXd& coords);

  const AlgebraDescriptor& algebra() const { return alg_; }
  Eigen::VectorXd coords() const;

  // Accessors valid only for the corresponding kind.
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  const Eigen::VectorXd& spin_vector() const { return spin_v_; }
  double spin_scalar() const { return spin_t_; }
  const std::vector<Element>& parts() const { return parts_; }

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(double s);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(double s, Element a) { return a *= s; }
  friend Element operator*(Element a, double s) { return a *= s; }
  friend Element operator-(Element a) { return a *= -1.0; }

 private:
  explicit Element(AlgebraDescriptor alg) : alg_(std::move(alg)) {}

  AlgebraDescriptor alg_;
  Eigen::MatrixXcd matrix_;
  Eigen::VectorXd spin_v_;
  double spin_t_ = 0.0;
  std::vector<Element> parts_;
};

using Effect = Element;

void require_same_algebra(const Element& a, const Element& b);

// a * b, the Jordan product; 0.5 (ab + ba) on matrix kinds.
Element jordan_product(const Element& a, const Element& b);
// Q_a(b) = 2 a*(a*b) - (a*a)*b.
Element quadratic_rep(const Element& a, const Element& b);
double trace_inner_product(const Element& a, const Element& b);

// Eigenvalues in ascending order. Quaternionic eigenvalues are reported once
// per Kramers pair; spin factors report t - |v| and t + |v|.
std::vector<double> eigenvalues(const Element& a);
double min_eigenvalue(const Element& a);
double max_eigenvalue(const Element& a);

// Spectral radius.
double order_unit_norm(const Element& a);
bool is_positive(const Element& a, double tol = 1e-9);
bool is_effect(const Element& a, double tol = 1e-9);
// min-eigenvalue(b - a) >= -tol
bool leq(const Element& a, const Element& b, double tol = 1e-9);

// ||a - b|| / max(1, ||a||, ||b||) in the order-unit norm.
double rel_residual(const Element& a, const Element& b);
bool approx_equal(const Element& a, const Element& b, double tol_rel = 1e-9);

// Size of the operator commutator: ||ab - ba|| (spectral norm) on matrix kinds,
// |v||w| sin(angle) on spin factors, max over summands for direct sums.
double commutator_norm(const Element& a, const Element& b);

// Max-entry deviation of a stored quaternionic matrix from J conj(X) J^-1 = X.
double quaternionic_symmetry_defect(const Element& a);
double quaternionic_symmetry_defect(const Eigen::MatrixXcd& x);

}  // namespace seqeff

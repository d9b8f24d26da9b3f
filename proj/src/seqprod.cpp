#include "seqeff/seqprod.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "eigen_kernel.hpp"
#include "seqeff/errors.hpp"
#include "seqeff/spectral.hpp"

namespace seqeff {

namespace {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

// W = sum_i f(lambda_i) v_i v_i^* over the eigenpairs of a Hermitian matrix.
Eigen::MatrixXcd matrix_function(const Element& a, const std::function<Complex(double)>& f) {
  const auto eig = detail::hermitian_eigen(a.matrix(), a.algebra().kind() == AlgebraKind::real_symmetric);
  const double cut = kernel_cutoff(eig.values.cwiseAbs().maxCoeff());
  Eigen::VectorXcd d(eig.values.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) d[i] = f(std::abs(eig.values[i]) <= cut ? 0.0 : eig.values[i]);
  return eig.vectors * d.asDiagonal() * eig.vectors.adjoint();
}

// a^{it} on the support of a, identity on its kernel.
Eigen::MatrixXcd twist_unitary(const Element& a, double t) {
  return matrix_function(a, [t](double x) {
    return x > 0.0 ? std::polar(1.0, t * std::log(x)) : Complex(1.0, 0.0);
  });
}

// sqrt with negative eigenvalues clamped rather than rejected
Element sqrt_pos_clamped(const Element& a) {
  const auto sd = spectral_decompose(a);
  const double radius = std::max(std::abs(sd.pairs().front().eigenvalue), std::abs(sd.pairs().back().eigenvalue));
  const double cut = kernel_cutoff(radius);
  return functional_calculus(sd, [cut](double x) { return x > cut ? std::sqrt(x) : 0.0; });
}

std::string min_eig_message(const char* what, double lo) {
  std::ostringstream msg;
  msg.precision(17);
  msg << what << " (min eigenvalue " << lo << ")";
  return msg.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// SequentialProduct

bool SequentialProduct::supports(const AlgebraDescriptor& alg) const {
  if (!twisted_) return true;
  if (alg.kind() == AlgebraKind::complex_hermitian) return true;
  if (alg.kind() == AlgebraKind::direct_sum) {
    for (const auto& s : alg.summands()) {
      if (!supports(s)) return false;
    }
    return true;
  }
  return false;
}

void SequentialProduct::require_supported(const AlgebraDescriptor& alg) const {
  if (!supports(alg)) {
    throw CapabilityError("product " + descriptor() + " is only defined on complex Hermitian algebras, not " +
                          alg.shorthand());
  }
}

std::string SequentialProduct::descriptor() const {
  return twisted_ ? "twisted:" + format_double(t_) : "standard";
}

SequentialProduct SequentialProduct::parse(const std::string& s) {
  if (s == "standard") return standard();
  const std::string prefix = "twisted:";
  if (s.rfind(prefix, 0) == 0) {
    const std::string num = s.substr(prefix.size());
    double t = 0.0;
    const auto res = std::from_chars(num.data(), num.data() + num.size(), t);
    if (res.ec == std::errc() && res.ptr == num.data() + num.size() && std::isfinite(t)) return twisted(t);
  }
  throw ConfigError("malformed product descriptor '" + s + "' (expected standard or twisted:<t>)");
}

// ---------------------------------------------------------------------------
// LeftAction

LeftAction::LeftAction(const SequentialProduct& product, const Element& a) : alg_(a.algebra()) {
  product.require_supported(alg_);
  switch (alg_.kind()) {
    case AlgebraKind::direct_sum:
      for (const auto& p : a.parts()) parts_.emplace_back(product, p);
      break;
    case AlgebraKind::spin_factor:
      root_.push_back(sqrt_pos_clamped(a));
      break;
    default:
      if (product.is_twisted()) {
        const double t = product.twist();
        weight_ = matrix_function(a, [t](double x) {
          return x > 0.0 ? std::polar(std::sqrt(x), t * std::log(x)) : Complex(0.0, 0.0);
        });
      } else {
        weight_ = matrix_function(a, [](double x) { return Complex(std::sqrt(std::max(0.0, x)), 0.0); });
      }
  }
}

Element LeftAction::operator()(const Element& b) const {
  if (!(b.algebra() == alg_)) {
    throw DescriptorMismatch("algebra mismatch: " + alg_.shorthand() + " vs " + b.algebra().shorthand());
  }
  switch (alg_.kind()) {
    case AlgebraKind::direct_sum: {
      std::vector<Element> out;
      out.reserve(parts_.size());
      for (std::size_t i = 0; i < parts_.size(); ++i) out.push_back(parts_[i](b.parts()[i]));
      return Element::direct_sum(alg_, std::move(out));
    }
    case AlgebraKind::spin_factor:
      return quadratic_rep(root_.front(), b);
    default:
      return Element::from_matrix(alg_, weight_ * b.matrix() * weight_.adjoint());
  }
}

// ---------------------------------------------------------------------------
// Operations

Element seq_product(const SequentialProduct& product, const Element& a, const Element& b) {
  require_same_algebra(a, b);
  return LeftAction(product, a)(b);
}

LinearMap multiplication_operator(const SequentialProduct& product, const Element& a, Execution exec) {
  const LeftAction left(product, a);
  return LinearMap::from_function(a.algebra(), left, "L_a[" + product.descriptor() + "]", exec);
}

bool commutes(const SequentialProduct& product, const Element& a, const Element& b, double tol) {
  return order_unit_norm(seq_product(product, a, b) - seq_product(product, b, a)) <= tol;
}

CommutationMeasures commutation_measures(const SequentialProduct& product, const Element& a, const Element& b,
                                         Execution exec) {
  require_same_algebra(a, b);
  CommutationMeasures m{};
  m.product = order_unit_norm(seq_product(product, a, b) - seq_product(product, b, a));
  m.quadratic = commutator(quadratic_operator(a, exec), quadratic_operator(b, exec)).operator_norm();
  m.jordan = commutator(jordan_mult_operator(a, exec), jordan_mult_operator(b, exec)).operator_norm();
  m.operator_ = commutator_norm(a, b);
  return m;
}

Element inverse(const Element& a, double min_eig) {
  const auto sd = spectral_decompose(a);
  const double lo = sd.pairs().back().eigenvalue;
  if (!(lo >= min_eig)) throw PreconditionError(min_eig_message("element is not invertible", lo));
  return functional_calculus(sd, [](double x) { return 1.0 / x; });
}

Element divide(const SequentialProduct& product, const Element& q, const Element& a) {
  require_same_algebra(q, a);
  const double lo = min_eigenvalue(q - a);
  if (lo < -1e-9) throw PreconditionError(min_eig_message("divide requires a <= q", lo));
  return seq_product(product, pseudo_inverse(q), a);
}

LinearMap homogeneity_iso(const Element& a, const Element& b, const SequentialProduct& product, Execution exec) {
  require_same_algebra(a, b);
  const double lo = std::min(min_eigenvalue(a), min_eigenvalue(b));
  if (lo < 1e-6) throw PreconditionError(min_eig_message("homogeneity_iso needs invertible a and b", lo));
  const LeftAction left_b(product, b);
  const LeftAction left_a_inv(product, inverse(a));
  return LinearMap::from_function(
      a.algebra(), [&](const Element& x) { return left_b(left_a_inv(x)); }, "L_b L_a^-1", exec);
}

LinearMap theta_between(const SequentialProduct& product, const SequentialProduct& other, const Element& q,
                        Execution exec) {
  const double lo = min_eigenvalue(q);
  if (lo < 1e-9) throw PreconditionError(min_eig_message("theta_between needs an invertible q", lo));
  const LinearMap lq = multiplication_operator(product, q, exec);
  const LinearMap lq_other = multiplication_operator(other, q, exec);
  LinearMap theta = lq.inverse().compose(lq_other);
  return {q.algebra(), theta.matrix(), "Theta_q"};
}

LinearMap twist_conjugation(const Element& q, double t, Execution exec) {
  SequentialProduct::twisted(t).require_supported(q.algebra());
  std::function<Element(const Element&, const Element&)> conj = [&](const Element& qq, const Element& x) {
    if (qq.algebra().kind() == AlgebraKind::direct_sum) {
      std::vector<Element> parts;
      for (std::size_t i = 0; i < qq.parts().size(); ++i) parts.push_back(conj(qq.parts()[i], x.parts()[i]));
      return Element::direct_sum(qq.algebra(), std::move(parts));
    }
    const Eigen::MatrixXcd u = twist_unitary(qq, t);
    return Element::from_matrix(qq.algebra(), u * x.matrix() * u.adjoint());
  };
  return LinearMap::from_function(
      q.algebra(), [&](const Element& x) { return conj(q, x); }, "Ad(q^it)", exec);
}

}  // namespace seqeff

#include "seqeff/order_iso.hpp"

#include "eigen_kernel.hpp"
#include "seqeff/errors.hpp"
#include "seqeff/random.hpp"

namespace seqeff {

namespace {

Eigen::MatrixXcd gaussian_matrix(int n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  }
  return g;
}

// exp(K) for anti-Hermitian K, through the Hermitian matrix iK.
Eigen::MatrixXcd exp_anti_hermitian(const Eigen::MatrixXcd& k) {
  const Eigen::MatrixXcd h = Complex(0.0, 1.0) * k;
  const auto eig = detail::hermitian_eigen(0.5 * (h + h.adjoint()), false);
  Eigen::VectorXcd phases(eig.values.size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) phases[i] = std::polar(1.0, -eig.values[i]);
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

Eigen::MatrixXcd random_unitary(const AlgebraDescriptor& alg, Rng& rng) {
  const int n = alg.matrix_size();
  Eigen::MatrixXcd g = gaussian_matrix(n, rng);
  Eigen::MatrixXcd k = g - g.adjoint();
  switch (alg.kind()) {
    case AlgebraKind::real_symmetric: {
      const Eigen::MatrixXd kr = k.real();
      return exp_anti_hermitian(kr.cast<Complex>()).real().cast<Complex>();
    }
    case AlgebraKind::quaternionic_hermitian:
      k = 0.5 * (k + detail::quaternionic_conjugate(k));
      return exp_anti_hermitian(k);
    default:
      return exp_anti_hermitian(k);
  }
}

Eigen::MatrixXd random_rotation(int d, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) g(i, j) = normal(rng);
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  return qr.householderQ() * Eigen::MatrixXd::Identity(d, d);
}

bool supports(IsoKind kind, const AlgebraDescriptor& alg) {
  switch (kind) {
    case IsoKind::unitary_conjugation:
      return alg.is_matrix_kind();
    case IsoKind::transpose:
      return alg.kind() == AlgebraKind::complex_hermitian;
    case IsoKind::spin_rotation:
      return alg.kind() == AlgebraKind::spin_factor;
  }
  return false;
}

}  // namespace

std::string to_string(IsoKind kind) {
  switch (kind) {
    case IsoKind::unitary_conjugation:
      return "unitary";
    case IsoKind::transpose:
      return "transpose";
    case IsoKind::spin_rotation:
      return "rotation";
  }
  return {};
}

IsoKind iso_kind_from_string(const std::string& s) {
  if (s == "unitary" || s == "unitary_conjugation") return IsoKind::unitary_conjugation;
  if (s == "transpose") return IsoKind::transpose;
  if (s == "rotation" || s == "spin_rotation") return IsoKind::spin_rotation;
  throw ConfigError("unknown order isomorphism kind '" + s + "'");
}

OrderIso::OrderIso(const AlgebraDescriptor& alg, IsoSpec spec) : alg_(alg), spec_(spec) {
  Rng rng(spec.seed);
  std::vector<AlgebraDescriptor> simple =
      alg.kind() == AlgebraKind::direct_sum ? alg.summands() : std::vector<AlgebraDescriptor>{alg};
  bool any = false;
  for (const auto& s : simple) {
    Block b;
    b.active = supports(spec.kind, s);
    if (alg.kind() != AlgebraKind::direct_sum && !b.active) {
      throw CapabilityError("order isomorphism '" + to_string(spec.kind) + "' is not available on " +
                            alg.shorthand());
    }
    if (b.active && spec.kind == IsoKind::unitary_conjugation) b.unitary = random_unitary(s, rng);
    if (b.active && spec.kind == IsoKind::spin_rotation) b.rotation = random_rotation(s.size(), rng);
    any = any || b.active;
    blocks_.push_back(std::move(b));
  }
  if (!any) {
    throw CapabilityError("order isomorphism '" + to_string(spec.kind) + "' acts on no summand of " +
                          alg.shorthand());
  }
}

Element OrderIso::apply_block(const Block& b, const Element& x) const {
  if (!b.active) return x;
  switch (spec_.kind) {
    case IsoKind::unitary_conjugation:
      return Element::from_matrix(x.algebra(), b.unitary * x.matrix() * b.unitary.adjoint());
    case IsoKind::transpose:
      return Element::from_matrix(x.algebra(), x.matrix().transpose());
    case IsoKind::spin_rotation:
      return Element::spin(x.algebra(), b.rotation * x.spin_vector(), x.spin_scalar());
  }
  return x;
}

Element OrderIso::apply(const Element& x) const {
  if (!(x.algebra() == alg_)) throw DescriptorMismatch("order isomorphism applied to a foreign element");
  if (alg_.kind() != AlgebraKind::direct_sum) return apply_block(blocks_.front(), x);
  std::vector<Element> parts;
  for (std::size_t i = 0; i < blocks_.size(); ++i) parts.push_back(apply_block(blocks_[i], x.parts()[i]));
  return Element::direct_sum(alg_, std::move(parts));
}

LinearMap OrderIso::linear_map(Execution exec) const {
  return LinearMap::from_function(
      alg_, [this](const Element& x) { return apply(x); }, "Phi[" + to_string(spec_.kind) + "]", exec);
}

LinearMap make_order_iso(const AlgebraDescriptor& alg, IsoSpec spec, Execution exec) {
  return OrderIso(alg, spec).linear_map(exec);
}

LinearMap conjugation_map(const AlgebraDescriptor& alg, const Eigen::MatrixXcd& u, std::string label,
                          Execution exec) {
  if (!alg.is_matrix_kind()) throw CapabilityError("conjugation map needs a matrix algebra");
  return LinearMap::from_function(
      alg, [&](const Element& x) { return Element::from_matrix(alg, u * x.matrix() * u.adjoint()); },
      std::move(label), exec);
}

}  // namespace seqeff

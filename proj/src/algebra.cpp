#include "seqeff/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eigen_kernel.hpp"
#include "seqeff/errors.hpp"

namespace seqeff {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

void require_positive_size(int n, const char* what) {
  if (n < 1) {
    throw PreconditionError(std::string(what) + " size must be >= 1, got " + std::to_string(n));
  }
}

Eigen::MatrixXcd hermitian_part(const Eigen::MatrixXcd& m) { return 0.5 * (m + m.adjoint()); }

Eigen::MatrixXcd canonical_matrix(AlgebraKind kind, const Eigen::MatrixXcd& m) {
  Eigen::MatrixXcd h = hermitian_part(m);
  switch (kind) {
    case AlgebraKind::real_symmetric:
      h = Eigen::MatrixXcd(h.real().cast<Complex>());
      break;
    case AlgebraKind::quaternionic_hermitian:
      h = 0.5 * (h + detail::quaternionic_conjugate(h));
      break;
    default:
      break;
  }
  return h;
}

// Orthonormal coordinates of the Hermitian matrix block [first, first + n).
void hermitian_coords(const Eigen::MatrixXcd& m, int n, bool with_imag, Eigen::VectorXd& out,
                      Eigen::Index& pos) {
  for (int i = 0; i < n; ++i) out[pos++] = m(i, i).real();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      out[pos++] = kSqrt2 * m(i, j).real();
      if (with_imag) out[pos++] = kSqrt2 * m(i, j).imag();
    }
  }
}

void hermitian_from_coords(const Eigen::VectorXd& c, int n, bool with_imag, Eigen::MatrixXcd& m,
                           Eigen::Index& pos) {
  for (int i = 0; i < n; ++i) m(i, i) = c[pos++];
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double re = c[pos++] / kSqrt2;
      const double im = with_imag ? c[pos++] / kSqrt2 : 0.0;
      m(i, j) = Complex(re, im);
      m(j, i) = Complex(re, -im);
    }
  }
}

template <typename Fn>
Element map_parts(const Element& a, const Element& b, Fn fn) {
  std::vector<Element> parts;
  parts.reserve(a.parts().size());
  for (std::size_t i = 0; i < a.parts().size(); ++i) parts.push_back(fn(a.parts()[i], b.parts()[i]));
  return Element::direct_sum(a.algebra(), std::move(parts));
}

double spectral_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()[0];
}

}  // namespace

// ---------------------------------------------------------------------------
// AlgebraDescriptor

AlgebraDescriptor AlgebraDescriptor::real_symmetric(int n) {
  require_positive_size(n, "real symmetric");
  return {AlgebraKind::real_symmetric, n, {}};
}

AlgebraDescriptor AlgebraDescriptor::complex_hermitian(int n) {
  require_positive_size(n, "complex Hermitian");
  return {AlgebraKind::complex_hermitian, n, {}};
}

AlgebraDescriptor AlgebraDescriptor::quaternionic_hermitian(int n) {
  require_positive_size(n, "quaternionic Hermitian");
  return {AlgebraKind::quaternionic_hermitian, n, {}};
}

AlgebraDescriptor AlgebraDescriptor::spin_factor(int d) {
  require_positive_size(d, "spin factor");
  return {AlgebraKind::spin_factor, d, {}};
}

AlgebraDescriptor AlgebraDescriptor::direct_sum(std::vector<AlgebraDescriptor> summands) {
  if (summands.empty()) throw PreconditionError("direct sum needs at least one summand");
  return {AlgebraKind::direct_sum, 0, std::move(summands)};
}

int AlgebraDescriptor::real_dimension() const {
  const int n = size_;
  switch (kind_) {
    case AlgebraKind::real_symmetric:
      return n * (n + 1) / 2;
    case AlgebraKind::complex_hermitian:
      return n * n;
    case AlgebraKind::quaternionic_hermitian:
      return n * (2 * n - 1);
    case AlgebraKind::spin_factor:
      return n + 1;
    case AlgebraKind::direct_sum:
      return std::accumulate(summands_.begin(), summands_.end(), 0,
                             [](int acc, const AlgebraDescriptor& s) { return acc + s.real_dimension(); });
  }
  return 0;
}

int AlgebraDescriptor::rank() const {
  switch (kind_) {
    case AlgebraKind::spin_factor:
      return 2;
    case AlgebraKind::direct_sum:
      return std::accumulate(summands_.begin(), summands_.end(), 0,
                             [](int acc, const AlgebraDescriptor& s) { return acc + s.rank(); });
    default:
      return size_;
  }
}

int AlgebraDescriptor::matrix_size() const {
  switch (kind_) {
    case AlgebraKind::real_symmetric:
    case AlgebraKind::complex_hermitian:
      return size_;
    case AlgebraKind::quaternionic_hermitian:
      return 2 * size_;
    default:
      return 0;
  }
}

bool AlgebraDescriptor::is_matrix_kind() const {
  return kind_ == AlgebraKind::real_symmetric || kind_ == AlgebraKind::complex_hermitian ||
         kind_ == AlgebraKind::quaternionic_hermitian;
}

std::string AlgebraDescriptor::shorthand() const {
  switch (kind_) {
    case AlgebraKind::real_symmetric:
      return "real:" + std::to_string(size_);
    case AlgebraKind::complex_hermitian:
      return "complex:" + std::to_string(size_);
    case AlgebraKind::quaternionic_hermitian:
      return "quat:" + std::to_string(size_);
    case AlgebraKind::spin_factor:
      return "spin:" + std::to_string(size_);
    case AlgebraKind::direct_sum: {
      std::string s = "sum(";
      for (std::size_t i = 0; i < summands_.size(); ++i) {
        if (i) s += ",";
        s += summands_[i].shorthand();
      }
      return s + ")";
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Element

Element Element::zero(const AlgebraDescriptor& alg) {
  Element e(alg);
  switch (alg.kind()) {
    case AlgebraKind::spin_factor:
      e.spin_v_ = Eigen::VectorXd::Zero(alg.size());
      break;
    case AlgebraKind::direct_sum:
      for (const auto& s : alg.summands()) e.parts_.push_back(zero(s));
      break;
    default:
      e.matrix_ = Eigen::MatrixXcd::Zero(alg.matrix_size(), alg.matrix_size());
  }
  return e;
}

Element Element::identity(const AlgebraDescriptor& alg) {
  Element e(alg);
  switch (alg.kind()) {
    case AlgebraKind::spin_factor:
      e.spin_v_ = Eigen::VectorXd::Zero(alg.size());
      e.spin_t_ = 1.0;
      break;
    case AlgebraKind::direct_sum:
      for (const auto& s : alg.summands()) e.parts_.push_back(identity(s));
      break;
    default:
      e.matrix_ = Eigen::MatrixXcd::Identity(alg.matrix_size(), alg.matrix_size());
  }
  return e;
}

Element Element::from_matrix(const AlgebraDescriptor& alg, const Eigen::MatrixXcd& m) {
  if (!alg.is_matrix_kind()) throw CapabilityError("from_matrix needs a matrix algebra, got " + alg.shorthand());
  if (m.rows() != alg.matrix_size() || m.cols() != alg.matrix_size()) {
    throw PreconditionError("matrix shape does not match " + alg.shorthand());
  }
  Element e(alg);
  e.matrix_ = canonical_matrix(alg.kind(), m);
  return e;
}

Element Element::from_real_matrix(const AlgebraDescriptor& alg, const Eigen::MatrixXd& m) {
  return from_matrix(alg, m.cast<Complex>());
}

Element Element::spin(const AlgebraDescriptor& alg, Eigen::VectorXd v, double t) {
  if (alg.kind() != AlgebraKind::spin_factor) throw CapabilityError("spin element needs a spin factor");
  if (v.size() != alg.size()) throw PreconditionError("spin vector length does not match " + alg.shorthand());
  Element e(alg);
  e.spin_v_ = std::move(v);
  e.spin_t_ = t;
  return e;
}

Element Element::direct_sum(const AlgebraDescriptor& alg, std::vector<Element> parts) {
  if (alg.kind() != AlgebraKind::direct_sum || parts.size() != alg.summands().size()) {
    throw PreconditionError("direct sum parts do not match " + alg.shorthand());
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!(parts[i].algebra() == alg.summands()[i])) {
      throw DescriptorMismatch("summand " + std::to_string(i) + " is " + parts[i].algebra().shorthand() +
                               ", expected " + alg.summands()[i].shorthand());
    }
  }
  Element e(alg);
  e.parts_ = std::move(parts);
  return e;
}

Element Element::from_coords(const AlgebraDescriptor& alg, const Eigen::VectorXd& c) {
  if (c.size() != alg.real_dimension()) {
    throw PreconditionError("coordinate vector has length " + std::to_string(c.size()) + ", " +
                            alg.shorthand() + " needs " + std::to_string(alg.real_dimension()));
  }
  Element e(alg);
  Eigen::Index pos = 0;
  const int n = alg.size();
  switch (alg.kind()) {
    case AlgebraKind::real_symmetric:
    case AlgebraKind::complex_hermitian:
      e.matrix_ = Eigen::MatrixXcd::Zero(n, n);
      hermitian_from_coords(c, n, alg.kind() == AlgebraKind::complex_hermitian, e.matrix_, pos);
      break;
    case AlgebraKind::quaternionic_hermitian: {
      Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
      hermitian_from_coords(c, n, true, a, pos);
      Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const double re = c[pos++] / kSqrt2;
          const double im = c[pos++] / kSqrt2;
          b(i, j) = Complex(re, im);
          b(j, i) = -b(i, j);
        }
      }
      e.matrix_.resize(2 * n, 2 * n);
      e.matrix_.topLeftCorner(n, n) = a;
      e.matrix_.topRightCorner(n, n) = b;
      e.matrix_.bottomLeftCorner(n, n) = -b.conjugate();
      e.matrix_.bottomRightCorner(n, n) = a.conjugate();
      break;
    }
    case AlgebraKind::spin_factor:
      e.spin_v_ = c.head(n) / kSqrt2;
      e.spin_t_ = c[n] / kSqrt2;
      break;
    case AlgebraKind::direct_sum:
      for (const auto& s : alg.summands()) {
        const int d = s.real_dimension();
        e.parts_.push_back(from_coords(s, c.segment(pos, d)));
        pos += d;
      }
      break;
  }
  return e;
}

Eigen::VectorXd Element::coords() const {
  Eigen::VectorXd out(alg_.real_dimension());
  Eigen::Index pos = 0;
  const int n = alg_.size();
  switch (alg_.kind()) {
    case AlgebraKind::real_symmetric:
    case AlgebraKind::complex_hermitian:
      hermitian_coords(matrix_, n, alg_.kind() == AlgebraKind::complex_hermitian, out, pos);
      break;
    case AlgebraKind::quaternionic_hermitian: {
      const Eigen::MatrixXcd a = matrix_.topLeftCorner(n, n);
      hermitian_coords(a, n, true, out, pos);
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          out[pos++] = kSqrt2 * matrix_(i, n + j).real();
          out[pos++] = kSqrt2 * matrix_(i, n + j).imag();
        }
      }
      break;
    }
    case AlgebraKind::spin_factor:
      out.head(n) = kSqrt2 * spin_v_;
      out[n] = kSqrt2 * spin_t_;
      break;
    case AlgebraKind::direct_sum:
      for (const auto& p : parts_) {
        const Eigen::VectorXd c = p.coords();
        out.segment(pos, c.size()) = c;
        pos += c.size();
      }
      break;
  }
  return out;
}

Element& Element::operator+=(const Element& o) {
  require_same_algebra(*this, o);
  switch (alg_.kind()) {
    case AlgebraKind::spin_factor:
      spin_v_ += o.spin_v_;
      spin_t_ += o.spin_t_;
      break;
    case AlgebraKind::direct_sum:
      for (std::size_t i = 0; i < parts_.size(); ++i) parts_[i] += o.parts_[i];
      break;
    default:
      matrix_ += o.matrix_;
  }
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same_algebra(*this, o);
  switch (alg_.kind()) {
    case AlgebraKind::spin_factor:
      spin_v_ -= o.spin_v_;
      spin_t_ -= o.spin_t_;
      break;
    case AlgebraKind::direct_sum:
      for (std::size_t i = 0; i < parts_.size(); ++i) parts_[i] -= o.parts_[i];
      break;
    default:
      matrix_ -= o.matrix_;
  }
  return *this;
}

Element& Element::operator*=(double s) {
  switch (alg_.kind()) {
    case AlgebraKind::spin_factor:
      spin_v_ *= s;
      spin_t_ *= s;
      break;
    case AlgebraKind::direct_sum:
      for (auto& p : parts_) p *= s;
      break;
    default:
      matrix_ *= s;
  }
  return *this;
}

// ---------------------------------------------------------------------------
// Operations

void require_same_algebra(const Element& a, const Element& b) {
  if (!(a.algebra() == b.algebra())) {
    throw DescriptorMismatch("algebra mismatch: " + a.algebra().shorthand() + " vs " + b.algebra().shorthand());
  }
}

Element jordan_product(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  const auto& alg = a.algebra();
  switch (alg.kind()) {
    case AlgebraKind::spin_factor:
      return Element::spin(alg, b.spin_scalar() * a.spin_vector() + a.spin_scalar() * b.spin_vector(),
                           a.spin_vector().dot(b.spin_vector()) + a.spin_scalar() * b.spin_scalar());
    case AlgebraKind::direct_sum:
      return map_parts(a, b, [](const Element& x, const Element& y) { return jordan_product(x, y); });
    default: {
      const Eigen::MatrixXcd ab = a.matrix() * b.matrix();
      return Element::from_matrix(alg, 0.5 * (ab + ab.adjoint()));
    }
  }
}

Element quadratic_rep(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  return 2.0 * jordan_product(a, jordan_product(a, b)) - jordan_product(jordan_product(a, a), b);
}

double trace_inner_product(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  const auto& alg = a.algebra();
  switch (alg.kind()) {
    case AlgebraKind::spin_factor:
      return 2.0 * (a.spin_vector().dot(b.spin_vector()) + a.spin_scalar() * b.spin_scalar());
    case AlgebraKind::direct_sum: {
      double s = 0.0;
      for (std::size_t i = 0; i < a.parts().size(); ++i) s += trace_inner_product(a.parts()[i], b.parts()[i]);
      return s;
    }
    case AlgebraKind::quaternionic_hermitian:
      return 0.5 * (a.matrix() * b.matrix()).trace().real();
    default:
      return (a.matrix() * b.matrix()).trace().real();
  }
}

std::vector<double> eigenvalues(const Element& a) {
  const auto& alg = a.algebra();
  std::vector<double> out;
  switch (alg.kind()) {
    case AlgebraKind::spin_factor: {
      const double r = a.spin_vector().norm();
      out = {a.spin_scalar() - r, a.spin_scalar() + r};
      break;
    }
    case AlgebraKind::direct_sum:
      for (const auto& p : a.parts()) {
        const auto ev = eigenvalues(p);
        out.insert(out.end(), ev.begin(), ev.end());
      }
      std::sort(out.begin(), out.end());
      break;
    case AlgebraKind::quaternionic_hermitian: {
      const Eigen::VectorXd ev = detail::hermitian_eigenvalues(a.matrix(), false);
      for (Eigen::Index i = 0; i < ev.size(); i += 2) out.push_back(0.5 * (ev[i] + ev[i + 1]));
      break;
    }
    default: {
      const Eigen::VectorXd ev =
          detail::hermitian_eigenvalues(a.matrix(), alg.kind() == AlgebraKind::real_symmetric);
      out.assign(ev.data(), ev.data() + ev.size());
    }
  }
  return out;
}

double min_eigenvalue(const Element& a) { return eigenvalues(a).front(); }
double max_eigenvalue(const Element& a) { return eigenvalues(a).back(); }

double order_unit_norm(const Element& a) {
  const auto ev = eigenvalues(a);
  return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

bool is_positive(const Element& a, double tol) { return min_eigenvalue(a) >= -tol; }

bool is_effect(const Element& a, double tol) {
  const auto ev = eigenvalues(a);
  return ev.front() >= -tol && ev.back() <= 1.0 + tol;
}

bool leq(const Element& a, const Element& b, double tol) { return min_eigenvalue(b - a) >= -tol; }

double rel_residual(const Element& a, const Element& b) {
  const double scale = std::max({1.0, order_unit_norm(a), order_unit_norm(b)});
  return order_unit_norm(a - b) / scale;
}

bool approx_equal(const Element& a, const Element& b, double tol_rel) { return rel_residual(a, b) <= tol_rel; }

double commutator_norm(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  switch (a.algebra().kind()) {
    case AlgebraKind::spin_factor: {
      const Eigen::VectorXd& v = a.spin_vector();
      const Eigen::VectorXd& w = b.spin_vector();
      const double cross = v.squaredNorm() * w.squaredNorm() - std::pow(v.dot(w), 2);
      return std::sqrt(std::max(0.0, cross));
    }
    case AlgebraKind::direct_sum: {
      double m = 0.0;
      for (std::size_t i = 0; i < a.parts().size(); ++i) m = std::max(m, commutator_norm(a.parts()[i], b.parts()[i]));
      return m;
    }
    default:
      return spectral_norm(a.matrix() * b.matrix() - b.matrix() * a.matrix());
  }
}

double quaternionic_symmetry_defect(const Element& a) {
  if (a.algebra().kind() != AlgebraKind::quaternionic_hermitian) return 0.0;
  return quaternionic_symmetry_defect(a.matrix());
}

double quaternionic_symmetry_defect(const Eigen::MatrixXcd& x) {
  return (detail::quaternionic_conjugate(x) - x).cwiseAbs().maxCoeff();
}

}  // namespace seqeff

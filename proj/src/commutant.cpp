#include "seqeff/commutant.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include "seqeff/errors.hpp"
#include "seqeff/seqprod.hpp"
#include "seqeff/spectral.hpp"

namespace seqeff {

namespace {

const AlgebraDescriptor& common_algebra(const std::vector<Element>& s) {
  for (std::size_t i = 1; i < s.size(); ++i) require_same_algebra(s[0], s[i]);
  return s.front().algebra();
}

std::vector<Element> whole_algebra(const AlgebraDescriptor& alg) {
  const int d = alg.real_dimension();
  std::vector<Element> out;
  for (int k = 0; k < d; ++k) out.push_back(Element::from_coords(alg, Eigen::VectorXd::Unit(d, k)));
  return out;
}

std::vector<Element> matrix_commutant(const AlgebraDescriptor& alg, const std::vector<Element>& s,
                                      Execution exec) {
  const int d = alg.real_dimension();
  const int n = alg.matrix_size();
  const Eigen::Index block = 2 * static_cast<Eigen::Index>(n) * n;
  Eigen::MatrixXd stacked(block * static_cast<Eigen::Index>(s.size()), d);

  auto fill_column = [&](int k) {
    const Element e = Element::from_coords(alg, Eigen::VectorXd::Unit(d, k));
    for (std::size_t j = 0; j < s.size(); ++j) {
      const Eigen::MatrixXcd c = e.matrix() * s[j].matrix() - s[j].matrix() * e.matrix();
      const Eigen::Index off = block * static_cast<Eigen::Index>(j);
      stacked.col(k).segment(off, n * n) = c.real().reshaped();
      stacked.col(k).segment(off + n * n, n * n) = c.imag().reshaped();
    }
  };
  if (exec == Execution::serial) {
    for (int k = 0; k < d; ++k) fill_column(k);
  } else {
#pragma omp parallel for schedule(static)
    for (int k = 0; k < d; ++k) fill_column(k);
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double threshold = 1e-8 * std::max(1.0, sv.size() ? sv[0] : 0.0);
  std::vector<Element> out;
  for (int k = 0; k < d; ++k) {
    const double sigma = k < sv.size() ? sv[k] : 0.0;
    if (sigma <= threshold) out.push_back(Element::from_coords(alg, svd.matrixV().col(k)));
  }
  return out;
}

std::vector<Element> spin_commutant(const AlgebraDescriptor& alg, const std::vector<Element>& s) {
  constexpr double kZero = 0.5 * kDefaultClusterGap;
  const Eigen::VectorXd* axis = nullptr;
  bool parallel = true;
  for (const auto& e : s) {
    const Eigen::VectorXd& v = e.spin_vector();
    if (v.norm() <= kZero) continue;
    if (!axis) {
      axis = &v;
      continue;
    }
    const Eigen::VectorXd u = axis->normalized();
    if ((v - v.dot(u) * u).norm() > kZero) parallel = false;
  }
  if (!axis) return whole_algebra(alg);
  // (0, 1) has trace norm sqrt(2); (u, 0) likewise.
  const double scale = 1.0 / std::sqrt(2.0);
  std::vector<Element> out{Element::spin(alg, Eigen::VectorXd::Zero(alg.size()), scale)};
  if (parallel) out.push_back(Element::spin(alg, scale * axis->normalized(), 0.0));
  return out;
}

}  // namespace

std::vector<Element> commutant_basis(const std::vector<Element>& s, Execution exec) {
  if (s.empty()) throw PreconditionError("commutant_basis needs at least one element");
  const auto& alg = common_algebra(s);
  if (alg.is_matrix_kind()) return matrix_commutant(alg, s, exec);
  if (alg.kind() == AlgebraKind::spin_factor) return spin_commutant(alg, s);
  throw CapabilityError("commutant is only computed on matrix algebras and spin factors, not " + alg.shorthand());
}

std::vector<Element> bicommutant_basis(const std::vector<Element>& s, Execution exec) {
  if (s.empty()) throw PreconditionError("bicommutant_basis needs at least one element");
  common_algebra(s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const double scale = std::max({1.0, order_unit_norm(s[i]), order_unit_norm(s[j])});
      const double c = commutator_norm(s[i], s[j]);
      if (c > 1e-9 * scale * scale) {
        throw PreconditionError("elements " + std::to_string(i) + " and " + std::to_string(j) +
                                " do not commute (commutator norm " + std::to_string(c) + ")");
      }
    }
  }
  return commutant_basis(commutant_basis(s, exec), exec);
}

double span_residual(const std::vector<Element>& basis, const Element& x) {
  Eigen::VectorXd r = x.coords();
  const double scale = std::max(1.0, r.norm());
  for (const auto& b : basis) {
    const Eigen::VectorXd c = b.coords();
    r -= c.dot(r) * c;
  }
  return r.norm() / scale;
}

// ---------------------------------------------------------------------------
// FunctionModel

FunctionModel::FunctionModel(std::vector<Element> frame, Eigen::MatrixXd embedding)
    : frame_(std::move(frame)), embedding_(std::move(embedding)) {
  if (frame_.empty()) throw PreconditionError("function model needs a non-empty frame");
  if (embedding_.rows() != static_cast<Eigen::Index>(frame_.size()) ||
      embedding_.cols() != frame_.front().algebra().real_dimension()) {
    throw PreconditionError("function model embedding has the wrong shape");
  }
}

Eigen::VectorXd FunctionModel::to_function(const Element& x) const {
  require_same_algebra(frame_.front(), x);
  return embedding_ * x.coords();
}

Element FunctionModel::from_function(const Eigen::VectorXd& values) const {
  if (values.size() != points()) throw PreconditionError("function has the wrong number of points");
  Element out = Element::zero(frame_.front().algebra());
  for (int j = 0; j < points(); ++j) out += values[j] * frame_[j];
  return out;
}

FunctionModel simultaneous_diagonalize(const std::vector<Element>& s) {
  if (s.empty()) throw PreconditionError("simultaneous_diagonalize needs at least one element");
  const auto& alg = common_algebra(s);
  const auto standard = SequentialProduct::standard();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const bool effects = is_effect(s[i]) && is_effect(s[j]);
      const bool ok = effects ? commutes(standard, s[i], s[j], 1e-8) : commutator_norm(s[i], s[j]) <= 1e-8;
      if (!ok) {
        throw PreconditionError("elements " + std::to_string(i) + " and " + std::to_string(j) +
                                " do not commute");
      }
    }
  }

  std::vector<Element> frame{Element::identity(alg)};
  for (const auto& x : s) {
    std::vector<Element> next;
    for (const auto& p : frame) {
      const auto sd = spectral_decompose(quadratic_rep(p, x));
      for (const auto& pair : sd.pairs()) {
        Element piece = quadratic_rep(p, pair.idempotent);
        if (trace_inner_product(piece, Element::identity(alg)) >= 0.5) next.push_back(std::move(piece));
      }
    }
    frame = std::move(next);
  }

  Eigen::MatrixXd embedding(static_cast<Eigen::Index>(frame.size()), alg.real_dimension());
  for (std::size_t j = 0; j < frame.size(); ++j) {
    const Eigen::VectorXd c = frame[j].coords();
    embedding.row(static_cast<Eigen::Index>(j)) = c.transpose() / c.squaredNorm();
  }
  return {std::move(frame), std::move(embedding)};
}

}  // namespace seqeff

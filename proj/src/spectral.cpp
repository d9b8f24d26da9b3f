#include "seqeff/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "eigen_kernel.hpp"
#include "seqeff/errors.hpp"

namespace seqeff {

namespace {

// Indices [begin, end) into a descending list, one range per cluster.
std::vector<std::pair<std::size_t, std::size_t>> cluster_descending(const std::vector<double>& values,
                                                                    double gap) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= values.size(); ++i) {
    if (i == values.size() || values[i - 1] - values[i] > gap) {
      out.emplace_back(start, i);
      start = i;
    }
  }
  return out;
}

SpectralDecomposition decompose_matrix(const Element& a, double gap) {
  const auto& alg = a.algebra();
  const auto eig = detail::hermitian_eigen(a.matrix(), alg.kind() == AlgebraKind::real_symmetric);
  const Eigen::Index n = eig.values.size();
  std::vector<double> desc(n);
  for (Eigen::Index i = 0; i < n; ++i) desc[i] = eig.values[n - 1 - i];

  std::vector<SpectralPair> pairs;
  for (const auto& [b, e] : cluster_descending(desc, gap)) {
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
    double sum = 0.0;
    for (std::size_t i = b; i < e; ++i) {
      const auto v = eig.vectors.col(n - 1 - static_cast<Eigen::Index>(i));
      p += v * v.adjoint();
      sum += desc[i];
    }
    pairs.push_back({sum / static_cast<double>(e - b), Element::from_matrix(alg, p)});
  }
  return {alg, std::move(pairs)};
}

SpectralDecomposition decompose_spin(const Element& a, double gap) {
  const auto& alg = a.algebra();
  const double r = a.spin_vector().norm();
  const double t = a.spin_scalar();
  if (2.0 * r <= gap) return {alg, {{t, Element::identity(alg)}}};
  const Eigen::VectorXd u = a.spin_vector() / r;
  return {alg,
          {{t + r, Element::spin(alg, 0.5 * u, 0.5)}, {t - r, Element::spin(alg, -0.5 * u, 0.5)}}};
}

SpectralDecomposition decompose_sum(const Element& a, double gap) {
  const auto& alg = a.algebra();
  struct Item {
    double value;
    std::size_t part;
    const Element* idempotent;
  };
  std::vector<SpectralDecomposition> blocks;
  blocks.reserve(a.parts().size());
  for (const auto& p : a.parts()) blocks.push_back(spectral_decompose(p, gap));

  std::vector<Item> items;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (const auto& pr : blocks[i].pairs()) items.push_back({pr.eigenvalue, i, &pr.idempotent});
  }
  std::stable_sort(items.begin(), items.end(), [](const Item& x, const Item& y) { return x.value > y.value; });
  std::vector<double> desc;
  for (const auto& it : items) desc.push_back(it.value);

  std::vector<SpectralPair> pairs;
  for (const auto& [b, e] : cluster_descending(desc, gap)) {
    std::vector<Element> parts;
    for (const auto& s : alg.summands()) parts.push_back(Element::zero(s));
    double sum = 0.0;
    for (std::size_t i = b; i < e; ++i) {
      parts[items[i].part] += *items[i].idempotent;
      sum += items[i].value;
    }
    pairs.push_back({sum / static_cast<double>(e - b), Element::direct_sum(alg, std::move(parts))});
  }
  return {alg, std::move(pairs)};
}

}  // namespace

Element SpectralDecomposition::reconstruct() const {
  Element out = Element::zero(alg_);
  for (const auto& p : pairs_) out += p.eigenvalue * p.idempotent;
  return out;
}

Element SpectralDecomposition::projection_where(const std::function<bool(double)>& pred) const {
  Element out = Element::zero(alg_);
  for (const auto& p : pairs_) {
    if (pred(p.eigenvalue)) out += p.idempotent;
  }
  return out;
}

SpectralDecomposition spectral_decompose(const Element& a, double gap) {
  if (!(gap > 0.0)) throw PreconditionError("cluster gap must be positive");
  switch (a.algebra().kind()) {
    case AlgebraKind::spin_factor:
      return decompose_spin(a, gap);
    case AlgebraKind::direct_sum:
      return decompose_sum(a, gap);
    default:
      return decompose_matrix(a, gap);
  }
}

Element functional_calculus(const SpectralDecomposition& sd, const std::function<double(double)>& f) {
  Element out = Element::zero(sd.algebra());
  for (const auto& p : sd.pairs()) {
    const double y = f(p.eigenvalue);
    if (!std::isfinite(y)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "function is undefined at eigenvalue " << p.eigenvalue;
      throw DomainError(msg.str());
    }
    out += y * p.idempotent;
  }
  return out;
}

Element functional_calculus(const Element& a, const std::function<double(double)>& f) {
  return functional_calculus(spectral_decompose(a), f);
}

Element sqrt_pos(const Element& a) {
  const auto sd = spectral_decompose(a);
  const double lo = sd.pairs().back().eigenvalue;
  if (lo < -1e-9) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "sqrt_pos needs a positive element, min eigenvalue " << lo;
    throw PreconditionError(msg.str());
  }
  const double cut = kernel_cutoff(std::max(std::abs(lo), std::abs(sd.pairs().front().eigenvalue)));
  return functional_calculus(sd, [cut](double x) { return x > cut ? std::sqrt(x) : 0.0; });
}

Element floor_effect(const Element& a) {
  return spectral_decompose(a).projection_where([](double x) { return x >= 1.0 - kSharpThreshold; });
}

Element ceiling_effect(const Element& a) {
  return spectral_decompose(a).projection_where([](double x) { return x > kSharpThreshold; });
}

bool is_sharp(const Element& a, double tol) {
  return order_unit_norm(jordan_product(a, a) - a) <= tol;
}

Element pseudo_inverse(const Element& b) {
  return functional_calculus(spectral_decompose(b),
                             [](double x) { return x > kSharpThreshold ? 1.0 / x : 0.0; });
}

std::vector<Element> dyadic_approximation(const Element& a, int n_max) {
  if (n_max < 1) throw PreconditionError("dyadic_approximation needs n_max >= 1");
  constexpr double kGuard = 1e-12;
  const auto sd = spectral_decompose(a);
  std::vector<Element> out;
  out.reserve(n_max);
  for (int m = 1; m <= n_max; ++m) {
    const long n = 1L << m;
    Element q = Element::zero(a.algebra());
    for (long k = 1; k <= n; ++k) {
      const double level = static_cast<double>(k) / static_cast<double>(n);
      const Element p = sd.projection_where([&](double x) { return x > level + kGuard; });
      q += (1.0 / static_cast<double>(n)) * p;
    }
    out.push_back(std::move(q));
  }
  return out;
}

Element iterated_square(const Element& a, int k) {
  Element x = a;
  for (int i = 0; i < k; ++i) x = jordan_product(x, x);
  return x;
}

}  // namespace seqeff

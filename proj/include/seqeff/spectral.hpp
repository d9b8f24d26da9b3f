#pragma once

#include <algorithm>
#include <limits>

#include <functional>
#include <utility>
#include <vector>

#include "seqeff/algebra.hpp"

namespace seqeff {

inline constexpr double kDefaultClusterGap = 1e-8;
inline constexpr double kSharpThreshold = 1e-9;

// Eigenvalues within this of zero are rounding noise from the eigensolver.
// Square roots send them to exactly 0; otherwise noise of 1e-16 would come
// back as 1e-8.
inline double kernel_cutoff(double spectral_radius) {
  return 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, spectral_radius);
}

struct SpectralPair {
  double eigenvalue;
  Element idempotent;
};

// a = sum_i eigenvalue_i * idempotent_i with orthogonal idempotents summing
// to the identity. Eigenvalues strictly decreasing.
class SpectralDecomposition {
 public:
  SpectralDecomposition(AlgebraDescriptor alg, std::vector<SpectralPair> pairs)
      : alg_(std::move(alg)), pairs_(std::move(pairs)) {}

  const AlgebraDescriptor& algebra() const { return alg_; }
  const std::vector<SpectralPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }

  Element reconstruct() const;
  // Sum of the idempotents whose eigenvalue satisfies pred.
  Element projection_where(const std::function<bool(double)>& pred) const;

 private:
  AlgebraDescriptor alg_;
  std::vector<SpectralPair> pairs_;
};

// Eigenvalues closer than gap (chained) are merged into one idempotent.
SpectralDecomposition spectral_decompose(const Element& a, double gap = kDefaultClusterGap);

// sum_i f(lambda_i) p_i. Throws DomainError when f is not finite at an eigenvalue.
Element functional_calculus(const Element& a, const std::function<double(double)>& f);
Element functional_calculus(const SpectralDecomposition& sd, const std::function<double(double)>& f);

Element sqrt_pos(const Element& a);

// Largest sharp effect below a: idempotents with eigenvalue >= 1 - 1e-9.
Element floor_effect(const Element& a);
// Support projection: idempotents with eigenvalue > 1e-9.
Element ceiling_effect(const Element& a);
bool is_sharp(const Element& a, double tol = 1e-9);

// b^-1 = sum lambda_i^-1 p_i over the support of b.
Element pseudo_inverse(const Element& b);

// q_{2^1}, ..., q_{2^n_max} where q_n = sum_{k=1}^{n} (1/n) [a > k/n].
std::vector<Element> dyadic_approximation(const Element& a, int n_max);

// a^(2^k) by repeated Jordan squaring.
Element iterated_square(const Element& a, int k);

}  // namespace seqeff

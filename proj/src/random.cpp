#include "seqeff/random.hpp"

#include <algorithm>

#include "seqeff/errors.hpp"
#include "seqeff/spectral.hpp"

namespace seqeff {

namespace {

// Maps the spectrum of x affinely onto [lo, hi].
Element rescale_spectrum(const Element& x, double lo, double hi) {
  const auto ev = eigenvalues(x);
  const double span = ev.back() - ev.front();
  const Element one = Element::identity(x.algebra());
  if (span < 1e-12) return 0.5 * (lo + hi) * one;
  return lo * one + ((hi - lo) / span) * (x - ev.front() * one);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Element random_element(const AlgebraDescriptor& alg, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd c(alg.real_dimension());
  for (Eigen::Index i = 0; i < c.size(); ++i) c[i] = normal(rng);
  return Element::from_coords(alg, c);
}

std::vector<Element> random_frame(const AlgebraDescriptor& alg, Rng& rng) {
  // Gaussian samples have simple spectrum almost surely; retry on the rare
  // near-degenerate draw.
  for (int attempt = 0; attempt < 16; ++attempt) {
    const auto sd = spectral_decompose(random_element(alg, rng), 1e-6);
    if (static_cast<int>(sd.size()) == alg.rank()) {
      std::vector<Element> frame;
      for (const auto& p : sd.pairs()) frame.push_back(p.idempotent);
      return frame;
    }
  }
  throw NumericalFailure("could not draw a random frame with simple spectrum", 0.0);
}

Element random_projection(const AlgebraDescriptor& alg, Rng& rng, int rank) {
  const auto frame = random_frame(alg, rng);
  const int r = alg.rank();
  if (rank < 0) {
    rank = r >= 2 ? std::uniform_int_distribution<int>(1, r - 1)(rng) : 0;
  }
  rank = std::clamp(rank, 0, r);
  Element p = Element::zero(alg);
  for (int i = 0; i < rank; ++i) p += frame[i];
  return p;
}

Element random_effect(const AlgebraDescriptor& alg, Rng& rng, EffectProfile profile) {
  switch (profile) {
    case EffectProfile::generic: {
      std::uniform_real_distribution<double> u(0.05, 0.95);
      double lo = u(rng);
      double hi = u(rng);
      if (lo > hi) std::swap(lo, hi);
      return rescale_spectrum(random_element(alg, rng), lo, hi);
    }
    case EffectProfile::invertible:
      return rescale_spectrum(random_element(alg, rng), 0.05, 0.95);
    case EffectProfile::singular: {
      const Element a = rescale_spectrum(random_element(alg, rng), 0.05, 0.95);
      const Element p = random_projection(alg, rng);
      return quadratic_rep(p, a);
    }
    case EffectProfile::sharp:
      return random_projection(alg, rng);
  }
  return Element::zero(alg);
}

Element random_effect(const AlgebraDescriptor& alg, std::uint64_t seed, EffectProfile profile) {
  Rng rng(seed);
  return random_effect(alg, rng, profile);
}

}  // namespace seqeff

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "seqeff/algebra.hpp"

namespace seqeff {

using Rng = std::mt19937_64;

// splitmix64 mix of (seed, index); used for per-trial and per-row seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

enum class EffectProfile { generic, invertible, singular, sharp };

// Coordinates iid standard normal (a Gaussian ensemble in the trace norm).
Element random_element(const AlgebraDescriptor& alg, Rng& rng);

// generic: spectrum affinely mapped into a random sub-interval of [0.05, 0.95];
// invertible: spectrum mapped onto [0.05, 0.95];
// singular: an invertible-profile sample compressed by a proper random projection;
// sharp: a random projection.
Element random_effect(const AlgebraDescriptor& alg, std::uint64_t seed, EffectProfile profile);
Element random_effect(const AlgebraDescriptor& alg, Rng& rng, EffectProfile profile);

// Orthogonal minimal idempotents summing to the identity (alg.rank() of them),
// taken from the eigenprojections of a Gaussian sample.
std::vector<Element> random_frame(const AlgebraDescriptor& alg, Rng& rng);

// Sum of `rank` members of a random frame. rank < 0 picks a proper rank at
// random (0 < rank < alg.rank() when alg.rank() >= 2).
Element random_projection(const AlgebraDescriptor& alg, Rng& rng, int rank = -1);

}  // namespace seqeff

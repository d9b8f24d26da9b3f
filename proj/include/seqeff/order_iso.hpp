#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seqeff/algebra.hpp"
#include "seqeff/linear_map.hpp"

namespace seqeff {

enum class IsoKind { unitary_conjugation, transpose, spin_rotation };

struct IsoSpec {
  IsoKind kind;
  std::uint64_t seed = 0;  // ignored by transpose
};

std::string to_string(IsoKind kind);
IsoKind iso_kind_from_string(const std::string& s);

// A unital order automorphism of one algebra, realized concretely:
//   unitary_conjugation  X -> U X U*, U = exp(K) for a random K in the
//                        (real / complex / quaternionic) anti-Hermitian class;
//   transpose            X -> X^T on complex Hermitian matrices;
//   spin_rotation        (v, t) -> (R v, t), R a random orthogonal matrix.
// On direct sums the kind acts on every summand that supports it and as the
// identity elsewhere.
class OrderIso {
 public:
  OrderIso(const AlgebraDescriptor& alg, IsoSpec spec);

  const AlgebraDescriptor& algebra() const { return alg_; }
  const IsoSpec& spec() const { return spec_; }
  Element apply(const Element& x) const;
  LinearMap linear_map(Execution exec = Execution::parallel) const;

 private:
  struct Block {
    bool active = false;
    Eigen::MatrixXcd unitary;   // matrix kinds
    Eigen::MatrixXd rotation;   // spin factors
  };
  Element apply_block(const Block& b, const Element& x) const;

  AlgebraDescriptor alg_;
  IsoSpec spec_;
  std::vector<Block> blocks_;  // one per summand (a single block for simple algebras)
};

// Throws CapabilityError for unsupported (kind, algebra) pairings.
LinearMap make_order_iso(const AlgebraDescriptor& alg, IsoSpec spec, Execution exec = Execution::parallel);

// U X U* as a LinearMap, for an arbitrary unitary U of matching size.
LinearMap conjugation_map(const AlgebraDescriptor& alg, const Eigen::MatrixXcd& u, std::string label,
                          Execution exec = Execution::parallel);

}  // namespace seqeff

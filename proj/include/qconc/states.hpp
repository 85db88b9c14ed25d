#pragma once
// State constructors: GHZ and W states, the GHZ/W mixture family rho(p), and
// seeded random pure / rank-2 states for property sweeps.

#include "qconc/matrix.hpp"

#include <cstdint>

namespace qconc::states {

using core::Complex;
using core::Matrix;
using core::Vector;

struct PureState {
  int n_qubits = 0;
  Vector amplitudes;  // length 2^n_qubits, unit norm

  void validate() const;  // throws std::invalid_argument on violations
};

// Density matrices coming out of a non-trace-preserving channel are allowed
// to carry trace < 1; the convention tag records which contract applies.
enum class TraceConvention { unit_trace, sub_normalized };

struct DensityMatrix {
  int n_qubits = 0;
  Matrix mat;
  TraceConvention trace_convention = TraceConvention::unit_trace;

  void validate() const;  // Hermiticity, positivity, trace per convention
};

PureState ghz(int n_qubits);
PureState w(int n_qubits);

// |psi><psi| as a unit-trace density matrix.
DensityMatrix density(const PureState& psi);

// Three-qubit mixture p |GHZ><GHZ| + (1-p) |W><W|, p in [0, 1].
DensityMatrix ghz_w_mixture(double p);

// Haar-random pure state: 2^n i.i.d. complex standard Gaussians, normalized.
// Deterministic for a fixed seed.
PureState random_pure(int n_qubits, std::uint64_t seed);

// q |psi1><psi1| + (1-q) |psi2><psi2| with q uniform on (0,1) and psi1, psi2
// Haar-random; generically rank 2.
DensityMatrix random_rank2(int n_qubits, std::uint64_t seed);

}  // namespace qconc::states

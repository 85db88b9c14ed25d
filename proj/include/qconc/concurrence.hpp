#pragma once
// Entanglement quantities: N-qubit pure-state concurrence, SO(d) generator
// sets per bipartite cut, the C_k terms and lower bound tau_N, the Wootters
// two-qubit concurrence, 3-tangle classification, and a stochastic
// convex-roof estimator.

#include "qconc/states.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qconc::measures {

using core::Matrix;
using states::DensityMatrix;
using states::PureState;

// A bipartite cut singles out one qubit against the remaining N-1.
struct BipartitionCut {
  int separated_qubit = 0;  // 1-based
};

struct GeneratorSet {
  BipartitionCut cut;
  int n_qubits = 0;
  std::vector<Matrix> operators;  // K = 2^{N-2}(2^{N-1}-1), each 2^N x 2^N
};

struct ConcurrenceTerms {
  BipartitionCut cut;
  std::vector<double> c_k;                          // max{0, l1-l2-l3-l4} per generator
  std::vector<std::array<double, 4>> lambda_lists;  // descending per generator
  double fifth_max = 0.0;  // largest fifth eigenvalue of sqrt(rho) rho~ sqrt(rho) seen
};

enum class ClassTag { GHZ_class, W_class, unentangled };

struct EntanglementClass {
  ClassTag tag = ClassTag::unentangled;
  double three_tangle = 0.0;
};

// Tangle / concurrence magnitudes below this count as zero for class tests.
inline constexpr double kClassThreshold = 1e-8;
// Eigenvalues this far (relatively) below the top one count as exact zeros:
// rank-deficient products carry O(1e-16) solver noise whose square root would
// otherwise contaminate the lambda subtraction at the 1e-8 level.
inline constexpr double kEigRelClamp = 1e-14;
// Fifth-eigenvalue diagnostic threshold, relative to trace^2.
inline constexpr double kFifthEigWarn = 1e-8;

std::size_t generator_count(int n_qubits);  // 2^{N-2}(2^{N-1}-1)

// C_N = sqrt(1 - (1/N) sum_i Tr rho_i^2) over the N single-qubit reductions.
double pure_concurrence(const PureState& psi);

// The d(d-1)/2 SO(d) generators -i(|m><n| - |n><m|), pairs (m,n) with m < n
// in lexicographic order.
std::vector<Matrix> so_generators(int d);

// S_k = L_k (on the N-1 qubit block) tensor sigma_y (on the separated qubit),
// arranged for the cut via qubit permutation. Memoized per (N, cut); the
// returned reference stays valid for the process lifetime.
const GeneratorSet& generator_set(int n_qubits, BipartitionCut cut);

// Per-generator lambda spectra and C_k values for one cut, via the Hermitian
// form sqrt(rho) S_k rho* S_k sqrt(rho).
ConcurrenceTerms c_k_terms(const DensityMatrix& rho, BipartitionCut cut);

// sqrt(sum_k C_k^2) for one cut — the bipartite concurrence across it.
double cut_concurrence(const DensityMatrix& rho, BipartitionCut cut);

// tau_N = sqrt((1/N) sum over cuts of sum_k C_k^2).
double tau_lower_bound(const DensityMatrix& rho);

// Two-qubit concurrence from the spin-flip spectrum of rho (sy x sy) rho*
// (sy x sy). Builds sigma_y x sigma_y directly, independent of the
// generator-set machinery used by c_k_terms.
double wootters_concurrence(const DensityMatrix& rho);

// Coffman-Kundu-Wootters 3-tangle of a three-qubit pure state.
double three_tangle(const PureState& psi);

// GHZ_class if the tangle clears the threshold, else W_class if entangled,
// else unentangled. Biseparable-but-entangled states land in W_class.
EntanglementClass classify(const PureState& psi);

// Upper-bound estimate of the convex-roof concurrence: decompositions are
// generated from the eigendecomposition by random m x r isometries (m = 2r)
// with local refinement; best value over `restarts` seeded restarts.
// Monotonically nonincreasing in restarts for a fixed seed.
double convex_roof_estimate(const DensityMatrix& rho, int restarts = 64, std::uint64_t seed = 0);

}  // namespace qconc::measures

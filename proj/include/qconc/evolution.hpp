#pragma once
// Both sides of the entanglement evolution laws: the pure-state factorization,
// the mixed-state inequality, the two-sided-channel bound, cut independence,
// and sudden-death detection.

#include "qconc/channels.hpp"
#include "qconc/concurrence.hpp"

#include <optional>
#include <string>
#include <utility>

namespace qconc::evolution {

using channels::KrausChannel;
using measures::ClassTag;
using states::DensityMatrix;
using states::PureState;

enum class MaxEntClass { GHZ, W };

struct ChannelFactor {
  double value = 1.0;      // tau(evolved phi)/tau(phi); exactly 1 at the identity
  double raw_value = 0.0;  // the un-normalized numerator tau(evolved phi)
  MaxEntClass maximally_entangled_class = MaxEntClass::GHZ;
  std::string channel_label;
  double t = 0.0;
};

struct EvolutionReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;  // rhs - lhs
  ClassTag class_used = ClassTag::unentangled;
  std::string channel_label;
  double t = 0.0;
  std::optional<double> p;
  // Mixed-state checks evaluate both class factors; both candidates are kept.
  std::optional<double> rhs_ghz;
  std::optional<double> rhs_w;
};

// tau of the channel-acted maximally entangled state of the class, divided by
// tau of the state itself. With renormalize=false a sub-normalized operator
// set leaves its trace factor in raw_value and value alike.
ChannelFactor channel_factor(const KrausChannel& ch, MaxEntClass cls, int n_qubits,
                             bool renormalize = true);

// lhs = tau(channel acting on |psi><psi|), rhs = class factor x tau(psi).
// Three-qubit states are classified automatically; larger registers need
// class_override (classification beyond three qubits is not provided).
EvolutionReport verify_pure_evolution(const PureState& psi, const KrausChannel& ch, int qubit,
                                      std::optional<MaxEntClass> class_override = std::nullopt,
                                      bool renormalize = true);

// Bipartite quantity sqrt(sum_k C_k^2) across each of the three cuts, with the
// channel on the separated qubit; returns the maximum pairwise difference.
double cut_independence_check(const PureState& psi, const KrausChannel& ch);

// Mixed-state inequality: rhs defaults to the larger of the GHZ- and W-factor
// candidates (an upper bound whenever either is); class_override forces one.
EvolutionReport verify_mixed_bound(const DensityMatrix& rho0, const KrausChannel& ch, int qubit,
                                   std::optional<MaxEntClass> class_override = std::nullopt,
                                   bool renormalize = true);

// Two channels on two distinct qubits against the product of their factors.
EvolutionReport verify_two_sided(const DensityMatrix& rho0, const KrausChannel& ch1,
                                 const KrausChannel& ch2, std::pair<int, int> qubits);

// Last crossing of tau below tol: smallest t* such that every sampled t >= t*
// has tau <= tol. Grid scan (256 intervals) plus bisection to 1e-4 in
// gamma*t; nullopt if tau is still above tol at t_max. The channel argument
// fixes the family (label, gamma, mode); its own t is ignored.
std::optional<double> sudden_death_time(const DensityMatrix& rho0, const KrausChannel& ch,
                                        int qubit, double t_max, double tol);

}  // namespace qconc::evolution

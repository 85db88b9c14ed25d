#pragma once
// Single-qubit Kraus channels — phase damping, amplitude damping, generalized
// amplitude damping — and their application to one qubit of a register.

#include "qconc/states.hpp"

#include <string>
#include <vector>

namespace qconc::channels {

using core::Matrix;

enum class ChannelLabel {
  phase_damping,
  amplitude_damping,
  generalized_amplitude_damping,
  custom,
};

// Whether the operator set resolves the identity or only half of it (the
// generalized-amplitude-damping set with 1/2 prefactors sums to I/2).
enum class Completeness { trace_preserving, sub_normalized };

// paper_literal keeps the published 1/2 prefactors (sub-normalized outputs);
// trace_preserving rescales them to 1/sqrt(2) so the channel is a CPTP map.
enum class GadMode { paper_literal, trace_preserving };

struct ChannelParams {
  double gamma = 1.0;
  double t = 0.0;

  double gt() const { return gamma * t; }
};

struct KrausChannel {
  ChannelLabel label = ChannelLabel::custom;
  std::vector<Matrix> operators;  // 2x2 each
  Completeness completeness = Completeness::trace_preserving;
  ChannelParams params;

  std::string name() const;  // "pd" | "ad" | "gad" | "custom"
  void validate() const;     // operator shapes + completeness contract
};

KrausChannel phase_damping(ChannelParams p);
KrausChannel amplitude_damping(ChannelParams p);
KrausChannel generalized_amplitude_damping(ChannelParams p, GadMode mode);

// Spectral norm of sum_i K_i^dag K_i - I.
double completeness_defect(const KrausChannel& ch);

// Applies ch to `qubit` (1-based) of rho. With renormalize the output is
// rescaled to unit trace; otherwise a sub-normalized operator set yields a
// sub-normalized output and the trace convention tag says so.
states::DensityMatrix apply(const KrausChannel& ch, const states::DensityMatrix& rho, int qubit,
                            bool renormalize = true);

}  // namespace qconc::channels

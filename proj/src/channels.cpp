#include "qconc/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace qconc::channels {

namespace {

void check_params(const ChannelParams& p, const char* who) {
  if (!(p.gamma >= 0.0) || !(p.t >= 0.0) || !std::isfinite(p.gamma) || !std::isfinite(p.t))
    throw std::invalid_argument(std::string(who) + ": gamma and t must be finite and >= 0");
}

Matrix completeness_sum(const KrausChannel& ch) {
  Matrix d = Matrix::Zero(2, 2);
  for (const auto& k : ch.operators) d += k.adjoint() * k;
  return d;
}

}  // namespace

std::string KrausChannel::name() const {
  switch (label) {
    case ChannelLabel::phase_damping: return "pd";
    case ChannelLabel::amplitude_damping: return "ad";
    case ChannelLabel::generalized_amplitude_damping: return "gad";
    case ChannelLabel::custom: return "custom";
  }
  return "custom";
}

void KrausChannel::validate() const {
  if (operators.empty()) throw std::invalid_argument("KrausChannel: no operators");
  for (const auto& k : operators)
    if (k.rows() != 2 || k.cols() != 2)
      throw std::invalid_argument("KrausChannel: operators must be 2x2");
  Matrix d = completeness_sum(*this);
  if (completeness == Completeness::trace_preserving) {
    if ((d - Matrix::Identity(2, 2)).norm() > 1e-10)
      throw std::invalid_argument("KrausChannel: operator set is not trace preserving");
  } else {
    // sub-normalized sets must still be contractions: sum K^dag K <= I
    const auto ev = core::eig_hermitian(d);
    if (ev.front() > 1.0 + 1e-10)
      throw std::invalid_argument("KrausChannel: operator sum exceeds the identity");
  }
}

KrausChannel phase_damping(ChannelParams p) {
  check_params(p, "phase_damping");
  const double e = std::exp(-p.gt());
  Matrix k1 = Matrix::Zero(2, 2);
  k1(0, 0) = e;
  k1(1, 1) = 1.0;
  Matrix k2 = Matrix::Zero(2, 2);
  k2(0, 0) = std::sqrt(std::max(0.0, 1.0 - e * e));
  KrausChannel ch{ChannelLabel::phase_damping, {k1, k2}, Completeness::trace_preserving, p};
  ch.validate();
  return ch;
}

KrausChannel amplitude_damping(ChannelParams p) {
  check_params(p, "amplitude_damping");
  const double e = std::exp(-p.gt());
  Matrix k1 = Matrix::Zero(2, 2);
  k1(0, 0) = 1.0;
  k1(1, 1) = e;
  Matrix k2 = Matrix::Zero(2, 2);
  k2(0, 1) = std::sqrt(std::max(0.0, 1.0 - e * e));
  KrausChannel ch{ChannelLabel::amplitude_damping, {k1, k2}, Completeness::trace_preserving, p};
  ch.validate();
  return ch;
}

KrausChannel generalized_amplitude_damping(ChannelParams p, GadMode mode) {
  check_params(p, "generalized_amplitude_damping");
  const double e = std::exp(-p.gt());
  const double s = std::sqrt(std::max(0.0, 1.0 - e * e));
  // Equal up/down rates: the decay pair plus its mirror image. With the 1/2
  // prefactors the four operators sum to I/2; 1/sqrt(2) restores a CPTP map.
  const double pref = mode == GadMode::paper_literal ? 0.5 : 1.0 / std::sqrt(2.0);
  Matrix k1 = Matrix::Zero(2, 2);
  k1(0, 0) = pref;
  k1(1, 1) = pref * e;
  Matrix k2 = Matrix::Zero(2, 2);
  k2(0, 1) = pref * s;
  Matrix k3 = Matrix::Zero(2, 2);
  k3(0, 0) = pref * e;
  k3(1, 1) = pref;
  Matrix k4 = Matrix::Zero(2, 2);
  k4(1, 0) = pref * s;
  KrausChannel ch{ChannelLabel::generalized_amplitude_damping,
                  {k1, k2, k3, k4},
                  mode == GadMode::paper_literal ? Completeness::sub_normalized
                                                 : Completeness::trace_preserving,
                  p};
  ch.validate();
  return ch;
}

double completeness_defect(const KrausChannel& ch) {
  const Matrix d = completeness_sum(ch) - Matrix::Identity(2, 2);
  const auto ev = core::eig_hermitian(d);
  double m = 0.0;
  for (double v : ev) m = std::max(m, std::abs(v));
  return m;
}

states::DensityMatrix apply(const KrausChannel& ch, const states::DensityMatrix& rho, int qubit,
                            bool renormalize) {
  ch.validate();
  rho.validate();
  if (qubit < 1 || qubit > rho.n_qubits)
    throw std::invalid_argument("apply: qubit index out of range");

  const Eigen::Index dl = Eigen::Index{1} << (qubit - 1);
  const Eigen::Index dr = Eigen::Index{1} << (rho.n_qubits - qubit);
  const Matrix il = Matrix::Identity(dl, dl);
  const Matrix ir = Matrix::Identity(dr, dr);

  Matrix out = Matrix::Zero(rho.mat.rows(), rho.mat.cols());
  for (const auto& k : ch.operators) {
    const Matrix full = core::kron(core::kron(il, k), ir);
    out += full * rho.mat * full.adjoint();
  }

  states::DensityMatrix result{rho.n_qubits, std::move(out), rho.trace_convention};
  if (renormalize) {
    const double tr = result.mat.trace().real();
    if (tr <= 0.0) throw std::runtime_error("apply: output trace vanished, cannot renormalize");
    result.mat /= tr;
    result.trace_convention = states::TraceConvention::unit_trace;
  } else if (ch.completeness == Completeness::sub_normalized) {
    result.trace_convention = states::TraceConvention::sub_normalized;
  }
  result.validate();
  return result;
}

}  // namespace qconc::channels

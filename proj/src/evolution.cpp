#include "qconc/evolution.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qconc::evolution {

namespace {

PureState max_ent_state(MaxEntClass cls, int n_qubits) {
  return cls == MaxEntClass::GHZ ? states::ghz(n_qubits) : states::w(n_qubits);
}

ClassTag tag_of(MaxEntClass cls) {
  return cls == MaxEntClass::GHZ ? ClassTag::GHZ_class : ClassTag::W_class;
}

// Rebuild the channel's family member at a different time.
KrausChannel channel_at(const KrausChannel& ch, double t) {
  const channels::ChannelParams p{ch.params.gamma, t};
  switch (ch.label) {
    case channels::ChannelLabel::phase_damping:
      return channels::phase_damping(p);
    case channels::ChannelLabel::amplitude_damping:
      return channels::amplitude_damping(p);
    case channels::ChannelLabel::generalized_amplitude_damping:
      return channels::generalized_amplitude_damping(
          p, ch.completeness == channels::Completeness::sub_normalized
                 ? channels::GadMode::paper_literal
                 : channels::GadMode::trace_preserving);
    case channels::ChannelLabel::custom:
      break;
  }
  throw std::invalid_argument("sudden_death_time: needs a parametrized built-in channel");
}

}  // namespace

ChannelFactor channel_factor(const KrausChannel& ch, MaxEntClass cls, int n_qubits,
                             bool renormalize) {
  const DensityMatrix phi = states::density(max_ent_state(cls, n_qubits));
  const double tau0 = measures::tau_lower_bound(phi);
  const DensityMatrix evolved = channels::apply(ch, phi, n_qubits, renormalize);
  const double raw = measures::tau_lower_bound(evolved);
  return ChannelFactor{raw / tau0, raw, cls, ch.name(), ch.params.t};
}

EvolutionReport verify_pure_evolution(const PureState& psi, const KrausChannel& ch, int qubit,
                                      std::optional<MaxEntClass> class_override,
                                      bool renormalize) {
  psi.validate();
  MaxEntClass cls = MaxEntClass::GHZ;
  ClassTag tag = ClassTag::GHZ_class;
  if (class_override) {
    cls = *class_override;
    tag = tag_of(cls);
  } else if (psi.n_qubits == 3) {
    const auto ec = measures::classify(psi);
    tag = ec.tag;
    cls = ec.tag == ClassTag::GHZ_class ? MaxEntClass::GHZ : MaxEntClass::W;
  } else if (psi.n_qubits == 2) {
    cls = MaxEntClass::GHZ;  // two-qubit maximally entangled state = Bell pair
    tag = measures::pure_concurrence(psi) > measures::kClassThreshold ? ClassTag::GHZ_class
                                                                      : ClassTag::unentangled;
  } else {
    throw std::invalid_argument(
        "verify_pure_evolution: states beyond three qubits need an explicit class");
  }

  const DensityMatrix rho0 = states::density(psi);
  const double tau0 = measures::tau_lower_bound(rho0);
  const double lhs = measures::tau_lower_bound(channels::apply(ch, rho0, qubit, renormalize));
  const double rhs = channel_factor(ch, cls, psi.n_qubits, renormalize).value * tau0;
  EvolutionReport rep;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.gap = rhs - lhs;
  rep.class_used = tag;
  rep.channel_label = ch.name();
  rep.t = ch.params.t;
  return rep;
}

double cut_independence_check(const PureState& psi, const KrausChannel& ch) {
  psi.validate();
  if (psi.n_qubits != 3)
    throw std::invalid_argument("cut_independence_check: three-qubit states only");
  const DensityMatrix rho0 = states::density(psi);
  std::vector<double> vals;
  for (int sep = 1; sep <= 3; ++sep) {
    const DensityMatrix evolved = channels::apply(ch, rho0, sep, true);
    vals.push_back(measures::cut_concurrence(evolved, measures::BipartitionCut{sep}));
  }
  double dev = 0.0;
  for (std::size_t i = 0; i < vals.size(); ++i)
    for (std::size_t j = i + 1; j < vals.size(); ++j)
      dev = std::max(dev, std::abs(vals[i] - vals[j]));
  return dev;
}

EvolutionReport verify_mixed_bound(const DensityMatrix& rho0, const KrausChannel& ch, int qubit,
                                   std::optional<MaxEntClass> class_override, bool renormalize) {
  rho0.validate();
  if (rho0.n_qubits != 3)
    throw std::invalid_argument("verify_mixed_bound: three-qubit states only");
  const double tau0 = measures::tau_lower_bound(rho0);
  const double lhs = measures::tau_lower_bound(channels::apply(ch, rho0, qubit, renormalize));
  const double rhs_ghz = channel_factor(ch, MaxEntClass::GHZ, 3, renormalize).value * tau0;
  const double rhs_w = channel_factor(ch, MaxEntClass::W, 3, renormalize).value * tau0;

  MaxEntClass cls;
  if (class_override)
    cls = *class_override;
  else
    cls = rhs_ghz >= rhs_w ? MaxEntClass::GHZ : MaxEntClass::W;

  EvolutionReport rep;
  rep.lhs = lhs;
  rep.rhs = cls == MaxEntClass::GHZ ? rhs_ghz : rhs_w;
  rep.gap = rep.rhs - lhs;
  rep.class_used = tag_of(cls);
  rep.channel_label = ch.name();
  rep.t = ch.params.t;
  rep.rhs_ghz = rhs_ghz;
  rep.rhs_w = rhs_w;
  return rep;
}

EvolutionReport verify_two_sided(const DensityMatrix& rho0, const KrausChannel& ch1,
                                 const KrausChannel& ch2, std::pair<int, int> qubits) {
  rho0.validate();
  if (rho0.n_qubits != 3)
    throw std::invalid_argument("verify_two_sided: three-qubit states only");
  if (qubits.first == qubits.second)
    throw std::invalid_argument("verify_two_sided: qubit indices must be distinct");
  const double tau0 = measures::tau_lower_bound(rho0);
  const DensityMatrix mid = channels::apply(ch1, rho0, qubits.first, true);
  const double lhs = measures::tau_lower_bound(channels::apply(ch2, mid, qubits.second, true));

  const double rhs_ghz = channel_factor(ch1, MaxEntClass::GHZ, 3).value *
                         channel_factor(ch2, MaxEntClass::GHZ, 3).value * tau0;
  const double rhs_w = channel_factor(ch1, MaxEntClass::W, 3).value *
                       channel_factor(ch2, MaxEntClass::W, 3).value * tau0;
  const MaxEntClass cls = rhs_ghz >= rhs_w ? MaxEntClass::GHZ : MaxEntClass::W;

  EvolutionReport rep;
  rep.lhs = lhs;
  rep.rhs = cls == MaxEntClass::GHZ ? rhs_ghz : rhs_w;
  rep.gap = rep.rhs - lhs;
  rep.class_used = tag_of(cls);
  rep.channel_label = ch1.name() + "+" + ch2.name();
  rep.t = ch1.params.t;
  rep.rhs_ghz = rhs_ghz;
  rep.rhs_w = rhs_w;
  return rep;
}

std::optional<double> sudden_death_time(const DensityMatrix& rho0, const KrausChannel& ch,
                                        int qubit, double t_max, double tol) {
  rho0.validate();
  if (!(t_max > 0.0)) throw std::invalid_argument("sudden_death_time: t_max must be positive");
  if (!(tol > 0.0)) throw std::invalid_argument("sudden_death_time: tol must be positive");

  const auto tau_at = [&](double t) {
    return measures::tau_lower_bound(channels::apply(channel_at(ch, t), rho0, qubit, true));
  };

  constexpr int kGridIntervals = 256;
  std::vector<double> taus(kGridIntervals + 1);
  for (int i = 0; i <= kGridIntervals; ++i)
    taus[static_cast<std::size_t>(i)] = tau_at(t_max * i / kGridIntervals);

  if (taus[0] <= tol) return 0.0;  // already dead at the first sample
  if (taus.back() > tol) return std::nullopt;

  int last_above = 0;
  for (int i = kGridIntervals; i >= 0; --i) {
    if (taus[static_cast<std::size_t>(i)] > tol) {
      last_above = i;
      break;
    }
  }
  double lo = t_max * last_above / kGridIntervals;
  double hi = t_max * (last_above + 1) / kGridIntervals;
  const double gamma = std::max(ch.params.gamma, 1e-300);
  while ((hi - lo) * gamma > 1e-4) {
    const double mid = 0.5 * (lo + hi);
    (tau_at(mid) > tol ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace qconc::evolution

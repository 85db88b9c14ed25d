#pragma once
// JSON (de)serialization for states and channel specs, shared by the CLI and
// the test fixtures.
//
// Pure state:     {"n_qubits": N, "kind": "pure", "amplitudes": [[re,im], ...]}
// Density matrix: {"n_qubits": N, "kind": "density", "rho": [[[re,im], ...], ...]}
// Channel spec:   {"channel": "pd"|"ad"|"gad", "gamma": g, "mode": "literal"|"tp"}

#include "qconc/channels.hpp"

#include <string>
#include <variant>

namespace qconc::io {

using StateVariant = std::variant<states::PureState, states::DensityMatrix>;

StateVariant load_state(const std::string& path);
StateVariant parse_state(const std::string& json_text);

void save_state(const states::PureState& psi, const std::string& path);
void save_state(const states::DensityMatrix& rho, const std::string& path);

// A time-free channel description; build() instantiates it at a given t.
struct ChannelSpec {
  channels::ChannelLabel label = channels::ChannelLabel::phase_damping;
  double gamma = 1.0;
  channels::GadMode mode = channels::GadMode::trace_preserving;

  channels::KrausChannel build(double t) const;
};

ChannelSpec parse_channel_spec(const std::string& json_text);
std::string channel_spec_json(const ChannelSpec& spec);

}  // namespace qconc::io

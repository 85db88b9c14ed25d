#include "qconc/state_io.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>

namespace qconc::io {

using nlohmann::json;

namespace {

core::Complex read_complex(const json& j, const char* where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument(std::string(where) + ": complex entries must be [re, im] pairs");
  return core::Complex{j[0].get<double>(), j[1].get<double>()};
}

json write_complex(const core::Complex& z) { return json::array({z.real(), z.imag()}); }

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open state file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write state file: " + path);
  out << j.dump(2) << "\n";
}

StateVariant from_json(const json& j) {
  if (!j.is_object() || !j.contains("n_qubits") || !j.contains("kind"))
    throw std::invalid_argument("state JSON needs n_qubits and kind fields");
  const int n = j.at("n_qubits").get<int>();
  const std::string kind = j.at("kind").get<std::string>();
  if (n < 1 || n > core::max_qubits())
    throw std::invalid_argument("state JSON: n_qubits outside [1, " +
                                std::to_string(core::max_qubits()) + "]");
  const Eigen::Index dim = Eigen::Index{1} << n;

  if (kind == "pure") {
    const auto& amps = j.at("amplitudes");
    if (!amps.is_array() || static_cast<Eigen::Index>(amps.size()) != dim)
      throw std::invalid_argument("state JSON: amplitudes must hold 2^n_qubits entries");
    states::PureState psi{n, core::Vector(dim)};
    for (Eigen::Index i = 0; i < dim; ++i)
      psi.amplitudes(i) = read_complex(amps[static_cast<std::size_t>(i)], "amplitudes");
    psi.validate();
    return psi;
  }
  if (kind == "density") {
    const auto& rows = j.at("rho");
    if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != dim)
      throw std::invalid_argument("state JSON: rho must hold 2^n_qubits rows");
    states::DensityMatrix rho{n, core::Matrix(dim, dim), states::TraceConvention::unit_trace};
    for (Eigen::Index i = 0; i < dim; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim)
        throw std::invalid_argument("state JSON: rho rows must hold 2^n_qubits entries");
      for (Eigen::Index k = 0; k < dim; ++k)
        rho.mat(i, k) = read_complex(row[static_cast<std::size_t>(k)], "rho");
    }
    rho.validate();
    return rho;
  }
  throw std::invalid_argument("state JSON: kind must be \"pure\" or \"density\"");
}

}  // namespace

StateVariant load_state(const std::string& path) { return from_json(read_file(path)); }

StateVariant parse_state(const std::string& json_text) {
  try {
    return from_json(json::parse(json_text));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed state JSON: ") + e.what());
  }
}

void save_state(const states::PureState& psi, const std::string& path) {
  psi.validate();
  json amps = json::array();
  for (Eigen::Index i = 0; i < psi.amplitudes.size(); ++i)
    amps.push_back(write_complex(psi.amplitudes(i)));
  write_file(json{{"n_qubits", psi.n_qubits}, {"kind", "pure"}, {"amplitudes", amps}}, path);
}

void save_state(const states::DensityMatrix& rho, const std::string& path) {
  rho.validate();
  json rows = json::array();
  for (Eigen::Index i = 0; i < rho.mat.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < rho.mat.cols(); ++k) row.push_back(write_complex(rho.mat(i, k)));
    rows.push_back(row);
  }
  write_file(json{{"n_qubits", rho.n_qubits}, {"kind", "density"}, {"rho", rows}}, path);
}

channels::KrausChannel ChannelSpec::build(double t) const {
  const channels::ChannelParams p{gamma, t};
  switch (label) {
    case channels::ChannelLabel::phase_damping:
      return channels::phase_damping(p);
    case channels::ChannelLabel::amplitude_damping:
      return channels::amplitude_damping(p);
    case channels::ChannelLabel::generalized_amplitude_damping:
      return channels::generalized_amplitude_damping(p, mode);
    case channels::ChannelLabel::custom:
      break;
  }
  throw std::invalid_argument("ChannelSpec: custom channels cannot be built from a spec");
}

ChannelSpec parse_channel_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed channel JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("channel"))
    throw std::invalid_argument("channel JSON needs a channel field");
  ChannelSpec spec;
  const std::string name = j.at("channel").get<std::string>();
  if (name == "pd")
    spec.label = channels::ChannelLabel::phase_damping;
  else if (name == "ad")
    spec.label = channels::ChannelLabel::amplitude_damping;
  else if (name == "gad")
    spec.label = channels::ChannelLabel::generalized_amplitude_damping;
  else
    throw std::invalid_argument("channel JSON: channel must be pd, ad, or gad");
  if (j.contains("gamma")) spec.gamma = j.at("gamma").get<double>();
  if (!(spec.gamma >= 0.0))
    throw std::invalid_argument("channel JSON: gamma must be nonnegative");
  if (j.contains("mode")) {
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "literal")
      spec.mode = channels::GadMode::paper_literal;
    else if (mode == "tp")
      spec.mode = channels::GadMode::trace_preserving;
    else
      throw std::invalid_argument("channel JSON: mode must be literal or tp");
  }
  return spec;
}

std::string channel_spec_json(const ChannelSpec& spec) {
  json j;
  switch (spec.label) {
    case channels::ChannelLabel::phase_damping:
      j["channel"] = "pd";
      break;
    case channels::ChannelLabel::amplitude_damping:
      j["channel"] = "ad";
      break;
    case channels::ChannelLabel::generalized_amplitude_damping:
      j["channel"] = "gad";
      break;
    case channels::ChannelLabel::custom:
      throw std::invalid_argument("channel_spec_json: custom channels have no spec form");
  }
  j["gamma"] = spec.gamma;
  j["mode"] = spec.mode == channels::GadMode::paper_literal ? "literal" : "tp";
  return j.dump();
}

}  // namespace qconc::io

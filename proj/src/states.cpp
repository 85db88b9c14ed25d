#include "qconc/states.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace qconc::states {

namespace {

void check_n(int n_qubits, const char* who) {
  if (n_qubits < 1 || n_qubits > core::max_qubits())
    throw std::invalid_argument(std::string(who) + ": n_qubits out of range [1, " +
                                std::to_string(core::max_qubits()) + "]");
}

Vector gaussian_vector(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v(i) = Complex{re, im};
  }
  return v;
}

}  // namespace

void PureState::validate() const {
  check_n(n_qubits, "PureState");
  if (amplitudes.size() != (Eigen::Index{1} << n_qubits))
    throw std::invalid_argument("PureState: amplitude count does not match n_qubits");
  if (std::abs(amplitudes.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("PureState: amplitudes are not unit norm");
}

void DensityMatrix::validate() const {
  check_n(n_qubits, "DensityMatrix");
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (mat.rows() != dim || mat.cols() != dim)
    throw std::invalid_argument("DensityMatrix: dimension does not match n_qubits");
  if (!core::is_hermitian(mat))
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian within tolerance");
  const double tr = mat.trace().real();
  if (trace_convention == TraceConvention::unit_trace) {
    if (std::abs(tr - 1.0) > 1e-10)
      throw std::invalid_argument("DensityMatrix: trace differs from 1 beyond tolerance");
  } else {
    if (tr <= 0.0 || tr > 1.0 + 1e-10)
      throw std::invalid_argument("DensityMatrix: sub-normalized trace outside (0, 1]");
  }
  const auto ev = core::eig_hermitian(mat);
  if (ev.back() < -core::kPsdRelTol * tr)
    throw std::invalid_argument("DensityMatrix: matrix is not positive semidefinite");
}

PureState ghz(int n_qubits) {
  check_n(n_qubits, "ghz");
  if (n_qubits < 2) throw std::invalid_argument("ghz: need at least 2 qubits");
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Vector amp = Vector::Zero(dim);
  amp(0) = amp(dim - 1) = 1.0 / std::sqrt(2.0);
  return PureState{n_qubits, std::move(amp)};
}

PureState w(int n_qubits) {
  check_n(n_qubits, "w");
  if (n_qubits < 2) throw std::invalid_argument("w: need at least 2 qubits");
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Vector amp = Vector::Zero(dim);
  const double a = 1.0 / std::sqrt(static_cast<double>(n_qubits));
  for (int q = 1; q <= n_qubits; ++q) amp(Eigen::Index{1} << (n_qubits - q)) = a;
  return PureState{n_qubits, std::move(amp)};
}

DensityMatrix density(const PureState& psi) {
  psi.validate();
  return DensityMatrix{psi.n_qubits, psi.amplitudes * psi.amplitudes.adjoint(),
                       TraceConvention::unit_trace};
}

DensityMatrix ghz_w_mixture(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("ghz_w_mixture: p must lie in [0, 1]");
  const auto g = density(ghz(3));
  const auto m = density(w(3));
  return DensityMatrix{3, p * g.mat + (1.0 - p) * m.mat, TraceConvention::unit_trace};
}

PureState random_pure(int n_qubits, std::uint64_t seed) {
  check_n(n_qubits, "random_pure");
  std::mt19937_64 rng(seed);
  Vector amp = gaussian_vector(Eigen::Index{1} << n_qubits, rng);
  amp /= amp.norm();
  return PureState{n_qubits, std::move(amp)};
}

DensityMatrix random_rank2(int n_qubits, std::uint64_t seed) {
  check_n(n_qubits, "random_rank2");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const double q = uni(rng);
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Vector a = gaussian_vector(dim, rng);
  Vector b = gaussian_vector(dim, rng);
  a /= a.norm();
  b /= b.norm();
  return DensityMatrix{n_qubits, q * (a * a.adjoint()) + (1.0 - q) * (b * b.adjoint()),
                       TraceConvention::unit_trace};
}

}  // namespace qconc::states

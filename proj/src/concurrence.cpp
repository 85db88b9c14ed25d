#include "qconc/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>
#include <mutex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

namespace qconc::measures {

using core::Complex;
using core::Vector;

namespace {

// Sum over single-qubit reductions of Tr rho_q^2, straight from amplitudes.
double purity_sum(const Vector& amps, int n_qubits) {
  const Eigen::Index dim = amps.size();
  double total = 0.0;
  for (int q = 1; q <= n_qubits; ++q) {
    const Eigen::Index mask = Eigen::Index{1} << (n_qubits - q);
    double r00 = 0.0, r11 = 0.0;
    Complex r01{0.0, 0.0};
    for (Eigen::Index i = 0; i < dim; ++i) {
      if ((i & mask) != 0) continue;
      const Complex a = amps(i);
      const Complex b = amps(i | mask);
      r00 += std::norm(a);
      r11 += std::norm(b);
      r01 += a * std::conj(b);
    }
    total += r00 * r00 + r11 * r11 + 2.0 * std::norm(r01);
  }
  return total;
}

double pure_c_from_amps(const Vector& amps, int n_qubits) {
  return std::sqrt(std::max(0.0, 1.0 - purity_sum(amps, n_qubits) / n_qubits));
}

Matrix sigma_y() {
  Matrix sy = Matrix::Zero(2, 2);
  sy(0, 1) = Complex{0.0, -1.0};
  sy(1, 0) = Complex{0.0, 1.0};
  return sy;
}

}  // namespace

std::size_t generator_count(int n_qubits) {
  if (n_qubits < 2) throw std::invalid_argument("generator_count: need at least 2 qubits");
  return (std::size_t{1} << (n_qubits - 2)) * ((std::size_t{1} << (n_qubits - 1)) - 1);
}

double pure_concurrence(const PureState& psi) {
  psi.validate();
  if (psi.n_qubits < 2) throw std::invalid_argument("pure_concurrence: need at least 2 qubits");
  return pure_c_from_amps(psi.amplitudes, psi.n_qubits);
}

std::vector<Matrix> so_generators(int d) {
  if (d < 2) throw std::invalid_argument("so_generators: dimension must be at least 2");
  if (d > core::max_dim()) throw std::invalid_argument("so_generators: dimension exceeds register cap");
  std::vector<Matrix> gens;
  gens.reserve(static_cast<std::size_t>(d) * (d - 1) / 2);
  for (int m = 0; m < d; ++m) {
    for (int n = m + 1; n < d; ++n) {
      Matrix l = Matrix::Zero(d, d);
      l(m, n) = Complex{0.0, -1.0};
      l(n, m) = Complex{0.0, 1.0};
      gens.push_back(std::move(l));
    }
  }
  return gens;
}

const GeneratorSet& generator_set(int n_qubits, BipartitionCut cut) {
  if (n_qubits < 2 || n_qubits > core::max_qubits())
    throw std::invalid_argument("generator_set: n_qubits out of range");
  if (cut.separated_qubit < 1 || cut.separated_qubit > n_qubits)
    throw std::invalid_argument("generator_set: cut index out of range");

  static std::mutex memo_mutex;
  static std::map<std::pair<int, int>, GeneratorSet> memo;  // node-stable addresses
  std::lock_guard<std::mutex> lock(memo_mutex);
  const auto key = std::make_pair(n_qubits, cut.separated_qubit);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // Build in a fixed layout — block qubits in slots 1..N-1, separated qubit
  // in slot N — then relabel slot j to the real qubit it stands for.
  const int sep = cut.separated_qubit;
  std::vector<int> perm;
  for (int q = 1; q <= n_qubits; ++q)
    if (q != sep) perm.push_back(q);
  perm.push_back(sep);

  const Matrix sy = sigma_y();
  std::vector<Matrix> ops;
  for (const Matrix& l : so_generators(1 << (n_qubits - 1)))
    ops.push_back(core::permute_qubits(core::kron(l, sy), n_qubits, perm));

  auto [it, inserted] = memo.emplace(key, GeneratorSet{cut, n_qubits, std::move(ops)});
  return it->second;
}

ConcurrenceTerms c_k_terms(const DensityMatrix& rho, BipartitionCut cut) {
  rho.validate();
  if (rho.n_qubits < 2) throw std::invalid_argument("c_k_terms: need at least 2 qubits");
  const GeneratorSet& gens = generator_set(rho.n_qubits, cut);
  const Matrix sq = core::psd_sqrt(rho.mat);
  const Matrix conj = rho.mat.conjugate();
  const double trace = rho.mat.trace().real();

  ConcurrenceTerms out;
  out.cut = cut;
  out.c_k.reserve(gens.operators.size());
  out.lambda_lists.reserve(gens.operators.size());
  for (const Matrix& s : gens.operators) {
    // Hermitian carrier of the rho * rho~ spectrum; symmetrize away roundoff.
    Matrix h = sq * (s * conj * s) * sq;
    h = 0.5 * (h + h.adjoint()).eval();
    std::vector<double> ev = core::eig_hermitian(h);
    const double top = std::max(ev.front(), 0.0);
    std::array<double, 4> lambda{};
    for (int m = 0; m < 4; ++m) {
      double v = ev[static_cast<std::size_t>(m)];
      if (v < top * kEigRelClamp) v = 0.0;
      lambda[static_cast<std::size_t>(m)] = std::sqrt(v);
    }
    out.c_k.push_back(std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]));
    out.lambda_lists.push_back(lambda);
    if (ev.size() > 4) out.fifth_max = std::max(out.fifth_max, std::max(ev[4], 0.0));
  }
  if (out.fifth_max > kFifthEigWarn * trace * trace)
    std::cerr << "[qconc] warning: c_k_terms cut " << cut.separated_qubit
              << ": fifth eigenvalue " << out.fifth_max << " exceeds " << kFifthEigWarn
              << " * trace^2; more than four nonvanishing eigenvalues present\n";
  return out;
}

double cut_concurrence(const DensityMatrix& rho, BipartitionCut cut) {
  const ConcurrenceTerms terms = c_k_terms(rho, cut);
  double s = 0.0;
  for (double c : terms.c_k) s += c * c;
  return std::sqrt(s);
}

double tau_lower_bound(const DensityMatrix& rho) {
  if (rho.n_qubits < 2) throw std::invalid_argument("tau_lower_bound: need at least 2 qubits");
  double s = 0.0;
  for (int q = 1; q <= rho.n_qubits; ++q) {
    const ConcurrenceTerms terms = c_k_terms(rho, BipartitionCut{q});
    for (double c : terms.c_k) s += c * c;
  }
  return std::sqrt(s / rho.n_qubits);
}

double wootters_concurrence(const DensityMatrix& rho) {
  rho.validate();
  if (rho.n_qubits != 2)
    throw std::invalid_argument("wootters_concurrence: defined for two qubits only");
  // Spectrum of rho * rho~ through the Hermitian carrier sqrt(rho) rho~
  // sqrt(rho): the straight non-normal eigensolve loses ~sqrt(machine eps) on
  // the zero eigenvalues of rank-deficient products.
  const Matrix syy = core::kron(sigma_y(), sigma_y());
  const Matrix sq = core::psd_sqrt(rho.mat);
  Matrix h = sq * (syy * rho.mat.conjugate() * syy) * sq;
  h = 0.5 * (h + h.adjoint()).eval();
  const std::vector<double> ev = core::eig_hermitian(h);
  const double top = std::max(ev.front(), 0.0);
  std::array<double, 4> lambda{};
  for (int m = 0; m < 4; ++m) {
    double v = ev[static_cast<std::size_t>(m)];
    if (v < top * kEigRelClamp) v = 0.0;
    lambda[static_cast<std::size_t>(m)] = std::sqrt(v);
  }
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double three_tangle(const PureState& psi) {
  psi.validate();
  if (psi.n_qubits != 3) throw std::invalid_argument("three_tangle: three-qubit states only");
  const auto a = [&](int i, int j, int k) { return psi.amplitudes(4 * i + 2 * j + k); };
  const Complex d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) +
                     a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
                     a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) +
                     a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
  const Complex d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0) +
                     a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
                     a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) +
                     a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
                     a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) +
                     a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
  const Complex d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
                     a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
  const double tangle = 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
  return std::clamp(tangle, 0.0, 1.0);
}

EntanglementClass classify(const PureState& psi) {
  psi.validate();
  if (psi.n_qubits != 3) throw std::invalid_argument("classify: three-qubit states only");
  const double tangle = three_tangle(psi);
  if (tangle > kClassThreshold) return EntanglementClass{ClassTag::GHZ_class, tangle};
  if (pure_concurrence(psi) > kClassThreshold) return EntanglementClass{ClassTag::W_class, tangle};
  return EntanglementClass{ClassTag::unentangled, tangle};
}

double convex_roof_estimate(const DensityMatrix& rho, int restarts, std::uint64_t seed) {
  rho.validate();
  if (rho.n_qubits < 2) throw std::invalid_argument("convex_roof_estimate: need at least 2 qubits");
  if (restarts < 1) throw std::invalid_argument("convex_roof_estimate: restarts must be positive");

  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.mat);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("convex_roof_estimate: eigensolver did not converge");
  const double trace = rho.mat.trace().real();
  const Eigen::Index dim = rho.mat.rows();

  // Columns sqrt(lambda_j) v_j of the kept spectrum, largest first.
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = dim - 1; i >= 0; --i)
    if (es.eigenvalues()(i) > 1e-12 * trace) kept.push_back(i);
  const int r = static_cast<int>(kept.size());
  if (r > 8) throw std::invalid_argument("convex_roof_estimate: rank above cap (8)");
  if (r == 0) throw std::invalid_argument("convex_roof_estimate: state has no spectral weight");

  Matrix base(dim, r);
  for (int j = 0; j < r; ++j)
    base.col(j) = std::sqrt(es.eigenvalues()(kept[static_cast<std::size_t>(j)])) *
                  es.eigenvectors().col(kept[static_cast<std::size_t>(j)]);

  const int n = rho.n_qubits;
  if (r == 1) {
    Vector v = base.col(0);
    v /= v.norm();
    return pure_c_from_amps(v, n);
  }

  // One decomposition vector per isometry row; rows with negligible weight
  // contribute nothing.
  const auto row_term = [&](const Matrix& u, int i) -> double {
    Vector w = base * u.row(i).transpose();
    const double q = w.squaredNorm();
    if (q < 1e-14) return 0.0;
    w /= std::sqrt(q);
    return q * pure_c_from_amps(w, n);
  };

  const int m = 2 * r;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

  // The eigendecomposition itself is the zero-cost starting candidate.
  Matrix trivial = Matrix::Zero(m, r);
  for (int j = 0; j < r; ++j) trivial(j, j) = 1.0;
  double best = 0.0;
  for (int i = 0; i < m; ++i) best += row_term(trivial, i);

  constexpr int kRefineIters = 200;
  for (int restart = 0; restart < restarts; ++restart) {
    Matrix g(m, r);
    for (Eigen::Index i = 0; i < g.rows(); ++i)
      for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = Complex{gauss(rng), gauss(rng)};
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix u = qr.householderQ() * Matrix::Identity(m, r);

    std::vector<double> contrib(static_cast<std::size_t>(m));
    double current = 0.0;
    for (int i = 0; i < m; ++i) {
      contrib[static_cast<std::size_t>(i)] = row_term(u, i);
      current += contrib[static_cast<std::size_t>(i)];
    }

    std::uniform_int_distribution<int> pick(0, m - 1);
    for (int iter = 0; iter < kRefineIters; ++iter) {
      int i = pick(rng), j = pick(rng);
      if (i == j) continue;
      const double theta = 0.35 * gauss(rng);
      const double phi = angle(rng);
      const Complex ph = std::polar(1.0, phi);
      const Eigen::RowVectorXcd ri = u.row(i), rj = u.row(j);
      u.row(i) = std::cos(theta) * ri + std::sin(theta) * ph * rj;
      u.row(j) = -std::sin(theta) * std::conj(ph) * ri + std::cos(theta) * rj;
      const double ti = row_term(u, i), tj = row_term(u, j);
      const double delta =
          ti + tj - contrib[static_cast<std::size_t>(i)] - contrib[static_cast<std::size_t>(j)];
      if (delta < 0.0) {
        contrib[static_cast<std::size_t>(i)] = ti;
        contrib[static_cast<std::size_t>(j)] = tj;
        current += delta;
      } else {
        u.row(i) = ri;
        u.row(j) = rj;
      }
    }
    best = std::min(best, current);
  }
  return best;
}

}  // namespace qconc::measures

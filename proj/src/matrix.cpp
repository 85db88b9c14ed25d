#include "qconc/matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qconc::core {

int max_qubits() {
  static const int cap = [] {
    const char* env = std::getenv("CONCURRENCE_MAX_QUBITS");
    if (env != nullptr) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v >= 1 && v <= 14) return static_cast<int>(v);
    }
    return 6;
  }();
  return cap;
}

int max_dim() { return 1 << max_qubits(); }

namespace {

void check_square(const Matrix& m, const char* who) {
  if (m.rows() != m.cols())
    throw std::invalid_argument(std::string(who) + ": matrix must be square");
}

void check_dim_cap(Eigen::Index rows, Eigen::Index cols, const char* who) {
  if (rows > max_dim() || cols > max_dim())
    throw std::invalid_argument(std::string(who) + ": dimension exceeds 2^max_qubits = " +
                                std::to_string(max_dim()));
}

void check_register(const Matrix& rho, int n_qubits, const char* who) {
  check_square(rho, who);
  if (n_qubits < 1 || n_qubits > max_qubits())
    throw std::invalid_argument(std::string(who) + ": n_qubits out of range");
  if (rho.rows() != (Eigen::Index{1} << n_qubits))
    throw std::invalid_argument(std::string(who) + ": matrix dimension does not match n_qubits");
}

// Qubit q of an n-qubit register (1-based, qubit 1 leftmost) sits at bit
// n - q of the basis index.
inline int bit_of(int n_qubits, int qubit) { return n_qubits - qubit; }

}  // namespace

bool is_hermitian(const Matrix& h, double rel_tol) {
  if (h.rows() != h.cols()) return false;
  return (h - h.adjoint()).norm() <= rel_tol * h.norm();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  check_dim_cap(a.rows() * b.rows(), a.cols() * b.cols(), "kron");
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix partial_trace(const Matrix& rho, int n_qubits, const std::vector<int>& traced) {
  check_register(rho, n_qubits, "partial_trace");
  std::vector<int> tr = traced;
  std::sort(tr.begin(), tr.end());
  if (std::adjacent_find(tr.begin(), tr.end()) != tr.end())
    throw std::invalid_argument("partial_trace: duplicate qubit index");
  for (int q : tr)
    if (q < 1 || q > n_qubits)
      throw std::invalid_argument("partial_trace: qubit index out of range");

  std::vector<int> kept;
  for (int q = 1; q <= n_qubits; ++q)
    if (!std::binary_search(tr.begin(), tr.end(), q)) kept.push_back(q);

  const int nk = static_cast<int>(kept.size());
  const int nt = static_cast<int>(tr.size());
  const Eigen::Index dk = Eigen::Index{1} << nk;
  const Eigen::Index dt = Eigen::Index{1} << nt;
  Matrix out = Matrix::Zero(dk, dk);
  for (Eigen::Index i = 0; i < dk; ++i) {
    for (Eigen::Index j = 0; j < dk; ++j) {
      Complex s{0.0, 0.0};
      for (Eigen::Index t = 0; t < dt; ++t) {
        Eigen::Index row = 0, col = 0;
        for (int a = 0; a < nk; ++a) {
          const int bit = bit_of(n_qubits, kept[a]);
          row |= ((i >> (nk - 1 - a)) & 1) << bit;
          col |= ((j >> (nk - 1 - a)) & 1) << bit;
        }
        for (int a = 0; a < nt; ++a) {
          const int bit = bit_of(n_qubits, tr[a]);
          const Eigen::Index tb = (t >> (nt - 1 - a)) & 1;
          row |= tb << bit;
          col |= tb << bit;
        }
        s += rho(row, col);
      }
      out(i, j) = s;
    }
  }
  return out;
}

Matrix permute_qubits(const Matrix& rho, int n_qubits, const std::vector<int>& perm) {
  check_register(rho, n_qubits, "permute_qubits");
  if (static_cast<int>(perm.size()) != n_qubits)
    throw std::invalid_argument("permute_qubits: perm size does not match n_qubits");
  std::vector<bool> seen(n_qubits, false);
  for (int v : perm) {
    if (v < 1 || v > n_qubits || seen[v - 1])
      throw std::invalid_argument("permute_qubits: perm is not a bijection on 1..n_qubits");
    seen[v - 1] = true;
  }

  const Eigen::Index dim = rho.rows();
  std::vector<Eigen::Index> sigma(dim, 0);
  for (Eigen::Index i = 0; i < dim; ++i) {
    Eigen::Index out = 0;
    for (int q = 1; q <= n_qubits; ++q) {
      const Eigen::Index b = (i >> bit_of(n_qubits, q)) & 1;
      out |= b << bit_of(n_qubits, perm[q - 1]);
    }
    sigma[i] = out;
  }
  Matrix out(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) out(sigma[i], sigma[j]) = rho(i, j);
  return out;
}

std::vector<double> eig_hermitian(const Matrix& h) {
  check_square(h, "eig_hermitian");
  check_dim_cap(h.rows(), h.cols(), "eig_hermitian");
  if (!is_hermitian(h))
    throw std::invalid_argument("eig_hermitian: matrix is not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eig_hermitian: eigensolver did not converge");
  const auto& ev = es.eigenvalues();
  std::vector<double> out(static_cast<std::size_t>(ev.size()));
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    out[static_cast<std::size_t>(i)] = ev(ev.size() - 1 - i);
  return out;
}

Matrix psd_sqrt(const Matrix& rho) {
  check_square(rho, "psd_sqrt");
  check_dim_cap(rho.rows(), rho.cols(), "psd_sqrt");
  if (!is_hermitian(rho))
    throw std::invalid_argument("psd_sqrt: matrix is not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("psd_sqrt: eigensolver did not converge");
  const double floor = -kPsdRelTol * std::max(rho.trace().real(), 0.0);
  Eigen::VectorXd ev = es.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < floor)
      throw std::invalid_argument("psd_sqrt: matrix is not positive semidefinite");
    ev(i) = std::sqrt(std::max(ev(i), 0.0));
  }
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace qconc::core

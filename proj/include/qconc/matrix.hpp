#pragma once
// Dense complex linear algebra for small qubit registers: Kronecker products,
// partial trace, qubit relabeling, Hermitian spectra and PSD square roots.

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace qconc::core {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Largest register the library will touch; 2^max_qubits() caps every matrix
// dimension. Defaults to 6, overridable via CONCURRENCE_MAX_QUBITS.
int max_qubits();
int max_dim();

// Relative tolerance for accepting a matrix as Hermitian.
inline constexpr double kHermRelTol = 1e-10;
// Eigenvalues of a nominal PSD matrix may dip this far (relative to the
// trace) below zero before psd_sqrt refuses instead of clamping.
inline constexpr double kPsdRelTol = 1e-9;

bool is_hermitian(const Matrix& h, double rel_tol = kHermRelTol);

Matrix kron(const Matrix& a, const Matrix& b);

// Traces out the listed qubits (1-based, qubit 1 = leftmost tensor factor) of
// an n_qubits register density matrix.
Matrix partial_trace(const Matrix& rho, int n_qubits, const std::vector<int>& traced);

// Relabels qubits: perm[q-1] is the new (1-based) position of qubit q. Acts by
// conjugation with the corresponding basis permutation, so the trace and
// spectrum are untouched.
Matrix permute_qubits(const Matrix& rho, int n_qubits, const std::vector<int>& perm);

// Eigenvalues of a Hermitian matrix in descending order. Rejects inputs whose
// anti-Hermitian part exceeds kHermRelTol * ||h||.
std::vector<double> eig_hermitian(const Matrix& h);

// Principal square root of a PSD matrix. Slightly negative eigenvalues (down
// to -kPsdRelTol * trace) are clamped to zero; anything lower throws.
Matrix psd_sqrt(const Matrix& rho);

}  // namespace qconc::core

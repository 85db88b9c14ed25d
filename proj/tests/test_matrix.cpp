#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "qconc/matrix.hpp"

#include <doctest.h>

#include <random>

using namespace qconc::core;

namespace {

Matrix random_hermitian(Eigen::Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = Complex{g(rng), g(rng)};
  return 0.5 * (a + a.adjoint()).eval();
}

Matrix random_psd(Eigen::Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = Complex{g(rng), g(rng)};
  return a * a.adjoint();
}

Matrix basis_projector(Eigen::Index dim, Eigen::Index k) {
  Matrix m = Matrix::Zero(dim, dim);
  m(k, k) = 1.0;
  return m;
}

}  // namespace

TEST_CASE("register cap defaults to 6 qubits") {
  // CONCURRENCE_MAX_QUBITS can override; either way the pair must agree.
  CHECK(max_dim() == (1 << max_qubits()));
  if (std::getenv("CONCURRENCE_MAX_QUBITS") == nullptr) CHECK(max_qubits() == 6);
}

TEST_CASE("kron identity, diagonal, and sigma_y x sigma_y cases") {
  const Matrix i2 = Matrix::Identity(2, 2);
  CHECK((kron(i2, i2) - Matrix::Identity(4, 4)).norm() == 0.0);

  Matrix d(2, 2);
  d << 2.0, 0.0, 0.0, 0.0;
  const Matrix dk = kron(d, i2);
  CHECK(dk(0, 0) == Complex{2.0, 0.0});
  CHECK(dk(1, 1) == Complex{2.0, 0.0});
  CHECK(dk(2, 2) == Complex{0.0, 0.0});
  CHECK(dk(3, 3) == Complex{0.0, 0.0});

  Matrix sy = Matrix::Zero(2, 2);
  sy(0, 1) = Complex{0.0, -1.0};
  sy(1, 0) = Complex{0.0, 1.0};
  const Matrix syy = kron(sy, sy);
  CHECK(syy(0, 3) == Complex{-1.0, 0.0});
  CHECK(syy(1, 2) == Complex{1.0, 0.0});
  CHECK(syy(2, 1) == Complex{1.0, 0.0});
  CHECK(syy(3, 0) == Complex{-1.0, 0.0});
}

TEST_CASE("kron is associative and respects the register cap") {
  // exact only for integer-valued entries, where scalar products commute with
  // grouping
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick(-3, 3);
  const auto int_matrix = [&](Eigen::Index dim) {
    Matrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
      for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = Complex(pick(rng), pick(rng));
    return m;
  };
  const Matrix a = int_matrix(2);
  const Matrix b = int_matrix(4);
  const Matrix c = int_matrix(2);
  CHECK((kron(kron(a, b), c) - kron(a, kron(b, c))).norm() == 0.0);

  const Matrix big = Matrix::Identity(max_dim(), max_dim());
  CHECK_THROWS_AS(kron(big, Matrix::Identity(2, 2)), std::invalid_argument);
}

TEST_CASE("partial_trace on product, GHZ, and W states") {
  // |000><000| tracing qubits {2,3} leaves |0><0|
  const Matrix p000 = basis_projector(8, 0);
  const Matrix r1 = partial_trace(p000, 3, {2, 3});
  CHECK((r1 - basis_projector(2, 0)).norm() == 0.0);

  // GHZ: tracing {1,2} leaves diag(1/2, 1/2)
  Matrix ghz = Matrix::Zero(8, 8);
  ghz(0, 0) = ghz(0, 7) = ghz(7, 0) = ghz(7, 7) = 0.5;
  const Matrix g3 = partial_trace(ghz, 3, {1, 2});
  CHECK((g3 - 0.5 * Matrix::Identity(2, 2)).norm() < 1e-15);

  // W: tracing {1,2} leaves diag(2/3, 1/3)
  Matrix w = Matrix::Zero(8, 8);
  for (int i : {1, 2, 4})
    for (int j : {1, 2, 4}) w(i, j) = 1.0 / 3.0;
  const Matrix w3 = partial_trace(w, 3, {1, 2});
  CHECK(w3(0, 0).real() == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(w3(1, 1).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(std::abs(w3(0, 1)) < 1e-15);
}

TEST_CASE("partial_trace preserves trace and positivity") {
  const Matrix rho = random_psd(16, 7);
  for (const auto& traced : std::vector<std::vector<int>>{{1}, {2, 4}, {1, 2, 3}}) {
    const Matrix red = partial_trace(rho, 4, traced);
    CHECK(std::abs(red.trace().real() - rho.trace().real()) <
          1e-12 * std::abs(rho.trace().real()));
    const auto ev = eig_hermitian(red);
    CHECK(ev.back() > -1e-12 * rho.trace().real());
  }
}

TEST_CASE("partial_trace rejects bad qubit sets") {
  const Matrix rho = Matrix::Identity(8, 8);
  CHECK_THROWS_AS(partial_trace(rho, 3, {0}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, 3, {4}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, 3, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, 2, {1}), std::invalid_argument);  // dim mismatch
}

TEST_CASE("permute_qubits relabels basis states") {
  // swap(1,3) moves |001><001| to |100><100|
  const Matrix p001 = basis_projector(8, 1);
  const Matrix swapped = permute_qubits(p001, 3, {3, 2, 1});
  CHECK((swapped - basis_projector(8, 4)).norm() == 0.0);

  // identity permutation leaves input untouched
  const Matrix rho = random_psd(8, 9);
  CHECK((permute_qubits(rho, 3, {1, 2, 3}) - rho).norm() == 0.0);
}

TEST_CASE("permute then inverse-permute is the identity, spectrum preserved") {
  const Matrix rho = random_psd(8, 11);
  const std::vector<int> perm{2, 3, 1};  // qubit q moves to perm[q-1]
  std::vector<int> inv(3);
  for (int q = 1; q <= 3; ++q) inv[static_cast<std::size_t>(perm[q - 1] - 1)] = q;
  const Matrix moved = permute_qubits(rho, 3, perm);
  CHECK((permute_qubits(moved, 3, inv) - rho).norm() == 0.0);

  const auto s0 = eig_hermitian(rho);
  const auto s1 = eig_hermitian(moved);
  for (std::size_t i = 0; i < s0.size(); ++i)
    CHECK(s0[i] == doctest::Approx(s1[i]).epsilon(1e-10));
}

TEST_CASE("permute_qubits rejects non-bijections") {
  const Matrix rho = Matrix::Identity(8, 8);
  CHECK_THROWS_AS(permute_qubits(rho, 3, {1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(permute_qubits(rho, 3, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(permute_qubits(rho, 3, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("eig_hermitian returns descending spectra") {
  Matrix d = Matrix::Zero(3, 3);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  d(2, 2) = 2.0;
  const auto ev = eig_hermitian(d);
  CHECK(ev == std::vector<double>{3.0, 2.0, 1.0});

  Matrix sx = Matrix::Zero(2, 2);
  sx(0, 1) = sx(1, 0) = 1.0;
  const auto sev = eig_hermitian(sx);
  CHECK(sev[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sev[1] == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("eig_hermitian trace identity and residual on random input") {
  const Matrix h = random_hermitian(8, 21);
  const auto ev = eig_hermitian(h);
  double sum = 0.0;
  for (double v : ev) sum += v;
  CHECK(sum == doctest::Approx(h.trace().real()).epsilon(1e-10));

  // Frobenius norm carries the same spectral content: sum of squares.
  double sq = 0.0;
  for (double v : ev) sq += v * v;
  CHECK(std::sqrt(sq) == doctest::Approx(h.norm()).epsilon(1e-10));
}

TEST_CASE("eig_hermitian rejects non-Hermitian input") {
  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 1) = 1.0;  // strictly upper triangular
  CHECK_THROWS_AS(eig_hermitian(bad), std::invalid_argument);
  CHECK_THROWS_AS(eig_hermitian(Matrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("psd_sqrt on diagonal, zero, and projector inputs") {
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 4.0;
  d(1, 1) = 9.0;
  const Matrix s = psd_sqrt(d);
  CHECK(s(0, 0).real() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(s(1, 1).real() == doctest::Approx(3.0).epsilon(1e-14));

  CHECK(psd_sqrt(Matrix::Zero(4, 4)).norm() == 0.0);

  const Matrix proj = basis_projector(4, 2);
  CHECK((psd_sqrt(proj) - proj).norm() < 1e-14);
}

TEST_CASE("psd_sqrt squares back to the input") {
  const Matrix rho = random_psd(8, 33);
  const Matrix s = psd_sqrt(rho);
  CHECK((s * s - rho).norm() < 1e-9 * rho.norm());
  CHECK(is_hermitian(s));
}

TEST_CASE("psd_sqrt clamps tiny negatives and rejects real ones") {
  // Eigenvalue at -1e-10 * trace: inside the clamp band.
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1e-10;
  const Matrix s = psd_sqrt(m);
  CHECK(s(1, 1).real() == 0.0);

  m(1, 1) = -1e-3;
  CHECK_THROWS_AS(psd_sqrt(m), std::invalid_argument);
}

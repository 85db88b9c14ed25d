#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "qconc/states.hpp"

#include "qconc/state_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

using namespace qconc;
using states::DensityMatrix;
using states::PureState;

namespace {

std::string temp_path(const char* name) {
  return std::string("test_states_") + name + ".json";
}

}  // namespace

TEST_CASE("ghz places weight on the all-zeros and all-ones labels") {
  const PureState g3 = states::ghz(3);
  const double a = 1.0 / std::sqrt(2.0);
  CHECK(g3.amplitudes(0).real() == doctest::Approx(a).epsilon(1e-15));
  CHECK(g3.amplitudes(7).real() == doctest::Approx(a).epsilon(1e-15));
  for (int i = 1; i < 7; ++i) CHECK(std::abs(g3.amplitudes(i)) == 0.0);

  const PureState bell = states::ghz(2);
  CHECK(bell.amplitudes(0).real() == doctest::Approx(a).epsilon(1e-15));
  CHECK(bell.amplitudes(3).real() == doctest::Approx(a).epsilon(1e-15));

  CHECK(states::ghz(5).amplitudes.norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(states::ghz(1), std::invalid_argument);
}

TEST_CASE("w spreads weight over the single-excitation labels") {
  const PureState w3 = states::w(3);
  const double a = 1.0 / std::sqrt(3.0);
  for (int i : {1, 2, 4}) CHECK(w3.amplitudes(i).real() == doctest::Approx(a).epsilon(1e-15));
  for (int i : {0, 3, 5, 6, 7}) CHECK(std::abs(w3.amplitudes(i)) == 0.0);

  const PureState w2 = states::w(2);
  CHECK(w2.amplitudes(1).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(w2.amplitudes(2).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

  // single-qubit reduction of W_3 is diag(2/3, 1/3)
  const DensityMatrix rho = states::density(w3);
  const core::Matrix r1 = core::partial_trace(rho.mat, 3, {2, 3});
  CHECK(r1(0, 0).real() == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(r1(1, 1).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("ghz and w have disjoint supports for all register sizes") {
  for (int n = 2; n <= 5; ++n) {
    const auto g = states::ghz(n), w = states::w(n);
    CHECK(std::abs((g.amplitudes.adjoint() * w.amplitudes)(0, 0)) == 0.0);
  }
}

TEST_CASE("ghz_w_mixture endpoints and spectrum") {
  const DensityMatrix at1 = states::ghz_w_mixture(1.0);
  CHECK((at1.mat - states::density(states::ghz(3)).mat).norm() == 0.0);
  const DensityMatrix at0 = states::ghz_w_mixture(0.0);
  CHECK((at0.mat - states::density(states::w(3)).mat).norm() == 0.0);

  // orthogonal components: eigenvalues are exactly {p, 1-p, 0 x 6}
  const DensityMatrix half = states::ghz_w_mixture(0.3);
  const auto ev = core::eig_hermitian(half.mat);
  CHECK(ev[0] == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(0.3).epsilon(1e-12));
  for (std::size_t i = 2; i < ev.size(); ++i) CHECK(std::abs(ev[i]) < 1e-12);

  CHECK_THROWS_AS(states::ghz_w_mixture(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(states::ghz_w_mixture(1.1), std::invalid_argument);
  CHECK_NOTHROW(half.validate());
}

TEST_CASE("random_pure is deterministic, normalized, and Haar-consistent") {
  const PureState a = states::random_pure(3, 99);
  const PureState b = states::random_pure(3, 99);
  CHECK((a.amplitudes - b.amplitudes).norm() == 0.0);
  CHECK((a.amplitudes - states::random_pure(3, 100).amplitudes).norm() > 1e-3);
  CHECK(std::abs(a.amplitudes.norm() - 1.0) < 1e-12);

  // Haar average of Tr rho_1^2 is (2 + d_rest)/(2 d_rest + 1): 4/5 at n=2,
  // 2/3 at n=3. Monte-Carlo sanity check of the sampler.
  for (const auto& [n, want] : std::vector<std::pair<int, double>>{{2, 0.8}, {3, 2.0 / 3.0}}) {
    double mean = 0.0;
    const int samples = 1000;
    for (int i = 0; i < samples; ++i) {
      const PureState psi = states::random_pure(n, 1000 + static_cast<std::uint64_t>(i));
      const DensityMatrix rho = states::density(psi);
      std::vector<int> traced;
      for (int q = 2; q <= n; ++q) traced.push_back(q);
      const core::Matrix r1 = core::partial_trace(rho.mat, n, traced);
      mean += (r1 * r1).trace().real();
    }
    mean /= samples;
    CHECK(mean == doctest::Approx(want).epsilon(0.03));
  }
}

TEST_CASE("random_rank2 passes invariants with rank at most two") {
  for (std::uint64_t seed : {0ULL, 5ULL, 123ULL}) {
    const DensityMatrix rho = states::random_rank2(3, seed);
    CHECK_NOTHROW(rho.validate());
    const auto ev = core::eig_hermitian(rho.mat);
    CHECK(ev[2] <= 1e-10);
    CHECK(std::abs(rho.mat.trace().real() - 1.0) < 1e-12);
  }
  const DensityMatrix a = states::random_rank2(3, 8);
  const DensityMatrix b = states::random_rank2(3, 8);
  CHECK((a.mat - b.mat).norm() == 0.0);
}

TEST_CASE("validate rejects malformed states") {
  PureState bad{2, core::Vector::Ones(4)};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);  // norm 2, not 1
  PureState short_vec{3, core::Vector::Ones(4) / 2.0};
  CHECK_THROWS_AS(short_vec.validate(), std::invalid_argument);  // 4 amps, n=3

  DensityMatrix not_unit{1, 0.25 * core::Matrix::Identity(2, 2),
                         states::TraceConvention::unit_trace};
  CHECK_THROWS_AS(not_unit.validate(), std::invalid_argument);
  not_unit.trace_convention = states::TraceConvention::sub_normalized;
  CHECK_NOTHROW(not_unit.validate());  // trace 1/2 is fine when sub-normalized

  core::Matrix skew = core::Matrix::Zero(2, 2);
  skew(0, 1) = 1.0;
  DensityMatrix not_herm{1, skew, states::TraceConvention::unit_trace};
  CHECK_THROWS_AS(not_herm.validate(), std::invalid_argument);

  core::Matrix indef = core::Matrix::Zero(2, 2);
  indef(0, 0) = 1.5;
  indef(1, 1) = -0.5;
  DensityMatrix not_psd{1, indef, states::TraceConvention::unit_trace};
  CHECK_THROWS_AS(not_psd.validate(), std::invalid_argument);
}

TEST_CASE("JSON round trip for pure states") {
  const std::string path = temp_path("pure");
  const PureState psi = states::random_pure(3, 4242);
  io::save_state(psi, path);
  const auto loaded = io::load_state(path);
  REQUIRE(std::holds_alternative<PureState>(loaded));
  const auto& back = std::get<PureState>(loaded);
  CHECK(back.n_qubits == 3);
  CHECK((back.amplitudes - psi.amplitudes).norm() == 0.0);  // shortest-roundtrip doubles
  std::remove(path.c_str());
}

TEST_CASE("JSON round trip for density matrices") {
  const std::string path = temp_path("density");
  const DensityMatrix rho = states::random_rank2(2, 17);
  io::save_state(rho, path);
  const auto loaded = io::load_state(path);
  REQUIRE(std::holds_alternative<DensityMatrix>(loaded));
  const auto& back = std::get<DensityMatrix>(loaded);
  CHECK(back.n_qubits == 2);
  CHECK((back.mat - rho.mat).norm() == 0.0);
  std::remove(path.c_str());
}

TEST_CASE("state JSON parser rejects malformed input") {
  CHECK_THROWS_AS(io::parse_state("not json"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_state("{}"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_state(R"({"n_qubits":2,"kind":"pure","amplitudes":[[1,0]]})"),
                  std::invalid_argument);  // wrong length
  CHECK_THROWS_AS(io::parse_state(R"({"n_qubits":1,"kind":"pure","amplitudes":[[1,0],[1,0]]})"),
                  std::invalid_argument);  // norm violation
  CHECK_THROWS_AS(io::parse_state(R"({"n_qubits":1,"kind":"wat","amplitudes":[[1,0],[0,0]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::load_state("does_not_exist.json"), std::invalid_argument);
}

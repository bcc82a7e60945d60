#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "qpurity/pauli.hpp"
#include "qpurity/reductions.hpp"
#include "qpurity/state.hpp"

using namespace qpurity;

namespace {

PauliString make_pauli(std::vector<int> qubits, const std::string& letters, int n) {
  std::vector<PauliLetter> ls;
  for (char c : letters) {
    ls.push_back(c == 'x' ? PauliLetter::X : c == 'y' ? PauliLetter::Y : PauliLetter::Z);
  }
  return PauliString(QubitSubset(std::move(qubits), n), std::move(ls));
}

}  // namespace

TEST_CASE("expectation values on computational reference states") {
  CHECK(pauli_expectation(product_state(9), make_pauli({3}, "z", 9)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pauli_expectation(ghz_state(9), make_pauli({1}, "z", 9)) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(pauli_expectation(ghz_state(9),
                          make_pauli({1, 2, 3, 4, 5, 6, 7, 8, 9}, "xxxxxxxxx", 9)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // An odd number of y letters on GHZ flips one branch with phase +-i.
  CHECK(pauli_expectation(ghz_state(3), make_pauli({1, 2, 3}, "yyx", 3)) ==
        doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("expectation matches the dense matrix oracle") {
  const std::vector<std::pair<std::vector<int>, std::string>> strings = {
      {{1}, "x"},        {{2}, "y"},       {{4}, "z"},      {{1, 3}, "xy"},
      {{2, 4}, "yz"},    {{1, 2, 4}, "zxy"}, {{1, 2, 3, 4}, "yyxz"},
      {{1, 2, 3, 4}, "yzyx"}};
  for (std::uint64_t seed = 300; seed < 305; ++seed) {
    const StateVector psi = random_state(4, seed);
    for (const auto& [qubits, letters] : strings) {
      const PauliString p = make_pauli(qubits, letters, 4);
      const cplx ref =
          oracle::dense_expectation(psi, oracle::pauli_string_matrix(p, 4));
      CHECK(std::abs(ref.imag()) <= 1e-12);
      CHECK(pauli_expectation(psi, p) == doctest::Approx(ref.real()).epsilon(1e-12));
    }
  }
}

TEST_CASE("correlation invariants on reference states") {
  const StateVector zero = product_state(9);
  const StateVector ghz = ghz_state(9);
  for (const auto& labels :
       std::vector<std::vector<int>>{{2}, {1, 7}, {3, 5, 9}, {1, 2, 8, 9}}) {
    CHECK(correlation_invariant(zero, QubitSubset(labels, 9)) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  for (int i = 1; i <= 9; ++i) {
    CHECK(correlation_invariant(ghz, QubitSubset({i}, 9)) ==
          doctest::Approx(0.0).epsilon(1e-12));
  }
  CHECK(correlation_invariant(ghz, QubitSubset({2, 6}, 9)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(
      correlation_invariant(ghz, QubitSubset({1, 2, 3, 4, 5}, 9)),
      std::invalid_argument);
}

TEST_CASE("aggregates on reference states") {
  const InvariantSummary ghz = aggregate_invariants(ghz_state(9));
  CHECK(ghz.c1 == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ghz.c2 == doctest::Approx(36.0).epsilon(1e-12));
  CHECK(ghz.c3 == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ghz.c4 == doctest::Approx(126.0).epsilon(1e-12));

  const InvariantSummary zero = aggregate_invariants(product_state(9));
  CHECK(zero.c1 == doctest::Approx(9.0).epsilon(1e-12));
  CHECK(zero.c2 == doctest::Approx(36.0).epsilon(1e-12));
  CHECK(zero.c3 == doctest::Approx(84.0).epsilon(1e-12));
  CHECK(zero.c4 == doctest::Approx(126.0).epsilon(1e-12));
}

TEST_CASE("nonnegativity of invariants") {
  for (std::uint64_t seed = 310; seed < 313; ++seed) {
    const InvariantSummary s = aggregate_invariants(random_state(9, seed));
    for (const auto& [name, f] : s.per_subset_f) {
      CHECK(f >= -1e-12);
    }
  }
}

TEST_CASE("purity reconstructed from invariants matches the direct purity") {
  // All 126 4-subsets on a couple of states, plus reference values.
  CHECK(purity_from_invariants(product_state(9), QubitSubset({1, 2, 3, 4}, 9)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(purity_from_invariants(ghz_state(9), QubitSubset({2, 4, 6, 8}, 9)) ==
        doctest::Approx(0.5).epsilon(1e-12));
  for (std::uint64_t seed = 320; seed < 322; ++seed) {
    const StateVector psi = random_state(9, seed);
    for (const QubitSubset& s : QubitSubset::all_of_size(9, 4)) {
      CHECK(purity_from_invariants(psi, s) ==
            doctest::Approx(purity(psi, s)).epsilon(1e-10));
    }
  }
}

TEST_CASE("three-way averaged purity agreement") {
  for (std::uint64_t seed = 330; seed < 340; ++seed) {
    const StateVector psi = random_state(9, seed);
    const double direct = average_balanced_purity(psi);
    CHECK(std::abs(pi_me_from_invariants(aggregate_invariants(psi)) - direct) <=
          1e-10);
    CHECK(std::abs(pi_me_lower_bound_form(psi) - direct) <= 1e-10);
  }
}

TEST_CASE("inversion overlap values and oracle") {
  const StateVector zero = product_state(9);
  const StateVector ghz = ghz_state(9);
  for (int m = 1; m <= 9; ++m) {
    CHECK(inversion_overlap(zero, m) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(inversion_overlap(ghz, m) == doctest::Approx(0.5).epsilon(1e-12));
  }
  for (std::uint64_t seed = 350; seed < 353; ++seed) {
    const StateVector psi = random_state(9, seed);
    for (int m = 1; m <= 9; ++m) {
      const oracle::Matrix rho =
          oracle::dense_reduced_density(psi, QubitSubset({m}, 9));
      const cplx det = rho[0][0] * rho[1][1] - rho[0][1] * rho[1][0];
      const double v = inversion_overlap(psi, m);
      CHECK(v == doctest::Approx(2.0 * det.real()).epsilon(1e-12));
      CHECK(v >= -1e-12);
      CHECK(v <= 0.5 + 1e-12);
    }
  }
}

TEST_CASE("subset inversion overlap matches the purity-sum oracle") {
  // Tr(rho_A rho~_A) = sum over T subset of A of (-1)^|T| purity_T
  // (with the empty-set term +1), a consequence of the Bloch expansion
  // of the spin flip.
  for (std::uint64_t seed = 354; seed < 356; ++seed) {
    const StateVector psi = random_state(9, seed);
    for (int k = 1; k <= 4; ++k) {
      for (const QubitSubset& s : QubitSubset::all_of_size(9, k)) {
        const auto& labels = s.labels();
        double expect = 0.0;
        for (int mask = 0; mask < (1 << k); ++mask) {
          std::vector<int> sub;
          for (int i = 0; i < k; ++i) {
            if ((mask >> i) & 1) sub.push_back(labels[i]);
          }
          const double p =
              sub.empty() ? 1.0 : purity(psi, QubitSubset(sub, 9));
          expect += (__builtin_popcount(mask) & 1) ? -p : p;
        }
        const double v = inversion_overlap(psi, s);
        CHECK(v == doctest::Approx(expect).epsilon(1e-10));
        CHECK(v >= -1e-10);  // overlap of two valid states
      }
    }
  }
}

TEST_CASE("signed inversion combination reference values") {
  CHECK(inversion_overlap_combination(ghz_state(9)) ==
        doctest::Approx(4.5).epsilon(1e-12));
  CHECK(inversion_overlap_combination(product_state(9)) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("inversion identity residual vanishes") {
  CHECK(eq_identity_residual(ghz_state(9)) <= 1e-9);
  CHECK(eq_identity_residual(product_state(9)) <= 1e-9);
  for (std::uint64_t seed = 360; seed < 370; ++seed) {
    CHECK(eq_identity_residual(random_state(9, seed)) <= 1e-9);
  }
}

TEST_CASE("lower-bound form reference values and floor") {
  CHECK(pi_me_lower_bound_form(ghz_state(9)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pi_me_lower_bound_form(product_state(9)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  for (std::uint64_t seed = 370; seed < 380; ++seed) {
    CHECK(pi_me_lower_bound_form(random_state(9, seed)) >= 1.0 / 14.0 - 1e-12);
  }
}

TEST_CASE("correlation invariants are local-unitary invariant") {
  const StateVector psi = random_state(5, 99);
  StateVector rotated = psi;
  for (int q = 1; q <= 5; ++q) {
    rotated = oracle::apply_single_qubit(rotated, q, oracle::random_unitary2(500 + q));
  }
  for (const auto& labels :
       std::vector<std::vector<int>>{{1}, {4}, {2, 3}, {1, 4, 5}, {1, 2, 3, 5}}) {
    const QubitSubset s(labels, 5);
    CHECK(correlation_invariant(rotated, s) ==
          doctest::Approx(correlation_invariant(psi, s)).epsilon(1e-9));
  }
}

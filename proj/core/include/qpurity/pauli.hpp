#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpurity/state.hpp"

namespace qpurity {

enum class PauliLetter { X, Y, Z };

/// Tensor product of single-qubit Pauli operators on a support subset;
/// identity elsewhere.
struct PauliString {
  QubitSubset support;
  std::vector<PauliLetter> letters;  // one per support qubit

  PauliString(QubitSubset s, std::vector<PauliLetter> l);
};

/// <psi| P |psi>. Pauli strings are Hermitian, so the result is real;
/// a residual imaginary part above 1e-9 signals an indexing bug and
/// throws.
double pauli_expectation(const StateVector& state, const PauliString& pauli);

/// F_S: sum over all 3^|S| Pauli letter assignments on support S of
/// the squared expectation value. Defined for 1 <= |S| <= 4.
double correlation_invariant(const StateVector& state, const QubitSubset& subset);

/// Per-subset F values for |S| = 1..4 and their sums C_1..C_4 over
/// unordered subsets (C_2 has 36 terms at n=9, C_3 84, C_4 126).
struct InvariantSummary {
  std::map<std::string, double> per_subset_f;  // key: subset label string
  double c1 = 0, c2 = 0, c3 = 0, c4 = 0;
};

InvariantSummary aggregate_invariants(const StateVector& state);

/// Four-qubit marginal purity reconstructed from correlation
/// invariants: 1/16 * (1 + sum over nonempty S subset of A of F_S).
double purity_from_invariants(const StateVector& state, const QubitSubset& subset);

/// Averaged balanced purity of a nine-qubit state from the aggregates:
/// 1/16 + (56 C1 + 21 C2 + 6 C3 + C4) / (126 * 16).
double pi_me_from_invariants(const InvariantSummary& summary);

/// Tr(rho_A rho~_A) for a marginal rho_A (1 <= |A| <= 4) and its spin
/// flip rho~_A = Y^{|A|} rho_A^* Y^{|A|}. Real and nonnegative; for a
/// single qubit it equals 2 det(rho_m), in [0, 1/2].
double inversion_overlap(const StateVector& state, const QubitSubset& subset);
double inversion_overlap(const StateVector& state, int qubit);

/// The signed family combination of inversion overlaps for n = 9,
///   Sigma = -5 S1 + 5 S2 - 3 S3 + S4,
/// where S_k sums Tr(rho_A rho~_A) over all size-k subsets. Satisfies
/// the exact pure-state identity 16 Sigma = C4 - C2 - 8 C1 - 18 and is
/// nonnegative (9/2 on GHZ, 0 on product states).
double inversion_overlap_combination(const StateVector& state);

/// |16 Sigma - (-18 - 8 C1 - C2 + C4)| for n = 9, with Sigma the
/// signed inversion-overlap combination above. Zero (to rounding) on
/// every pure state.
double eq_identity_residual(const StateVector& state);

/// Averaged balanced purity of a nine-qubit state written against the
/// 1/14 floor: 1/14 + [64 C1 + 22 C2 + 6 C3 + 16 Sigma] / (16 * 126).
double pi_me_lower_bound_form(const StateVector& state);

}  // namespace qpurity

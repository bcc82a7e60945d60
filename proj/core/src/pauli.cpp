#include "qpurity/pauli.hpp"

#include <cmath>
#include <stdexcept>

#include "qpurity/reductions.hpp"

namespace qpurity {
namespace {

cplx expectation_raw(const StateVector& state, const PauliString& pauli) {
  const int n = state.num_qubits();
  std::size_t flip_mask = 0;
  std::size_t z_mask = 0;  // qubits picking up (-1)^bit: Y and Z
  int y_count = 0;
  const auto& labels = pauli.support.labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::size_t bit = std::size_t{1} << (n - labels[i]);
    switch (pauli.letters[i]) {
      case PauliLetter::X:
        flip_mask |= bit;
        break;
      case PauliLetter::Y:
        flip_mask |= bit;
        z_mask |= bit;
        ++y_count;
        break;
      case PauliLetter::Z:
        z_mask |= bit;
        break;
    }
  }
  // Y|b> = i(-1)^b |1-b>: phase i per Y letter, times (-1)^bit.
  static const cplx i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cplx y_phase = i_pow[y_count & 3];

  cplx acc = 0.0;
  const std::size_t dim = state.dim();
  for (std::size_t x = 0; x < dim; ++x) {
    const cplx& a = state.amp(x);
    if (a == 0.0) continue;
    const int parity = __builtin_popcountll(x & z_mask) & 1;
    const cplx coeff = parity ? -y_phase : y_phase;
    acc += std::conj(state.amp(x ^ flip_mask)) * coeff * a;
  }
  return acc;
}

}  // namespace

PauliString::PauliString(QubitSubset s, std::vector<PauliLetter> l)
    : support(std::move(s)), letters(std::move(l)) {
  if (letters.size() != static_cast<std::size_t>(support.size())) {
    throw std::invalid_argument("one Pauli letter per support qubit required");
  }
}

double pauli_expectation(const StateVector& state, const PauliString& pauli) {
  if (pauli.support.num_qubits() != state.num_qubits()) {
    throw std::invalid_argument("support/state qubit count mismatch");
  }
  const cplx v = expectation_raw(state, pauli);
  if (std::abs(v.imag()) > 1e-9) {
    throw std::runtime_error("Pauli expectation has nonreal value: indexing bug");
  }
  return v.real();
}

double correlation_invariant(const StateVector& state, const QubitSubset& subset) {
  const int k = subset.size();
  if (k < 1 || k > 4) {
    throw std::invalid_argument("correlation invariants are defined for 1 <= |S| <= 4");
  }
  int combos = 1;
  for (int i = 0; i < k; ++i) combos *= 3;

  double f = 0.0;
  std::vector<PauliLetter> letters(k);
  for (int code = 0; code < combos; ++code) {
    int c = code;
    for (int i = 0; i < k; ++i) {  // base-3 digits in (x, y, z) order
      letters[i] = static_cast<PauliLetter>(c % 3);
      c /= 3;
    }
    const double e = pauli_expectation(state, PauliString(subset, letters));
    f += e * e;
  }
  return f;
}

InvariantSummary aggregate_invariants(const StateVector& state) {
  const int n = state.num_qubits();
  InvariantSummary out;
  double* sums[4] = {&out.c1, &out.c2, &out.c3, &out.c4};
  for (int k = 1; k <= 4 && k <= n; ++k) {
    std::vector<double> values;
    for (const QubitSubset& s : QubitSubset::all_of_size(n, k)) {
      const double f = correlation_invariant(state, s);
      out.per_subset_f.emplace(s.to_string(), f);
      values.push_back(f);
    }
    *sums[k - 1] = pairwise_sum(values);
  }
  return out;
}

double purity_from_invariants(const StateVector& state, const QubitSubset& subset) {
  if (subset.size() != 4) {
    throw std::invalid_argument("invariant purity reconstruction requires |A| = 4");
  }
  const auto& labels = subset.labels();
  double total = 1.0;
  for (int mask = 1; mask < 16; ++mask) {
    std::vector<int> sub;
    for (int i = 0; i < 4; ++i) {
      if ((mask >> i) & 1) sub.push_back(labels[i]);
    }
    total += correlation_invariant(state, QubitSubset(sub, subset.num_qubits()));
  }
  return total / 16.0;
}

double pi_me_from_invariants(const InvariantSummary& summary) {
  return 1.0 / 16.0 +
         (56.0 * summary.c1 + 21.0 * summary.c2 + 6.0 * summary.c3 + summary.c4) /
             (126.0 * 16.0);
}

double inversion_overlap(const StateVector& state, const QubitSubset& subset) {
  const int k = subset.size();
  if (k < 1 || k > 4) {
    throw std::invalid_argument("inversion overlap is defined for 1 <= |A| <= 4");
  }
  const DensityMatrix rho = reduced_density(state, subset);
  // rho~ = Y^k rho* Y^k has entries rho~(c,a) =
  // (-1)^{pop(a)+pop(c)} conj(rho(~c, ~a)); Tr(rho rho~) follows
  // directly. Always real and nonnegative (rho~ is a valid state).
  const std::size_t dim = std::size_t{1} << k;
  const std::size_t mask = dim - 1;
  cplx acc = 0.0;
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t c = 0; c < dim; ++c) {
      const double sgn = (__builtin_popcountll(a ^ c) & 1) ? -1.0 : 1.0;
      acc += sgn * rho.at(a, c) * std::conj(rho.at((~c) & mask, (~a) & mask));
    }
  }
  return acc.real();
}

double inversion_overlap(const StateVector& state, int qubit) {
  return inversion_overlap(state, QubitSubset({qubit}, state.num_qubits()));
}

double inversion_overlap_combination(const StateVector& state) {
  if (state.num_qubits() != 9) {
    throw std::invalid_argument("combination coefficients are specific to n = 9");
  }
  static constexpr double kWeight[5] = {0.0, -5.0, 5.0, -3.0, 1.0};
  std::vector<double> terms;
  for (int k = 1; k <= 4; ++k) {
    for (const QubitSubset& s : QubitSubset::all_of_size(9, k)) {
      terms.push_back(kWeight[k] * inversion_overlap(state, s));
    }
  }
  return pairwise_sum(terms);
}

double eq_identity_residual(const StateVector& state) {
  if (state.num_qubits() != 9) {
    throw std::invalid_argument("identity coefficients are specific to n = 9");
  }
  const InvariantSummary s = aggregate_invariants(state);
  const double lhs = 16.0 * inversion_overlap_combination(state);
  const double rhs = -18.0 - 8.0 * s.c1 - s.c2 + s.c4;
  return std::abs(lhs - rhs);
}

double pi_me_lower_bound_form(const StateVector& state) {
  if (state.num_qubits() != 9) {
    throw std::invalid_argument("lower-bound form is specific to n = 9");
  }
  const InvariantSummary s = aggregate_invariants(state);
  const double overlap = inversion_overlap_combination(state);
  return 1.0 / 14.0 + (64.0 * s.c1 + 22.0 * s.c2 + 6.0 * s.c3 + 16.0 * overlap) /
                          (16.0 * 126.0);
}

}  // namespace qpurity

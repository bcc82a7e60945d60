#pragma once

// Brute-force reference implementations used only by tests. Everything
// here is deliberately naive (dense matrices, full outer products) so
// that agreement with the library is meaningful.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qpurity/pauli.hpp"
#include "qpurity/state.hpp"

namespace oracle {

using qpurity::cplx;
using Matrix = std::vector<std::vector<cplx>>;

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size(), m = b[0].size(), k = b.size();
  Matrix out(n, std::vector<cplx>(m, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
  return out;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t ra = a.size(), ca = a[0].size();
  const std::size_t rb = b.size(), cb = b[0].size();
  Matrix out(ra * rb, std::vector<cplx>(ca * cb, 0.0));
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ca; ++j)
      for (std::size_t p = 0; p < rb; ++p)
        for (std::size_t q = 0; q < cb; ++q)
          out[i * rb + p][j * cb + q] = a[i][j] * b[p][q];
  return out;
}

inline Matrix pauli_matrix(char letter) {
  switch (letter) {
    case 'i': return {{1.0, 0.0}, {0.0, 1.0}};
    case 'x': return {{0.0, 1.0}, {1.0, 0.0}};
    case 'y': return {{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}};
    default:  return {{1.0, 0.0}, {0.0, -1.0}};
  }
}

// Full 2^n x 2^n matrix of the Pauli string, qubit 1 as the leftmost
// (most significant) tensor factor.
inline Matrix pauli_string_matrix(const qpurity::PauliString& p, int n) {
  Matrix out = {{1.0}};
  for (int q = 1; q <= n; ++q) {
    char letter = 'i';
    const auto& labels = p.support.labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == q) {
        letter = p.letters[i] == qpurity::PauliLetter::X   ? 'x'
                 : p.letters[i] == qpurity::PauliLetter::Y ? 'y'
                                                           : 'z';
      }
    }
    out = kron(out, pauli_matrix(letter));
  }
  return out;
}

inline cplx dense_expectation(const qpurity::StateVector& s, const Matrix& op) {
  cplx acc = 0.0;
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (std::size_t c = 0; c < s.dim(); ++c)
      acc += std::conj(s.amp(r)) * op[r][c] * s.amp(c);
  return acc;
}

// rho_A by forming the full outer product and tracing index by index.
inline Matrix dense_reduced_density(const qpurity::StateVector& s,
                                    const qpurity::QubitSubset& subset) {
  const int n = s.num_qubits();
  const auto& keep = subset.labels();
  const std::size_t da = std::size_t{1} << keep.size();
  Matrix rho(da, std::vector<cplx>(da, 0.0));
  auto project = [&](std::size_t full) {
    std::size_t packed = 0;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      packed = (packed << 1) | ((full >> (n - keep[i])) & 1);
    }
    return packed;
  };
  auto rest_bits = [&](std::size_t full) {
    std::size_t packed = 0;
    for (int q = 1; q <= n; ++q) {
      if (!subset.contains(q)) packed = (packed << 1) | ((full >> (n - q)) & 1);
    }
    return packed;
  };
  for (std::size_t r = 0; r < s.dim(); ++r) {
    for (std::size_t c = 0; c < s.dim(); ++c) {
      if (rest_bits(r) != rest_bits(c)) continue;
      rho[project(r)][project(c)] += s.amp(r) * std::conj(s.amp(c));
    }
  }
  return rho;
}

inline double dense_purity(const Matrix& rho) {
  double acc = 0.0;
  const Matrix sq = matmul(rho, rho);
  for (std::size_t i = 0; i < rho.size(); ++i) acc += sq[i][i].real();
  return acc;
}

// Apply a single-qubit unitary (2x2) to qubit q of the state.
inline qpurity::StateVector apply_single_qubit(const qpurity::StateVector& s,
                                               int q, const Matrix& u) {
  const int n = s.num_qubits();
  const std::size_t bit = std::size_t{1} << (n - q);
  std::vector<cplx> out(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const std::size_t b = (i & bit) ? 1 : 0;
    out[i] = u[b][0] * s.amp(i & ~bit) + u[b][1] * s.amp(i | bit);
  }
  return qpurity::StateVector(n, std::move(out));
}

// Haar-ish random single-qubit unitary from two angles and a phase.
inline Matrix random_unitary2(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const double theta = std::acos(1.0 - 2.0 * uni(rng));
  const double phi = 2.0 * M_PI * uni(rng);
  const double lam = 2.0 * M_PI * uni(rng);
  const cplx i_unit(0.0, 1.0);
  return {{std::cos(theta / 2.0), -std::exp(i_unit * lam) * std::sin(theta / 2.0)},
          {std::exp(i_unit * phi) * std::sin(theta / 2.0),
           std::exp(i_unit * (phi + lam)) * std::cos(theta / 2.0)}};
}

}  // namespace oracle

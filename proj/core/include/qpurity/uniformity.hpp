#pragma once

#include <map>
#include <optional>

#include "qpurity/reductions.hpp"
#include "qpurity/state.hpp"

namespace qpurity {

struct UniformityVerdict {
  int k = 0;
  bool uniform = false;
  std::optional<QubitSubset> worst_subset;
  double worst_deviation = 0.0;  // max |purity - 2^-k| over subsets
};

struct MmesVerdict {
  double pi_me = 0.0;
  double gap_to_bound = 0.0;  // pi_me - 1/14
  bool is_mmes = false;
  bool is_ame = false;
  std::map<double, int> spectrum_histogram;  // k=4 purity value -> count
};

constexpr double kNineQubitPurityFloor = 1.0 / 14.0;
constexpr double kDefaultUniformityTol = 1e-9;
constexpr double kDefaultBucketTol = 1e-6;

/// A state is k-uniform when every size-k marginal is maximally mixed,
/// equivalently when every size-k purity equals 2^-k. The worst
/// offending subset is additionally checked entrywise against I/2^k.
UniformityVerdict is_k_uniform(const StateVector& state, int k,
                               double tol = kDefaultUniformityTol);

/// Bucket the C(n,k) marginal purities; representatives of distinct
/// buckets differ by more than bucket_tol.
std::map<double, int> classify_marginals(const StateVector& state, int k,
                                         double bucket_tol = kDefaultBucketTol);

/// Nine-qubit maximal-entanglement verdict: pi_ME against the 1/14
/// floor, plus the (never satisfiable) absolute condition that all 126
/// four-qubit purities hit 1/16.
MmesVerdict mmes_verdict(const StateVector& state, double tol = kDefaultUniformityTol);

}  // namespace qpurity

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qpurity/state.hpp"

namespace qpurity {

struct SearchConfig {
  int n = 9;
  int restarts = 1;
  int max_iters = 2000;
  double step_init = 0.5;
  double step_decay = 0.5;
  // After each restart's descent goes stationary, perturb the best
  // point and re-descend this many times (basin hopping); keeps the
  // hop only when it improves. 0 disables.
  int hops = 0;
  double hop_scale = 0.12;  // Gaussian noise amplitude for the first hop
  std::uint64_t seed = 0;
  std::optional<double> target;  // early stop at target + 1e-9
  // Optional warm start for the FIRST restart only; the rest stay
  // Haar-random. Useful to polish a known near-minimal witness state
  // whose basin local descent cannot reach from random starts.
  std::optional<StateVector> warm_start;
};

struct SearchTrace {
  std::optional<StateVector> best_state;
  double best_value = 0.0;
  // (iteration, best-so-far pi_ME) samples, concatenated over restarts.
  std::vector<std::pair<int, double>> per_restart_curve;
  bool converged = false;
};

/// Wirtinger gradient G of pi_ME at `state`: the directional
/// derivative along a perturbation d of the raw amplitude vector is
/// 2 Re <G, d>.
std::vector<cplx> pi_me_gradient(const StateVector& state);

/// Minimize pi_ME by projected gradient descent on the amplitude unit
/// sphere, restarted from Haar-random initializations. Deterministic
/// for a fixed config.
SearchTrace minimize_pi_me(const SearchConfig& config);

/// Max relative disagreement between the analytic directional
/// derivative and a central finite difference over `directions`
/// random tangent directions at step h.
double gradient_check(const StateVector& state, int directions, double h,
                      std::uint64_t seed = 12345);

/// Known pi_ME floor for qubit counts where one is established.
std::optional<double> known_floor(int n);

}  // namespace qpurity

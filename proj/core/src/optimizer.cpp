#include "qpurity/optimizer.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "qpurity/reductions.hpp"

namespace qpurity {
namespace {

std::size_t scatter_bits(std::size_t packed, const std::vector<int>& labels, int n) {
  std::size_t idx = 0;
  const int k = static_cast<int>(labels.size());
  for (int i = 0; i < k; ++i) {
    if ((packed >> (k - 1 - i)) & 1) {
      idx |= std::size_t{1} << (n - labels[i]);
    }
  }
  return idx;
}

void normalize(std::vector<cplx>& v) {
  double norm_sq = 0.0;
  for (const cplx& a : v) norm_sq += std::norm(a);
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (cplx& a : v) a *= inv;
}

double pi_me_of(const std::vector<cplx>& amps, int n) {
  return average_balanced_purity(StateVector(n, amps));
}

// Remove the radial component so the step stays tangent to the sphere.
void project_tangent(const std::vector<cplx>& psi, std::vector<cplx>& grad) {
  cplx radial = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) radial += std::conj(psi[i]) * grad[i];
  const double r = radial.real();
  for (std::size_t i = 0; i < psi.size(); ++i) grad[i] -= r * psi[i];
}

}  // namespace

std::vector<cplx> pi_me_gradient(const StateVector& state) {
  const int n = state.num_qubits();
  const int half = n / 2;
  const auto subsets = QubitSubset::all_of_size(n, half);

  std::vector<cplx> grad(state.dim(), 0.0);
  const double weight = 2.0 / static_cast<double>(subsets.size());

  for (const QubitSubset& s : subsets) {
    const auto& keep = s.labels();
    const auto rest = s.complement().labels();
    const std::size_t da = std::size_t{1} << keep.size();
    const std::size_t db = std::size_t{1} << rest.size();

    std::vector<std::size_t> ia(da), ib(db);
    for (std::size_t a = 0; a < da; ++a) ia[a] = scatter_bits(a, keep, n);
    for (std::size_t b = 0; b < db; ++b) ib[b] = scatter_bits(b, rest, n);

    // M[a,b] = psi at interleaved index; d(Tr (MM+)^2)/dM* = 2 (M M+ M).
    std::vector<cplx> rho(da * da, 0.0);  // M M+
    for (std::size_t a = 0; a < da; ++a) {
      for (std::size_t a2 = 0; a2 < da; ++a2) {
        cplx acc = 0.0;
        for (std::size_t b = 0; b < db; ++b) {
          acc += state.amp(ia[a] | ib[b]) * std::conj(state.amp(ia[a2] | ib[b]));
        }
        rho[a * da + a2] = acc;
      }
    }
    for (std::size_t a = 0; a < da; ++a) {
      for (std::size_t b = 0; b < db; ++b) {
        cplx acc = 0.0;
        for (std::size_t a2 = 0; a2 < da; ++a2) {
          acc += rho[a * da + a2] * state.amp(ia[a2] | ib[b]);
        }
        grad[ia[a] | ib[b]] += weight * acc;
      }
    }
  }
  return grad;
}

SearchTrace minimize_pi_me(const SearchConfig& config) {
  if (config.n < 2 || config.n > 10) {
    throw std::invalid_argument("search supported for 2 <= n <= 10");
  }
  if (config.restarts < 1 || config.max_iters < 1) {
    throw std::invalid_argument("restarts and max_iters must be >= 1");
  }
  if (config.step_decay <= 0.0 || config.step_decay > 1.0) {
    throw std::invalid_argument("step_decay must be in (0, 1]");
  }
  if (config.hops < 0 || config.hop_scale <= 0.0) {
    throw std::invalid_argument("hops must be >= 0 and hop_scale > 0");
  }
  if (config.warm_start && config.warm_start->num_qubits() != config.n) {
    throw std::invalid_argument("warm_start qubit count must match n");
  }

  SearchTrace trace;
  trace.best_value = 2.0;

  const auto reached = [&config](double v) {
    return config.target && v <= *config.target + 1e-9;
  };

  // Gradient descent with backtracking line search; updates psi/value
  // in place until stationary, max_iters spent, or target reached.
  const auto descend = [&](std::vector<cplx>& psi, double& value,
                           double& restart_best) {
    double step = config.step_init;
    for (int it = 1; it <= config.max_iters; ++it) {
      std::vector<cplx> grad = pi_me_gradient(StateVector(config.n, psi));
      project_tangent(psi, grad);

      bool accepted = false;
      for (int bt = 0; bt < 40; ++bt) {
        std::vector<cplx> cand = psi;
        for (std::size_t i = 0; i < cand.size(); ++i) cand[i] -= step * grad[i];
        normalize(cand);
        const double cand_value = pi_me_of(cand, config.n);
        if (cand_value < value) {
          psi = std::move(cand);
          value = cand_value;
          accepted = true;
          step *= 1.2;  // recover after earlier shrinks
          break;
        }
        step *= config.step_decay;
      }
      if (value < restart_best) {
        restart_best = value;
        if ((it & 15) == 0 || !accepted) trace.per_restart_curve.emplace_back(it, restart_best);
      }
      if (!accepted) return;  // stationary to line-search resolution
      if (reached(value)) return;
    }
  };

  for (int r = 0; r < config.restarts; ++r) {
    StateVector init =
        (r == 0 && config.warm_start)
            ? *config.warm_start
            : random_state(config.n, config.seed + static_cast<std::uint64_t>(r));
    std::vector<cplx> psi = init.amplitudes();
    double value = pi_me_of(psi, config.n);
    double restart_best = value;
    trace.per_restart_curve.emplace_back(0, restart_best);

    descend(psi, value, restart_best);

    // Basin hopping: perturb the converged point and re-descend,
    // keeping the hop only when it improves.
    std::mt19937_64 hop_rng(config.seed * 0x9e3779b97f4a7c15ULL +
                            static_cast<std::uint64_t>(r) + 1);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double sigma = config.hop_scale;
    for (int hop = 0; hop < config.hops && !reached(value); ++hop) {
      std::vector<cplx> cand = psi;
      for (cplx& a : cand) a += sigma * cplx(gauss(hop_rng), gauss(hop_rng));
      normalize(cand);
      double cand_value = pi_me_of(cand, config.n);
      descend(cand, cand_value, restart_best);
      if (cand_value < value) {
        psi = std::move(cand);
        value = cand_value;
      } else {
        sigma *= 0.7;  // failed hop: try closer to the current basin
      }
    }
    trace.per_restart_curve.emplace_back(config.max_iters, restart_best);

    if (restart_best < trace.best_value) {
      trace.best_value = restart_best;
      trace.best_state = StateVector(config.n, psi);
    }
    if (reached(trace.best_value)) {
      trace.converged = true;
      break;
    }
  }
  if (config.target) {
    trace.converged = trace.best_value <= *config.target + 1e-9;
  }
  return trace;
}

double gradient_check(const StateVector& state, int directions, double h,
                      std::uint64_t seed) {
  if (h < 1e-7 || h > 1e-3) throw std::invalid_argument("h must be in [1e-7, 1e-3]");
  const int n = state.num_qubits();
  const std::vector<cplx> grad = pi_me_gradient(state);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double worst = 0.0;
  for (int d = 0; d < directions; ++d) {
    std::vector<cplx> dir(state.dim());
    double norm_sq = 0.0;
    for (cplx& x : dir) {
      x = cplx(gauss(rng), gauss(rng));
      norm_sq += std::norm(x);
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (cplx& x : dir) x *= inv;

    double analytic = 0.0;
    for (std::size_t i = 0; i < dir.size(); ++i) {
      analytic += 2.0 * (std::conj(grad[i]) * dir[i]).real();
    }

    std::vector<cplx> plus = state.amplitudes();
    std::vector<cplx> minus = state.amplitudes();
    for (std::size_t i = 0; i < dir.size(); ++i) {
      plus[i] += h * dir[i];
      minus[i] -= h * dir[i];
    }
    // pi_ME extended off the sphere as a raw quartic: skip the
    // StateVector renormalization by scaling purities explicitly.
    auto raw_value = [n](std::vector<cplx> v) {
      double norm_sq = 0.0;
      for (const cplx& a : v) norm_sq += std::norm(a);
      const double scale = norm_sq * norm_sq;  // purity is quartic
      return pi_me_of(std::move(v), n) * scale;
    };
    const double fd = (raw_value(std::move(plus)) - raw_value(std::move(minus))) / (2.0 * h);
    const double err = std::abs(analytic - fd) / (1.0 + std::abs(fd));
    worst = std::max(worst, err);
  }
  return worst;
}

std::optional<double> known_floor(int n) {
  switch (n) {
    case 2:
      return 0.5;
    case 3:
      return 0.5;
    case 5:
      return 0.25;
    case 6:
      return 0.125;
    case 9:
      return 1.0 / 14.0;
    default:
      return std::nullopt;
  }
}

}  // namespace qpurity

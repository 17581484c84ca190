#include "hilbertp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "hilbertp/seed.hpp"
#include "objective.hpp"

namespace hilbertp {

namespace {

constexpr double kArmijo = 1e-4;
constexpr double kCertifyActiveTol = 1e-9;
constexpr int kStallWindow = 100;
constexpr double kStallRelative = 1e-12;
constexpr double kInitialEps = 1e-2;

struct RestartResult {
  std::vector<double> best_x;
  double best_value = 0.0;
  double final_residual = 0.0;
  double final_value = 0.0;
  bool converged = false;
  int iterations = 0;
};

class Descent {
 public:
  explicit Descent(const detail::Problem& pr) : pr_(pr) {}

  RestartResult run(std::vector<double> x, int max_iters, double tol) {
    RestartResult res;
    auto h = shifted(x);
    double fx = detail::objective(pr_, h);
    res.best_x = x;
    res.best_value = fx;
    const bool smooth = !pr_.p.is_infinite() && pr_.p.value() > 1.0;

    int used = 0;
    if (!smooth) used = subgradient_phase(x, fx, res, std::min(max_iters / 4, 500));
    // Polish from the best point seen so far.
    x = res.best_x;
    h = shifted(x);
    fx = res.best_value;

    double step = 1.0;
    // Nonsmooth norms use an epsilon-descent scheme: the active set is every
    // kink within eps, and eps shrinks once the eps-direction is negligible.
    double eps = smooth ? kCertifyActiveTol : kInitialEps;
    double window_start = fx;
    int it = used;
    for (; it < max_iters; ++it) {
      const auto cert = detail::kkt(pr_, h, kCertifyActiveTol);
      res.final_residual = cert.residual;
      if (cert.residual <= tol) {
        res.converged = true;
        break;
      }
      const auto search = eps == kCertifyActiveTol ? cert : detail::kkt(pr_, h, eps);
      if (search.residual <= tol) {
        eps = std::max(kCertifyActiveTol, eps * 1e-2);
        continue;
      }
      const auto& dir = search.direction;
      const double slope = detail::pairing(pr_, dir, dir);
      if (!(slope > 0.0)) break;

      bool moved = false;
      double t = std::min(step * 4.0, 1e3);
      std::vector<double> trial(x.size());
      for (int bt = 0; bt < 80; ++bt, t *= 0.5) {
        for (std::size_t k = 0; k < x.size(); ++k) trial[k] = x[k] - t * dir[k];
        detail::project_perp(pr_, trial);
        const double ft = detail::objective(pr_, shifted(trial));
        if (ft < fx - kArmijo * t * slope) {
          x = trial;
          fx = ft;
          step = t;
          moved = true;
          break;
        }
      }
      if (moved) {
        h = shifted(x);
        if (fx < res.best_value) {
          res.best_value = fx;
          res.best_x = x;
        }
      } else if (eps > kCertifyActiveTol) {
        eps = std::max(kCertifyActiveTol, eps * 1e-2);
        continue;
      } else {
        break;
      }
      if ((it + 1) % kStallWindow == 0) {
        if (window_start - fx <= kStallRelative * std::abs(window_start)) break;
        window_start = fx;
      }
    }
    res.final_value = fx;
    res.iterations = it;
    return res;
  }

 private:
  std::vector<double> shifted(const std::vector<double>& x) const {
    std::vector<double> h(pr_.phi);
    for (std::size_t k = 0; k < h.size(); ++k) h[k] += x[k];
    return h;
  }

  int subgradient_phase(std::vector<double>& x, double& fx, RestartResult& res, int iters) {
    for (int k = 0; k < iters; ++k) {
      auto g = detail::any_subgradient(pr_, shifted(x));
      const double raw = detail::l2_norm(pr_, g);
      detail::project_perp(pr_, g);
      const double gn = detail::l2_norm(pr_, g);
      if (!(gn > 1e-12 * raw)) return k;
      const double alpha = 0.1 / std::sqrt(static_cast<double>(k) + 1.0);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] -= alpha * g[i] / gn;
      detail::project_perp(pr_, x);
      fx = detail::objective(pr_, shifted(x));
      if (fx < res.best_value) {
        res.best_value = fx;
        res.best_x = x;
      }
    }
    return iters;
  }

  const detail::Problem& pr_;
};

std::vector<double> random_start(const detail::Problem& pr, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> radius(0.05, 1.0);
  std::vector<double> x(pr.phi.size());
  for (std::size_t i = 0; i < pr.n(); ++i) {
    const double s = norm(pr.row(pr.phi, i));
    for (std::size_t k = 0; k < pr.d; ++k) x[i * pr.d + k] = s * gauss(rng);
  }
  detail::project_perp(pr, x);
  const double len = detail::l2_norm(pr, x);
  const double target = radius(rng) * std::sqrt(pr.phi_sq);
  // When the hyperplane is trivial on the support the projection is pure roundoff.
  if (!(len > 1e-9 * std::sqrt(pr.phi_sq))) return std::vector<double>(x.size(), 0.0);
  for (double& v : x) v *= target / len;
  detail::project_perp(pr, x);
  return x;
}

}  // namespace

HilbertVerdict hilbert_oracle(const Field& phi, Exponent p, const OracleOptions& opts) {
  if (opts.max_iters < 1 || opts.restarts < 1 || !(opts.tol > 0.0) || !(opts.improvement_floor >= 0.0))
    throw std::invalid_argument("invalid oracle options");

  // Describe the norm profile; the decision below does not use it.
  HilbertVerdict out = two_valued_check(phi, 1e-9);
  out.decision = Decision::indeterminate;

  const double scale = p_norm(phi, p);
  const Field unit = phi.scaled(1.0 / scale);
  auto pr = detail::reduce(unit, p);
  const double f0 = detail::objective(pr, pr.phi);

  Descent descent(pr);
  OracleStats stats;
  stats.reference_value = scale;
  double best = f0;
  std::vector<double> best_x(pr.phi.size(), 0.0);
  double certified_residual = -1.0;

  for (int r = 0; r < opts.restarts; ++r) {
    std::vector<double> x0 =
        r == 0 ? std::vector<double>(pr.phi.size(), 0.0) : random_start(pr, derive_seed(opts.seed, r));
    const auto res = descent.run(std::move(x0), opts.max_iters, opts.tol);
    stats.iterations += res.iterations;
    if (res.best_value < best) {
      best = res.best_value;
      best_x = res.best_x;
    }
    if (res.converged) {
      ++stats.converged_restarts;
      if (certified_residual < 0.0 || res.final_residual < certified_residual)
        certified_residual = res.final_residual;
    }
  }

  stats.best_value = best * scale;
  stats.kkt_residual = certified_residual < 0.0 ? std::numeric_limits<double>::quiet_NaN() : certified_residual;

  if (best < f0 * (1.0 - opts.improvement_floor)) {
    out.decision = Decision::not_hilbert;
    for (double& v : best_x) v *= scale;
    out.violation = detail::expand_to(phi, pr, best_x);
  } else if (stats.converged_restarts > 0) {
    out.decision = Decision::hilbert;
  }
  out.oracle = stats;
  return out;
}

}  // namespace hilbertp

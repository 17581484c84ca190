#include "objective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hilbertp/errors.hpp"

namespace hilbertp::detail {

namespace {

double row_norm(const Problem& pr, std::span<const double> x, std::size_t i) {
  return norm(pr.row(x, i));
}

// Minimizes a convex function of one variable on [lo, hi].
template <typename Fn>
double golden_min(Fn&& fn, double lo, double hi, double* arg_out) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a), e = a + inv_phi * (b - a);
  double fc = fn(c), fe = fn(e);
  for (int it = 0; it < 200 && (b - a) > 1e-15 * (std::abs(a) + std::abs(b)) + 1e-300; ++it) {
    if (fc <= fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - inv_phi * (b - a);
      fc = fn(c);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + inv_phi * (b - a);
      fe = fn(e);
    }
  }
  const double x = fc <= fe ? c : e;
  // The endpoints can be optimal for monotone pieces.
  double best_x = x, best = std::min(fc, fe);
  for (double cand : {lo, hi, 0.0}) {
    if (cand < lo || cand > hi) continue;
    const double v = fn(cand);
    if (v < best) {
      best = v;
      best_x = cand;
    }
  }
  if (arg_out) *arg_out = best_x;
  return best;
}

// Weights lambda_i = mu_i (c a_i - theta)_+ on the simplex; returns theta.
// The mass sum_i mu_i (ca_i - theta)_+ is piecewise linear and decreasing in
// theta, so sort the breakpoints and solve on the right piece.
double simplex_threshold(const std::vector<double>& mu, const std::vector<double>& ca) {
  std::vector<std::size_t> order(ca.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return ca[x] > ca[y]; });
  double m = 0.0, mc = 0.0, theta = 0.0;
  for (std::size_t j = 0; j < order.size(); ++j) {
    m += mu[order[j]];
    mc += mu[order[j]] * ca[order[j]];
    theta = (mc - 1.0) / m;
    if (j + 1 == order.size() || theta >= ca[order[j + 1]]) break;
  }
  return theta;
}

}  // namespace

Problem reduce(const Field& phi, Exponent p) {
  Problem pr;
  pr.d = phi.dim();
  pr.p = p;
  for (std::size_t i = 0; i < phi.atoms(); ++i) {
    if (phi.value_norm(i) == 0.0) continue;
    pr.atoms.push_back(i);
    pr.w.push_back(phi.weight(i));
    const auto v = phi[i];
    pr.phi.insert(pr.phi.end(), v.begin(), v.end());
  }
  if (pr.atoms.empty()) throw TrivialError("trivial field: phi vanishes identically");
  pr.phi_sq = pairing(pr, pr.phi, pr.phi);
  return pr;
}

double pairing(const Problem& pr, std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < pr.n(); ++i) s += pr.w[i] * dot(pr.row(a, i), pr.row(b, i));
  return s;
}

double l2_norm(const Problem& pr, std::span<const double> a) {
  double top = 0.0;
  for (std::size_t i = 0; i < pr.n(); ++i) top = std::max(top, row_norm(pr, a, i));
  if (top == 0.0) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < pr.n(); ++i) {
    const double r = row_norm(pr, a, i) / top;
    s += pr.w[i] * r * r;
  }
  return top * std::sqrt(s);
}

double objective(const Problem& pr, std::span<const double> h) {
  double top = 0.0;
  std::vector<double> norms(pr.n());
  for (std::size_t i = 0; i < pr.n(); ++i) {
    norms[i] = row_norm(pr, h, i);
    top = std::max(top, norms[i]);
  }
  if (pr.p.is_infinite() || top == 0.0) return top;
  const double e = pr.p.value();
  double s = 0.0;
  for (std::size_t i = 0; i < pr.n(); ++i)
    if (norms[i] > 0.0) s += pr.w[i] * std::pow(norms[i] / top, e);
  return top * std::pow(s, 1.0 / e);
}

void project_perp(const Problem& pr, std::span<double> x) {
  const double c = pairing(pr, x, pr.phi) / pr.phi_sq;
  for (std::size_t k = 0; k < x.size(); ++k) x[k] -= c * pr.phi[k];
}

std::vector<double> any_subgradient(const Problem& pr, std::span<const double> h) {
  std::vector<double> g(h.size(), 0.0);
  std::vector<double> norms(pr.n());
  double top = 0.0;
  std::size_t arg = 0;
  for (std::size_t i = 0; i < pr.n(); ++i) {
    norms[i] = row_norm(pr, h, i);
    if (norms[i] > top) {
      top = norms[i];
      arg = i;
    }
  }
  if (top == 0.0) return g;
  if (pr.p.is_infinite()) {
    for (std::size_t k = 0; k < pr.d; ++k) g[arg * pr.d + k] = h[arg * pr.d + k] / (norms[arg] * pr.w[arg]);
    return g;
  }
  const double e = pr.p.value();
  // g_i = |h_i|^(p-2) h_i / F^(p-1), evaluated in units of the largest norm.
  const double rel_f = objective(pr, h) / top;
  const double denom = std::pow(rel_f, e - 1.0);
  for (std::size_t i = 0; i < pr.n(); ++i) {
    if (norms[i] == 0.0) continue;
    const double scale = std::pow(norms[i] / top, e - 2.0) / (top * denom);
    for (std::size_t k = 0; k < pr.d; ++k) g[i * pr.d + k] = scale * h[i * pr.d + k];
  }
  return g;
}

Kkt kkt(const Problem& pr, std::span<const double> h, double active_tol) {
  Kkt out;
  const double f_val = objective(pr, h);
  const double h_l2 = l2_norm(pr, h);
  const double scale = (f_val > 0.0 && h_l2 > 0.0) ? f_val / h_l2 : 1.0;
  const std::size_t n = pr.n(), d = pr.d;

  std::vector<double> norms(n);
  double top = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    norms[i] = row_norm(pr, h, i);
    top = std::max(top, norms[i]);
  }

  std::vector<double> g(h.size(), 0.0);
  const bool smooth = !pr.p.is_infinite() && pr.p.value() > 1.0;
  if (smooth || top == 0.0) {
    g = any_subgradient(pr, h);
  } else if (pr.p.is_infinite()) {
    // Subgradients are convex combinations of delta_i h_i / (mu_i |h_i|) over the
    // (near-)maximizing atoms. Minimize |g - c phi| jointly over c and the weights.
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < n; ++i)
      if (norms[i] >= (1.0 - active_tol) * top) active.push_back(i);
    std::vector<double> mu(active.size()), a(active.size());
    double cmax = 0.0;
    for (std::size_t j = 0; j < active.size(); ++j) {
      const std::size_t i = active[j];
      mu[j] = pr.w[i];
      a[j] = dot(pr.row(h, i), pr.row(pr.phi, i)) / norms[i];
      cmax = std::max(cmax, std::abs(a[j]));
    }
    cmax = 1.01 * cmax / pr.phi_sq + 1e-300;
    auto lambdas = [&](double c) {
      std::vector<double> ca(a.size());
      for (std::size_t j = 0; j < a.size(); ++j) ca[j] = c * a[j];
      const double theta = simplex_threshold(mu, ca);
      std::vector<double> lam(a.size());
      double tot = 0.0;
      for (std::size_t j = 0; j < a.size(); ++j) {
        lam[j] = mu[j] * std::max(0.0, ca[j] - theta);
        tot += lam[j];
      }
      if (tot <= 0.0) {
        // Degenerate threshold: fall back to mass-proportional weights.
        double m = 0.0;
        for (double x : mu) m += x;
        for (std::size_t j = 0; j < a.size(); ++j) lam[j] = mu[j] / m;
      } else {
        for (double& x : lam) x /= tot;
      }
      return lam;
    };
    auto cost = [&](double c) {
      const auto lam = lambdas(c);
      double v = c * c * pr.phi_sq;
      for (std::size_t j = 0; j < a.size(); ++j) v += lam[j] * lam[j] / mu[j] - 2.0 * c * lam[j] * a[j];
      return v;
    };
    double c_best = 0.0;
    golden_min(cost, -cmax, cmax, &c_best);
    const auto lam = lambdas(c_best);
    for (std::size_t j = 0; j < active.size(); ++j) {
      const std::size_t i = active[j];
      for (std::size_t k = 0; k < d; ++k) g[i * d + k] = lam[j] * h[i * d + k] / (norms[i] * mu[j]);
    }
  } else {
    // p = 1: unit vectors on atoms where h is nonzero, any element of the unit
    // ball where it (nearly) vanishes.
    std::vector<bool> flat(n);
    double min_phi = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      flat[i] = norms[i] <= active_tol * top;
      min_phi = std::min(min_phi, norm(pr.row(pr.phi, i)));
    }
    auto cost = [&](double c) {
      double v = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const auto ph = pr.row(pr.phi, i);
        if (flat[i]) {
          const double excess = std::max(0.0, std::abs(c) * norm(ph) - 1.0);
          v += pr.w[i] * excess * excess;
        } else {
          const auto hi = pr.row(h, i);
          double s = 0.0;
          for (std::size_t k = 0; k < d; ++k) {
            const double r = hi[k] / norms[i] - c * ph[k];
            s += r * r;
          }
          v += pr.w[i] * s;
        }
      }
      return v;
    };
    const double cmax = 1.01 / min_phi;
    double c_best = 0.0;
    golden_min(cost, -cmax, cmax, &c_best);
    for (std::size_t i = 0; i < n; ++i) {
      const auto ph = pr.row(pr.phi, i);
      if (flat[i]) {
        // Closest point of the unit ball to c phi_i.
        const double len = std::abs(c_best) * norm(ph);
        const double shrink = len > 1.0 ? 1.0 / len : 1.0;
        for (std::size_t k = 0; k < d; ++k) g[i * d + k] = shrink * c_best * ph[k];
      } else {
        for (std::size_t k = 0; k < d; ++k) g[i * d + k] = h[i * d + k] / norms[i];
      }
    }
  }

  out.direction = g;
  project_perp(pr, out.direction);
  out.residual = l2_norm(pr, out.direction) / scale;
  return out;
}

Field expand_to(const Field& phi, const Problem& pr, std::span<const double> x) {
  std::vector<double> flat(phi.atoms() * phi.dim(), 0.0);
  for (std::size_t r = 0; r < pr.n(); ++r)
    for (std::size_t k = 0; k < pr.d; ++k) flat[pr.atoms[r] * pr.d + k] = x[r * pr.d + k];
  return Field(phi.space(), phi.dim(), std::move(flat));
}

}  // namespace hilbertp::detail

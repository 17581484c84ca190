#pragma once

// Test-side reference computations. These deliberately avoid the library's
// own helpers so that they can serve as independent oracles.

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "hilbertp/space.hpp"

namespace testing_support {

using hilbertp::Field;
using hilbertp::ProbSpace;
using hilbertp::Vec;

inline double euclid(const Vec& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

inline Vec row(const Field& f, std::size_t i) { return Vec(f[i].begin(), f[i].end()); }

// Plain summation, no rescaling.
inline double naive_p_norm(const Field& f, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (std::size_t i = 0; i < f.atoms(); ++i) m = std::max(m, euclid(row(f, i)));
    return m;
  }
  double s = 0.0;
  for (std::size_t i = 0; i < f.atoms(); ++i) s += f.weight(i) * std::pow(euclid(row(f, i)), p);
  return std::pow(s, 1.0 / p);
}

inline double naive_inner(const Field& f, const Field& g) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.atoms(); ++i)
    for (std::size_t k = 0; k < f.dim(); ++k) s += f.weight(i) * f[i][k] * g[i][k];
  return s;
}

// Sum of sign-weighted coefficients for every sign vector, in the order
// pattern 0 = all plus, bit j set = minus on coefficient j.
inline std::vector<Vec> brute_expansion(const std::vector<Vec>& xs) {
  const std::size_t k = xs.size(), d = xs.front().size();
  std::vector<Vec> out;
  for (std::uint64_t pat = 0; pat < (std::uint64_t{1} << k); ++pat) {
    Vec v(d, 0.0);
    for (std::size_t j = 0; j < k; ++j) {
      const double s = (pat >> j) & 1u ? -1.0 : 1.0;
      for (std::size_t c = 0; c < d; ++c) v[c] += s * xs[j][c];
    }
    out.push_back(v);
  }
  return out;
}

// Are the nonzero norms of the sign expansion all equal? Decided on norms
// squared with a relative tolerance; independent of the classifier.
inline bool brute_two_valued(const std::vector<Vec>& xs, double tol) {
  const auto vals = brute_expansion(xs);
  double top = 0.0;
  for (const auto& v : vals) top = std::max(top, euclid(v));
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (const auto& v : vals) {
    const double n = euclid(v);
    if (n <= tol * top) continue;
    lo = std::min(lo, n);
    hi = std::max(hi, n);
  }
  return hi - lo <= tol * top;
}

inline Field random_field_on(std::mt19937_64& rng, const ProbSpace& space, std::size_t dim) {
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  std::vector<Vec> vals(space.size(), Vec(dim));
  for (auto& v : vals)
    for (double& x : v) x = entry(rng);
  return Field(space, vals);
}

inline Field random_field(std::mt19937_64& rng, std::size_t atoms, std::size_t dim) {
  std::uniform_real_distribution<double> entry(-2.0, 2.0), wt(0.2, 1.0);
  std::vector<double> w(atoms);
  double tot = 0.0;
  for (double& x : w) tot += (x = wt(rng));
  for (double& x : w) x /= tot;
  std::vector<Vec> vals(atoms, Vec(dim));
  for (auto& v : vals)
    for (double& x : v) x = entry(rng);
  return Field(ProbSpace(w), vals);
}

// Derivative-free maximization of <f, phi> / |f|_p by coordinate search with
// shrinking steps, started from phi itself.
inline double dual_norm_by_search(const Field& phi, double p, std::mt19937_64& rng) {
  const std::size_t n = phi.atoms(), d = phi.dim();
  std::vector<Vec> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = row(phi, i);
  auto ratio = [&](const std::vector<Vec>& g) {
    const Field fg(phi.space(), g);
    return naive_inner(fg, phi) / naive_p_norm(fg, p);
  };
  double best = ratio(f);
  std::uniform_real_distribution<double> jitter(-0.5, 0.5);
  for (double step = 0.5; step > 1e-9; step *= 0.5) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < d; ++k)
          for (double s : {step, -step}) {
            auto g = f;
            g[i][k] += s * (1.0 + 0.1 * jitter(rng));
            const double r = ratio(g);
            if (r > best) {
              best = r;
              f = std::move(g);
              improved = true;
            }
          }
    }
  }
  return best;
}

}  // namespace testing_support

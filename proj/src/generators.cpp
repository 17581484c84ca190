#include "hilbertp/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hilbertp::gen {

Vec random_unit(Rng& rng, std::size_t dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  for (;;) {
    Vec v(dim);
    for (double& x : v) x = g(rng);
    const double n = norm(v);
    if (n > 1e-3) return (1.0 / n) * v;
  }
}

std::vector<Vec> random_orthonormal(Rng& rng, std::size_t dim, std::size_t count) {
  if (count > dim) throw std::invalid_argument("more orthonormal vectors than dimensions");
  std::vector<Vec> out;
  while (out.size() < count) {
    Vec v = random_unit(rng, dim);
    // Two passes of Gram-Schmidt for stability.
    for (int pass = 0; pass < 2; ++pass)
      for (const Vec& q : out) v = v - dot(v, q) * q;
    const double n = norm(v);
    if (n < 1e-6) continue;
    out.push_back((1.0 / n) * v);
  }
  return out;
}

std::vector<Vec> random_rotation(Rng& rng, std::size_t dim) { return random_orthonormal(rng, dim, dim); }

Vec apply(const std::vector<Vec>& matrix, const Vec& x) {
  Vec out(matrix.size());
  for (std::size_t r = 0; r < matrix.size(); ++r) out[r] = dot(matrix[r], x);
  return out;
}

ProbSpace random_space(Rng& rng, std::size_t atoms) {
  std::uniform_real_distribution<double> u(0.2, 1.0);
  std::vector<double> w(atoms);
  double total = 0.0;
  for (double& x : w) total += (x = u(rng));
  for (double& x : w) x /= total;
  return ProbSpace(std::move(w));
}

Field random_field(Rng& rng, std::size_t atoms, std::size_t dim, double spread, bool random_weights) {
  std::uniform_real_distribution<double> u(-spread, spread);
  std::vector<double> flat(atoms * dim);
  for (double& x : flat) x = u(rng);
  ProbSpace space = random_weights ? random_space(rng, atoms) : ProbSpace::uniform(atoms);
  return Field(std::move(space), dim, std::move(flat));
}

Field random_two_valued_field(Rng& rng, std::size_t atoms, std::size_t dim, double zero_prob,
                              bool random_weights) {
  std::uniform_real_distribution<double> coin(0.0, 1.0), level(0.25, 2.0);
  const double c = level(rng);
  std::vector<double> flat;
  flat.reserve(atoms * dim);
  std::vector<bool> zero(atoms);
  bool any = false;
  for (std::size_t i = 0; i < atoms; ++i) any = any || !(zero[i] = coin(rng) < zero_prob);
  if (!any) zero[std::uniform_int_distribution<std::size_t>(0, atoms - 1)(rng)] = false;
  for (std::size_t i = 0; i < atoms; ++i) {
    const Vec v = zero[i] ? Vec(dim, 0.0) : c * random_unit(rng, dim);
    flat.insert(flat.end(), v.begin(), v.end());
  }
  ProbSpace space = random_weights ? random_space(rng, atoms) : ProbSpace::uniform(atoms);
  return Field(std::move(space), dim, std::move(flat));
}

RademacherSum random_lattice_sum(Rng& rng, std::size_t k, std::size_t dim, double noise) {
  static constexpr double kLevels[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
  std::uniform_int_distribution<int> pick(0, 4);
  std::normal_distribution<double> g(0.0, 1.0);
  for (;;) {
    std::vector<Vec> xs(k, Vec(dim));
    for (Vec& x : xs)
      for (double& c : x) c = kLevels[pick(rng)] + (noise > 0.0 ? noise * g(rng) : 0.0);
    RademacherSum s(std::move(xs));
    if (!s.is_zero()) return s;
  }
}

std::vector<Vec> random_case_a_input(Rng& rng, std::size_t dim, std::size_t count) {
  std::uniform_real_distribution<double> len(0.2, 2.0);
  auto basis = random_orthonormal(rng, dim, count);
  for (Vec& b : basis) b = len(rng) * b;
  return basis;
}

std::pair<Vec, Vec> random_case_c_input(Rng& rng, std::size_t dim) {
  std::uniform_real_distribution<double> len(0.2, 2.0);
  const auto basis = random_orthonormal(rng, dim, 2);
  const double r = len(rng);
  return {r * basis[0], r * basis[1]};
}

HexagonTriple random_lemma1a_triple(Rng& rng, std::size_t dim) {
  std::uniform_real_distribution<double> len(0.2, 3.0);
  const auto basis = random_orthonormal(rng, dim, 2);
  const double r = len(rng);
  const double h = 0.5 * std::numbers::sqrt3;
  HexagonTriple t;
  t.u0 = r * basis[0];
  t.v = r * basis[1];
  t.u1 = -0.5 * t.u0 + h * t.v;
  t.u2 = -0.5 * t.u0 - h * t.v;
  return t;
}

std::array<Vec, 3> random_lemma1b_triple(Rng& rng, std::size_t dim) {
  std::uniform_real_distribution<double> len(0.2, 3.0);
  // Write u_i = r (z_i - e) with unit z_i; the last hypothesis is then
  // <z1 - e, z2 - e> = 0, a hyperplane section of the sphere through e.
  for (;;) {
    const auto frame = random_orthonormal(rng, dim, dim);
    const Vec& e = frame[0];
    const Vec z1 = random_unit(rng, dim);
    const Vec a = z1 - e;
    const double aa = dot(a, a);
    if (aa < 1e-2) continue;
    const Vec c = (dot(e, a) / aa) * a;
    const double rho_sq = 1.0 - dot(c, c);
    // A random unit direction orthogonal to a.
    Vec n = random_unit(rng, dim);
    n = n - (dot(n, a) / aa) * a;
    const double nn = norm(n);
    if (nn < 1e-3) continue;
    const Vec z2 = c + (std::sqrt(std::max(rho_sq, 0.0)) / nn) * n;
    if (norm(z2 - e) < 1e-1) continue;
    const double r = len(rng);
    return {r * e, r * a, r * (z2 - e)};
  }
}

std::pair<Vec, std::vector<Vec>> random_flip_family(Rng& rng, std::size_t dim, std::size_t size) {
  std::uniform_real_distribution<double> len(0.3, 2.0);
  const auto basis = random_orthonormal(rng, dim, std::min(dim, size + 1));
  Vec u0(dim, 0.0);
  std::vector<Vec> us;
  for (std::size_t j = 0; j < size; ++j) {
    const double a = len(rng);
    u0 = u0 + a * basis[j];
    us.push_back(-2.0 * a * basis[j]);
  }
  if (dim > size) u0 = u0 + len(rng) * basis[size];
  return {u0, us};
}

RademacherSum scramble(Rng& rng, const RademacherSum& s, std::size_t max_padding) {
  std::vector<Vec> xs(s.xs());
  std::uniform_int_distribution<std::size_t> pad(0, max_padding);
  std::bernoulli_distribution flip(0.5);
  const std::size_t extra = pad(rng);
  for (std::size_t i = 0; i < extra; ++i) xs.emplace_back(s.dim(), 0.0);
  for (Vec& x : xs)
    if (flip(rng)) x = -x;
  std::shuffle(xs.begin(), xs.end(), rng);
  return RademacherSum(std::move(xs));
}

}  // namespace hilbertp::gen

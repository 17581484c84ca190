#include "hilbertp/certify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hilbertp/errors.hpp"
#include "objective.hpp"

namespace hilbertp {

const char* to_string(Decision d) {
  switch (d) {
    case Decision::hilbert:
      return "hilbert";
    case Decision::not_hilbert:
      return "not_hilbert";
    case Decision::indeterminate:
      return "indeterminate";
  }
  return "?";
}

bool HilbertVerdict::is_hilbert() const {
  if (decision == Decision::indeterminate)
    throw std::logic_error("indeterminate verdict has no boolean value");
  return decision == Decision::hilbert;
}

namespace {

double max_norm_or_throw(const std::vector<double>& norms) {
  const double top = *std::max_element(norms.begin(), norms.end());
  if (top == 0.0) throw TrivialError("trivial field: phi vanishes identically");
  return top;
}

}  // namespace

HilbertVerdict two_valued_check(const Field& phi, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  const auto norms = phi.value_norms();
  const double top = max_norm_or_throw(norms);

  HilbertVerdict v;
  double lo = top, mass = 0.0, sq = 0.0;
  for (std::size_t i = 0; i < norms.size(); ++i) {
    if (norms[i] <= tol * top) continue;
    v.support.push_back(i);
    lo = std::min(lo, norms[i]);
    mass += phi.weight(i);
    sq += phi.weight(i) * (norms[i] / top) * (norms[i] / top);
  }
  // Quadratic mean over E: depends only on L^2 data, equals C for two-valued phi.
  v.level = top * std::sqrt(sq / mass);
  v.margin = (top - lo) / top;
  v.decision = (top - lo) <= tol * top ? Decision::hilbert : Decision::not_hilbert;
  return v;
}

double boundary_distance(const Field& phi, double tol) {
  const auto norms = phi.value_norms();
  const double top = max_norm_or_throw(norms);
  double dist = 1.0;
  for (double n : norms) {
    const double r = n / top;
    if (r <= tol || r >= 1.0 - tol) continue;
    dist = std::min(dist, std::min(r, 1.0 - r));
  }
  return dist;
}

Field projection_apply(const Field& phi, const Field& f) {
  require_compatible(phi, f);
  const double sq = inner_product(phi, phi);
  if (sq == 0.0) throw TrivialError("trivial field: phi vanishes identically");
  return phi.scaled(inner_product(f, phi) / sq);
}

double projection_pnorm(const Field& phi, Exponent p) {
  // Normalize first so that |phi|_2^2 cannot underflow or overflow.
  const auto norms = phi.value_norms();
  const double top = max_norm_or_throw(norms);
  const Field unit = phi.scaled(1.0 / top);
  const double l2 = p_norm(unit, Exponent(2.0));
  return p_norm(unit, p) * p_norm(unit, p.conjugate()) / (l2 * l2);
}

DualWitness dual_witness(const Field& phi, Exponent p) {
  if (p.is_infinite())
    throw UnsupportedExponentError("dual witness is defined for finite p only; use sup_norm_witness");
  const auto norms = phi.value_norms();
  const double top = max_norm_or_throw(norms);
  const double e = p.value();
  // |phi(w)|^(p-2) phi(w) / |phi|_p^p, computed in units of the largest norm.
  const double rel = p_norm(phi, p) / top;
  const double denom = std::pow(rel, e) * top;
  std::vector<double> flat(phi.flat().begin(), phi.flat().end());
  for (std::size_t i = 0; i < phi.atoms(); ++i) {
    const double s = norms[i] == 0.0 ? 0.0 : std::pow(norms[i] / top, e - 2.0) / (top * denom);
    for (std::size_t k = 0; k < phi.dim(); ++k) flat[i * phi.dim() + k] *= s;
  }
  return {Field(phi.space(), phi.dim(), std::move(flat))};
}

Field sup_norm_witness(const Field& phi) {
  const auto norms = phi.value_norms();
  max_norm_or_throw(norms);
  std::vector<double> flat(phi.flat().begin(), phi.flat().end());
  for (std::size_t i = 0; i < phi.atoms(); ++i)
    for (std::size_t k = 0; k < phi.dim(); ++k)
      flat[i * phi.dim() + k] = norms[i] == 0.0 ? 0.0 : flat[i * phi.dim() + k] / norms[i];
  return Field(phi.space(), phi.dim(), std::move(flat));
}

Field p_norm_gradient(const Field& h, Exponent p) {
  std::vector<double> flat(h.atoms() * h.dim(), 0.0);
  if (h.is_zero()) return Field(h.space(), h.dim(), std::move(flat));
  // Work on every atom (not only the support) so the gradient is defined everywhere.
  detail::Problem pr;
  pr.d = h.dim();
  pr.p = p;
  pr.w.assign(h.space().weights().begin(), h.space().weights().end());
  for (std::size_t i = 0; i < h.atoms(); ++i) pr.atoms.push_back(i);
  pr.phi.assign(h.flat().begin(), h.flat().end());
  pr.phi_sq = inner_product(h, h);
  const auto g = detail::any_subgradient(pr, h.flat());
  return Field(h.space(), h.dim(), g);
}

Field projected_gradient(const Field& phi, Exponent p, double active_tol) {
  const auto pr = detail::reduce(phi, p);
  const auto k = detail::kkt(pr, pr.phi, active_tol);
  return detail::expand_to(phi, pr, k.direction);
}

double gradient_residual(const Field& phi, Exponent p, double active_tol) {
  const auto pr = detail::reduce(phi, p);
  return detail::kkt(pr, pr.phi, active_tol).residual;
}

}  // namespace hilbertp

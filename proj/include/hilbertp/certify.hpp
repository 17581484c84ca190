#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hilbertp/space.hpp"

namespace hilbertp {

enum class Decision { hilbert, not_hilbert, indeterminate };

const char* to_string(Decision d);

struct OracleStats {
  double reference_value = 0.0;  // |phi|_p
  double best_value = 0.0;       // smallest |phi + f|_p found over the hyperplane
  double kkt_residual = 0.0;     // relative first-order residual at the certifying iterate
  int iterations = 0;            // summed over restarts
  int converged_restarts = 0;
};

// Outcome of a Hilbert-point decision.
//
// `level` and `support` describe the atom norms of phi (the constant C and the
// set E of the two-valued form); they are reported by every route. `margin` is
// the relative spread (max - min) / max of the retained norms. `violation` is a
// direction f with <f, phi> = 0 and |phi + f|_p < |phi|_p, only ever produced by
// the oracle.
struct HilbertVerdict {
  Decision decision = Decision::indeterminate;
  double level = 0.0;
  std::vector<std::size_t> support;
  std::optional<Field> violation;
  double margin = 0.0;
  std::optional<OracleStats> oracle;

  // Throws std::logic_error for an indeterminate verdict.
  bool is_hilbert() const;
  bool decided() const { return decision != Decision::indeterminate; }
};

// Decides whether the atom norms take only the values 0 and a single C > 0.
// Norms at or below tol * max are treated as zero; the rest must lie within
// tol * max of the maximum. Throws TrivialError for the zero field.
HilbertVerdict two_valued_check(const Field& phi, double tol = 1e-9);

// Distance of phi from the two-valued decision boundary: the smallest
// min(r, 1 - r) over norm ratios r = |phi(w)| / max that are neither
// negligible (<= tol) nor equal to the maximum (>= 1 - tol). Returns 1 when
// no atom is ambiguous.
double boundary_distance(const Field& phi, double tol = 1e-9);

// P_phi f = (<f, phi> / |phi|_2^2) phi.
Field projection_apply(const Field& phi, const Field& f);

// Operator norm of P_phi on L^p: |phi|_p |phi|_q / |phi|_2^2 (always >= 1).
double projection_pnorm(const Field& phi, Exponent p);

// Representer of the norming functional at phi for finite p:
// psi(w) = |phi(w)|^(p-2) phi(w) / |phi|_p^p, zero where phi vanishes.
struct DualWitness {
  Field psi;
};

// Throws UnsupportedExponentError for p = inf (see sup_norm_witness).
DualWitness dual_witness(const Field& phi, Exponent p);

// The p = inf test direction phi(w) / |phi(w)|, zero where phi vanishes.
// |P_phi psi|_inf <= 1 holds exactly for two-valued phi.
Field sup_norm_witness(const Field& phi);

// Gradient of h -> |h|_p represented in the L^2(mu) pairing, i.e. the field g
// with d/dt |h + t e|_p = <g, e> for every direction e. Defined wherever the
// norm is differentiable: every atom for 1 < p < inf, atoms with h(w) != 0 for
// p = 1 (zero elsewhere), and a unique maximizing atom for p = inf.
Field p_norm_gradient(const Field& h, Exponent p);

// Steepest-descent data at phi restricted to the hyperplane <f, phi> = 0:
// the component of the (minimal) p-norm subgradient orthogonal to phi.
Field projected_gradient(const Field& phi, Exponent p, double active_tol = 1e-9);

// Relative first-order optimality residual of f = 0 for min |phi + f|_p over
// <f, phi> = 0: |P_perp g|_2 / (|phi|_p / |phi|_2), with g the minimal-norm
// subgradient for p in {1, inf}. Zero exactly for two-valued phi (any p != 2)
// and for every phi at p = 2. Atoms where phi vanishes are excluded.
double gradient_residual(const Field& phi, Exponent p, double active_tol = 1e-9);

}  // namespace hilbertp

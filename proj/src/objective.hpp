#pragma once

// Shared machinery for the hyperplane problem  min |phi + f|_p  s.t. <f, phi> = 0,
// posed on the support of phi. Used by gradient_residual and the oracle.

#include <cstddef>
#include <span>
#include <vector>

#include "hilbertp/space.hpp"

namespace hilbertp::detail {

struct Problem {
  std::vector<double> w;            // atom weights restricted to supp(phi); sum <= 1
  std::size_t d = 0;
  std::vector<double> phi;          // flat, |w| * d
  std::vector<std::size_t> atoms;   // original atom index of each row
  double phi_sq = 0.0;              // <phi, phi>
  Exponent p{2.0};

  std::size_t n() const { return w.size(); }
  std::span<const double> row(std::span<const double> x, std::size_t i) const {
    return x.subspan(i * d, d);
  }
};

// Throws TrivialError when phi vanishes identically.
Problem reduce(const Field& phi, Exponent p);

double pairing(const Problem& pr, std::span<const double> a, std::span<const double> b);
double l2_norm(const Problem& pr, std::span<const double> a);
double objective(const Problem& pr, std::span<const double> h);

// x <- x - (<x, phi> / <phi, phi>) phi
void project_perp(const Problem& pr, std::span<double> x);

// Gradient for smooth p; for p in {1, inf} one element of the subdifferential.
std::vector<double> any_subgradient(const Problem& pr, std::span<const double> h);

struct Kkt {
  double residual = 0.0;          // |P_perp g|_2 / (F(h) / |h|_2)
  std::vector<double> direction;  // P_perp g for the minimal-residual subgradient g
};

// First-order optimality data at h = phi + f. For p in {1, inf} the subgradient
// is chosen from the active_tol-enlarged subdifferential to minimize the residual.
Kkt kkt(const Problem& pr, std::span<const double> h, double active_tol);

// Scatters a reduced vector back onto the atoms of phi (zero off the support).
Field expand_to(const Field& phi, const Problem& pr, std::span<const double> x);

}  // namespace hilbertp::detail

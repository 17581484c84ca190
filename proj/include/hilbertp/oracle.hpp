#pragma once

#include <cstdint>

#include "hilbertp/certify.hpp"

namespace hilbertp {

struct OracleOptions {
  std::uint64_t seed = 0;
  int max_iters = 5000;       // per restart
  double tol = kOptimizerTol; // relative first-order residual accepted as convergence
  int restarts = 16;          // restart 0 always starts at f = 0
  // Relative decrease below |phi|_p that counts as a disproof. Any strict
  // decrease is a valid counterexample; the floor only absorbs rounding.
  double improvement_floor = 1e-12;
};

// Tests the defining property directly: minimizes |phi + f|_p over the
// hyperplane <f, phi> = 0 (f restricted to the support of phi) by projected
// descent with backtracking, plus a diminishing-step projected subgradient
// phase for p in {1, inf}.
//
//  - not_hilbert: some feasible f lowers the norm by more than the floor; the
//    best such f is returned as `violation`.
//  - hilbert: no such f, and at least one restart reached a point whose
//    relative first-order residual is <= tol (so the minimum is attained up
//    to a bounded error).
//  - indeterminate: neither.
//
// Deterministic for a given seed. Throws TrivialError for the zero field.
HilbertVerdict hilbert_oracle(const Field& phi, Exponent p, const OracleOptions& opts = {});

}  // namespace hilbertp

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hilbertp/vec.hpp"

namespace hilbertp {

// Enumeration guard for lemma3_check: 2^16 subsets.
inline constexpr std::size_t kMaxLemmaFamily = 16;

// A base vector u0 together with nonzero vectors u_j, j in J.
class VectorFamily {
 public:
  // Throws GeometryError if u0 or any u_j is zero, or dimensions disagree.
  VectorFamily(Vec u0, std::vector<Vec> us);

  const Vec& u0() const { return u0_; }
  const std::vector<Vec>& us() const { return us_; }
  std::size_t size() const { return us_.size(); }
  std::size_t dim() const { return u0_.size(); }

 private:
  Vec u0_;
  std::vector<Vec> us_;
};

// u0 + sum_{j in K} u_j. Indices are 0-based; throws std::out_of_range for an
// index past the family or a repeated index.
Vec subset_sum(const VectorFamily& fam, std::span<const std::size_t> subset);

// Given |u0| = |u0 + u1| = |u0 + u2| and u0 + u1 + u2 = 0, returns the v with
//   u1 = -u0/2 + (sqrt3/2) v,  u2 = -u0/2 - (sqrt3/2) v,  v orthogonal to u0,
//   |v| = |u0|.
// v is read off from u1. All equalities are checked relative to |u0|; a failed
// hypothesis raises PreconditionError naming it.
Vec lemma1a_decompose(const Vec& u0, const Vec& u1, const Vec& u2, double tol = 1e-9);

// Given |u0| = |u0 + u1| = |u0 + u2| = |u0 + u1 + u2|, returns <u1, u2>
// (which then vanishes). Computed through the norm identity rather than dot().
double lemma1b_orthogonality(const Vec& u0, const Vec& u1, const Vec& u2, double tol = 1e-9);

// Largest |<u1, u2>| compatible with the hypotheses of lemma1b holding only up
// to a relative tol: 4 tol |u0|^2 (first order).
double lemma1b_bound(const Vec& u0, double tol);

struct SubsetNorm {
  std::uint32_t mask;  // bit j set <=> u_j in K
  double norm;         // |u0 + u(K)|
};

// |u0 + u(K)| for every K, ordered by mask. Throws SizeError past kMaxLemmaFamily.
std::vector<SubsetNorm> subset_norms(const VectorFamily& fam);

struct Lemma3Report {
  double base_norm = 0.0;
  std::vector<SubsetNorm> subsets;
  std::vector<std::uint32_t> zero_subsets;  // lemma violations; never expected
  bool all_equal = false;                   // every subset norm within tol of |u0|
};

// Checks the hypotheses (|J| >= 3, |u0 + u_j| = |u0|, each subset norm near 0 or
// near |u0|) and reports every subset norm.
Lemma3Report lemma3_check(const VectorFamily& fam, double tol = 1e-9);

// Hypotheses of the four-vector exclusion lemma: nonzero vectors,
// |u0 + u_j| = |u0| for j = 1..3, and the three triple sums and the quadruple
// sum each within tol|u0| of 0 or of |u0|.
bool lemma2_hypotheses(const Vec& u0, const Vec& u1, const Vec& u2, const Vec& u3, double tol);

struct Lemma2Search {
  std::size_t trials = 0;
  std::size_t hypothesis_hits = 0;  // trials whose quadruple met every hypothesis
  std::size_t violations = 0;       // hits with a vanishing triple or quadruple sum
  std::optional<std::vector<Vec>> counterexample;  // u0..u3 of the first violation
};

// Randomized falsification of the exclusion lemma. Each trial samples u1..u3 on
// the sphere |u0 + u| = |u0| (mixing continuous and 30/45/60/90 degree lattice
// angles), then forces one forbidden configuration (quadruple or a triple sum
// vanishing) or none, and tests the hypotheses. Every fifth trial instead
// builds an admissible orthogonal-flip family so the hypotheses are hit.
Lemma2Search lemma2_search(std::uint64_t seed, std::size_t trials, std::size_t dim, double tol = 1e-9);

}  // namespace hilbertp

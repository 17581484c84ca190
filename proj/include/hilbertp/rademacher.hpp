#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilbertp/space.hpp"

namespace hilbertp {

// Enumeration guard for expand(): 2^24 atoms.
inline constexpr std::size_t kMaxExpandTerms = 24;
inline constexpr std::size_t kMaxIndependenceTerms = 20;

// Coefficients x_1..x_k of phi(w) = sum_j w_j x_j with independent uniform signs.
class RademacherSum {
 public:
  // Throws StructuralError for an empty list or inconsistent dimensions.
  explicit RademacherSum(std::vector<Vec> xs);

  std::size_t size() const { return xs_.size(); }
  std::size_t dim() const { return xs_.front().size(); }
  const std::vector<Vec>& xs() const { return xs_; }
  const Vec& operator[](std::size_t j) const { return xs_[j]; }

  bool is_zero() const;

 private:
  std::vector<Vec> xs_;
};

// phi at sign pattern `pattern`: bit j of the index gives w_{j+1} (0 -> +1, 1 -> -1).
Vec evaluate(const RademacherSum& s, std::uint64_t pattern);

// All 2^k sign patterns as atoms of weight 2^-k, in binary counting order.
// Throws SizeError when k > kMaxExpandTerms.
Field expand(const RademacherSum& s);

// case_a: orthogonal coefficients; case_b: x1 = x2, rest zero;
// case_c: the hexagonal triple built from u orthogonal to v, |u| = |v|.
enum class SumCase { case_a, case_b, case_c, not_hilbert };

const char* to_string(SumCase c);

struct CaseLabel {
  SumCase kind = SumCase::not_hilbert;
  std::vector<Vec> orthogonal;  // case_a: the nonzero vectors (sign-normalized)
  Vec doubled;                  // case_b: x with x1 = x2 = x
  Vec u, v;                     // case_c: x = [u, u/2 + (sqrt3/2) v, u/2 - (sqrt3/2) v]
  std::string reason;           // not_hilbert
  std::optional<std::pair<double, double>> failing_norms;  // (observed, expected |u0|)

  // Diagnostics of the decision procedure.
  Vec base_point;                   // u0 = phi at the chosen sign pattern
  std::vector<int> signs;           // +-1 per coefficient (0 for zero coefficients)
  std::vector<std::size_t> index_set;  // J, as original coefficient indices
};

// Decides which of the three Hilbert-point shapes the nonzero coefficients take, by running the
// flip-vector case analysis on |J| from the base point of largest norm, and
// verifying the resulting shape. Throws TrivialError for an all-zero sum.
CaseLabel classify(const RademacherSum& s, double tol = 1e-9);

// Throws GeometryError unless the vectors are pairwise orthogonal within tol
// (relative to the product of lengths) and at least one is nonzero.
RademacherSum make_case_a(const std::vector<Vec>& vs, double tol = 1e-9);
// [x, x]; throws GeometryError for x = 0.
RademacherSum make_case_b(const Vec& x);
// [u, u/2 + (sqrt3/2) v, u/2 - (sqrt3/2) v]; requires |u| = |v| > 0 and u
// orthogonal to v within 1e-9, else GeometryError.
RademacherSum make_case_c(const Vec& u, const Vec& v);

// Builds phi from `s` on signs 1..k and f from `f_coeffs` on fresh signs
// k+1..k+m, and checks |f|_p <= |f + phi|_p up to a 1e-12 relative slack.
// Throws SizeError when k + m > kMaxIndependenceTerms.
bool independence_inequality_check(const RademacherSum& s, const RademacherSum& f_coeffs, Exponent p);

}  // namespace hilbertp

#include "hilbertp/rademacher.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "hilbertp/certify.hpp"
#include "hilbertp/errors.hpp"
#include "hilbertp/geometry.hpp"

namespace hilbertp {

RademacherSum::RademacherSum(std::vector<Vec> xs) : xs_(std::move(xs)) {
  if (xs_.empty()) throw StructuralError("a Rademacher sum needs at least one coefficient");
  const std::size_t d = xs_.front().size();
  if (d == 0) throw StructuralError("coefficients must have positive dimension");
  for (std::size_t j = 0; j < xs_.size(); ++j) {
    if (xs_[j].size() != d)
      throw StructuralError("coefficient " + std::to_string(j) + " has dimension " +
                            std::to_string(xs_[j].size()) + ", expected " + std::to_string(d));
    for (double x : xs_[j])
      if (!std::isfinite(x)) throw StructuralError("coefficients must be finite");
  }
}

bool RademacherSum::is_zero() const {
  for (const Vec& x : xs_)
    for (double c : x)
      if (c != 0.0) return false;
  return true;
}

const char* to_string(SumCase c) {
  switch (c) {
    case SumCase::case_a:
      return "CaseA";
    case SumCase::case_b:
      return "CaseB";
    case SumCase::case_c:
      return "CaseC";
    case SumCase::not_hilbert:
      return "NotHilbert";
  }
  return "?";
}

Vec evaluate(const RademacherSum& s, std::uint64_t pattern) {
  Vec out(s.dim(), 0.0);
  for (std::size_t j = 0; j < s.size(); ++j) {
    const double sign = (pattern >> j & 1u) ? -1.0 : 1.0;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += sign * s[j][k];
  }
  return out;
}

Field expand(const RademacherSum& s) {
  const std::size_t k = s.size();
  if (k > kMaxExpandTerms)
    throw SizeError("expanding " + std::to_string(k) + " signs exceeds the 2^" +
                    std::to_string(kMaxExpandTerms) + " atom guard");
  const std::size_t atoms = std::size_t{1} << k;
  const std::size_t d = s.dim();
  std::vector<double> flat(atoms * d);
  // Gray-code style incremental update would be cheaper; k <= 24 keeps this tolerable.
  for (std::size_t i = 0; i < atoms; ++i) {
    double* row = flat.data() + i * d;
    for (std::size_t c = 0; c < d; ++c) row[c] = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      const double sign = (i >> j & 1u) ? -1.0 : 1.0;
      for (std::size_t c = 0; c < d; ++c) row[c] += sign * s[j][c];
    }
  }
  return Field(ProbSpace(std::vector<double>(atoms, 1.0 / static_cast<double>(atoms))), d, std::move(flat));
}

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

CaseLabel reject(CaseLabel label, std::string reason, double observed, double expected) {
  label.kind = SumCase::not_hilbert;
  label.reason = std::move(reason);
  label.failing_norms = std::make_pair(observed, expected);
  return label;
}

// Lexicographic order on (w_1, w_2, ...) with +1 < -1, i.e. on the bit string
// read from bit 0 upward.
bool lex_less(std::uint64_t a, std::uint64_t b, std::size_t bits) {
  for (std::size_t j = 0; j < bits; ++j) {
    const auto x = a >> j & 1u, y = b >> j & 1u;
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace

CaseLabel classify(const RademacherSum& s, double tol) {
  double top = 0.0;
  for (const Vec& x : s.xs()) top = std::max(top, norm(x));
  if (top == 0.0) throw TrivialError("trivial sum: every coefficient is zero");

  // Coefficients at or below tol * max count as zero.
  std::vector<std::size_t> live;
  for (std::size_t j = 0; j < s.size(); ++j)
    if (norm(s[j]) > tol * top) live.push_back(j);
  const std::size_t m = live.size();
  if (m > kMaxExpandTerms) throw SizeError("too many nonzero coefficients to search for a base point");

  // Base point: the sign pattern of largest |phi|, lexicographically smallest among ties.
  std::vector<Vec> ys;
  for (std::size_t j : live) ys.push_back(s[j]);
  const RademacherSum live_sum(ys);
  const std::uint64_t patterns = std::uint64_t{1} << m;
  std::vector<double> norms(patterns);
  double best_norm = 0.0;
  for (std::uint64_t pat = 0; pat < patterns; ++pat) {
    norms[pat] = norm(evaluate(live_sum, pat));
    best_norm = std::max(best_norm, norms[pat]);
  }
  std::uint64_t base = patterns;
  for (std::uint64_t pat = 0; pat < patterns; ++pat) {
    if (norms[pat] < best_norm * (1.0 - tol)) continue;
    if (base == patterns || lex_less(pat, base, m)) base = pat;
  }

  CaseLabel label;
  label.signs.assign(s.size(), 0);
  for (std::size_t t = 0; t < m; ++t) {
    const int sign = (base >> t & 1u) ? -1 : 1;
    label.signs[live[t]] = sign;
    ys[t] = static_cast<double>(sign) * ys[t];
  }
  const Vec u0 = evaluate(live_sum, base);
  label.base_point = u0;
  const double r = norm(u0);
  auto near = [&](double x, double target) { return std::abs(x - target) <= tol * r; };

  // Flip vectors u0 - 2 y_j are values of phi; their norms must be 0 or |u0|.
  std::vector<std::size_t> in_j, halves;
  for (std::size_t t = 0; t < m; ++t) {
    const double n = norm(u0 - 2.0 * ys[t]);
    if (near(n, r)) {
      in_j.push_back(t);
    } else if (near(n, 0.0)) {
      halves.push_back(t);
    } else {
      return reject(std::move(label),
                    "flipping sign " + std::to_string(live[t] + 1) + " gives norm " + fmt(n) +
                        ", neither 0 nor |u0|",
                    n, r);
    }
  }
  for (std::size_t t : in_j) label.index_set.push_back(live[t]);

  switch (in_j.size()) {
    case 0: {
      // Every y_j equals u0 / 2 and they sum to u0, so exactly two are nonzero.
      if (m != 2)
        return reject(std::move(label), std::to_string(m) + " coefficients equal u0/2; need exactly 2",
                      static_cast<double>(m), 2.0);
      const double gap = norm(ys[0] - ys[1]);
      if (gap > tol * r) return reject(std::move(label), "x1 and x2 differ", gap, 0.0);
      label.kind = SumCase::case_b;
      label.doubled = 0.5 * (ys[0] + ys[1]);
      return label;
    }
    case 1: {
      // The rest equal u0 / 2; |u0 - 2 x_J| = |u0| forces them to be absent.
      if (m != 1)
        return reject(std::move(label),
                      "single flip-invariant coefficient accompanied by " + std::to_string(m - 1) +
                          " copies of u0/2",
                      static_cast<double>(m - 1), 0.0);
      label.kind = SumCase::case_a;
      label.orthogonal = {ys[0]};
      return label;
    }
    case 2: {
      const Vec& ya = ys[in_j[0]];
      const Vec& yb = ys[in_j[1]];
      const double pair = norm(u0 - 2.0 * (ya + yb));
      if (near(pair, r)) {
        // Orthogonal pair; any extra u0/2 coefficient would give |x1 + x2| = |u0|/sqrt2.
        const double ip = 0.25 * lemma1b_orthogonality(u0, -2.0 * ya, -2.0 * yb, tol);
        if (std::abs(ip) > tol * norm(ya) * norm(yb) * 4.0)
          return reject(std::move(label), "flip-invariant pair is not orthogonal", ip, 0.0);
        if (!halves.empty())
          return reject(std::move(label), "orthogonal pair accompanied by a u0/2 coefficient",
                        norm(ys[halves.front()]), 0.0);
        label.kind = SumCase::case_a;
        label.orthogonal = {ya, yb};
        return label;
      }
      if (!near(pair, 0.0))
        return reject(std::move(label), "flipping both signs of J gives norm " + fmt(pair), pair, r);
      // Hexagonal: y_a = u0/4 + (sqrt3/4) w, y_b = u0/4 - (sqrt3/4) w, plus one u0/2.
      const Vec w = -lemma1a_decompose(u0, -2.0 * ya, -2.0 * yb, tol);
      if (halves.size() != 1)
        return reject(std::move(label),
                      std::to_string(halves.size()) + " coefficients equal u0/2; need exactly 1",
                      static_cast<double>(halves.size()), 1.0);
      const Vec& yc = ys[halves.front()];
      const Vec u = yc;
      const Vec v = 0.5 * w;
      const double half_r = 0.5 * r;
      const double err = std::max({norm(ya - (0.5 * u + 0.5 * std::numbers::sqrt3 * v)),
                                   norm(yb - (0.5 * u - 0.5 * std::numbers::sqrt3 * v)),
                                   norm(u - 0.5 * u0), std::abs(norm(v) - half_r),
                                   std::abs(dot(u, v)) / half_r});
      if (err > 4.0 * tol * r) return reject(std::move(label), "hexagonal triple does not close", err, 0.0);
      label.kind = SumCase::case_c;
      label.u = u;
      label.v = v;
      return label;
    }
    default:
      break;
  }

  // |J| >= 3: every sign flip inside J keeps |u0| (third lemma), and pairwise
  // orthogonality follows from the two-vector identity.
  std::vector<Vec> us;
  for (std::size_t t : in_j) us.push_back(-2.0 * ys[t]);
  const VectorFamily fam(u0, us);
  if (fam.size() <= kMaxLemmaFamily) {
    for (const auto& sn : subset_norms(fam)) {
      if (!near(sn.norm, 0.0) && !near(sn.norm, r))
        return reject(std::move(label), "flipping a subset of J gives norm " + fmt(sn.norm), sn.norm, r);
    }
    const auto rep = lemma3_check(fam, tol);
    if (!rep.all_equal)
      return reject(std::move(label), "a subset flip of J vanishes", 0.0, r);
  }
  for (std::size_t a = 0; a < in_j.size(); ++a) {
    for (std::size_t b = a + 1; b < in_j.size(); ++b) {
      const Vec& ya = ys[in_j[a]];
      const Vec& yb = ys[in_j[b]];
      const double pair = norm(u0 - 2.0 * (ya + yb));
      if (!near(pair, r)) return reject(std::move(label), "flipping a pair of J gives norm " + fmt(pair), pair, r);
      const double ip = 0.25 * lemma1b_orthogonality(u0, -2.0 * ya, -2.0 * yb, tol);
      if (std::abs(ip) > tol * norm(ya) * norm(yb) * 4.0)
        return reject(std::move(label), "coefficients in J are not orthogonal", ip, 0.0);
    }
  }
  if (!halves.empty())
    return reject(std::move(label), "orthogonal family accompanied by a u0/2 coefficient",
                  norm(ys[halves.front()]), 0.0);
  label.kind = SumCase::case_a;
  for (std::size_t t : in_j) label.orthogonal.push_back(ys[t]);
  return label;
}

RademacherSum make_case_a(const std::vector<Vec>& vs, double tol) {
  if (vs.empty()) throw GeometryError("case (a) needs at least one vector");
  const RademacherSum s(vs);
  if (s.is_zero()) throw GeometryError("case (a) needs a nonzero vector");
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (std::abs(dot(vs[a], vs[b])) > tol * norm(vs[a]) * norm(vs[b]))
        throw GeometryError("vectors " + std::to_string(a) + " and " + std::to_string(b) +
                            " are not orthogonal");
  return s;
}

RademacherSum make_case_b(const Vec& x) {
  if (x.empty() || norm(x) == 0.0) throw GeometryError("case (b) needs a nonzero vector");
  return RademacherSum({x, x});
}

RademacherSum make_case_c(const Vec& u, const Vec& v) {
  if (u.size() != v.size() || u.empty()) throw GeometryError("u and v must share a positive dimension");
  const double nu = norm(u), nv = norm(v);
  if (nu == 0.0 || nv == 0.0) throw GeometryError("u and v must be nonzero");
  if (std::abs(nu - nv) > 1e-9 * std::max(nu, nv)) throw GeometryError("u and v must have equal length");
  if (std::abs(dot(u, v)) > 1e-9 * nu * nv) throw GeometryError("u and v must be orthogonal");
  const double h = 0.5 * std::numbers::sqrt3;
  return RademacherSum({u, 0.5 * u + h * v, 0.5 * u - h * v});
}

bool independence_inequality_check(const RademacherSum& s, const RademacherSum& f_coeffs, Exponent p) {
  if (s.dim() != f_coeffs.dim()) throw StructuralError("phi and f must share the dimension");
  const std::size_t k = s.size(), m = f_coeffs.size();
  if (k + m > kMaxIndependenceTerms)
    throw SizeError("joint expansion of " + std::to_string(k + m) + " signs exceeds the guard");
  const Vec zero(s.dim(), 0.0);
  std::vector<Vec> joint(s.xs()), f_only(k, zero);
  joint.insert(joint.end(), f_coeffs.xs().begin(), f_coeffs.xs().end());
  f_only.insert(f_only.end(), f_coeffs.xs().begin(), f_coeffs.xs().end());
  const double lhs = p_norm(expand(RademacherSum(f_only)), p);
  const double rhs = p_norm(expand(RademacherSum(joint)), p);
  return lhs <= rhs * (1.0 + 1e-12);
}

}  // namespace hilbertp

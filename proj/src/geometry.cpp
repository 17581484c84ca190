#include "hilbertp/geometry.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hilbertp/errors.hpp"
#include "hilbertp/generators.hpp"

namespace hilbertp {

namespace {

bool is_zero(const Vec& v) {
  for (double x : v)
    if (x != 0.0) return false;
  return true;
}

void require_same_dim(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw GeometryError("vectors have different dimensions");
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

void require_nonzero(const Vec& v, const char* name) {
  if (is_zero(v)) throw PreconditionError(std::string(name) + " is zero");
}

void require_norm(double got, double want, double tol, const char* what) {
  if (std::abs(got - want) > tol * want)
    throw PreconditionError(std::string(what) + " fails: got " + fmt(got) + ", expected " + fmt(want));
}

}  // namespace

VectorFamily::VectorFamily(Vec u0, std::vector<Vec> us) : u0_(std::move(u0)), us_(std::move(us)) {
  if (u0_.empty()) throw GeometryError("vectors must have positive dimension");
  if (is_zero(u0_)) throw GeometryError("u0 must be nonzero");
  for (std::size_t j = 0; j < us_.size(); ++j) {
    require_same_dim(u0_, us_[j]);
    if (is_zero(us_[j])) throw GeometryError("u_" + std::to_string(j) + " must be nonzero");
  }
}

Vec subset_sum(const VectorFamily& fam, std::span<const std::size_t> subset) {
  Vec out = fam.u0();
  std::vector<bool> seen(fam.size(), false);
  for (std::size_t j : subset) {
    if (j >= fam.size()) throw std::out_of_range("subset index " + std::to_string(j) + " out of range");
    if (seen[j]) throw std::out_of_range("subset index " + std::to_string(j) + " repeated");
    seen[j] = true;
    const Vec& u = fam.us()[j];
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += u[k];
  }
  return out;
}

Vec lemma1a_decompose(const Vec& u0, const Vec& u1, const Vec& u2, double tol) {
  require_same_dim(u0, u1);
  require_same_dim(u0, u2);
  require_nonzero(u0, "u0");
  require_nonzero(u1, "u1");
  require_nonzero(u2, "u2");
  const double r = norm(u0);
  require_norm(norm(u0 + u1), r, tol, "|u0 + u1| = |u0|");
  require_norm(norm(u0 + u2), r, tol, "|u0 + u2| = |u0|");
  const double closing = norm(u0 + u1 + u2);
  if (closing > tol * r)
    throw PreconditionError("|u0 + u1 + u2| = 0 fails: got " + fmt(closing));
  return (2.0 / std::numbers::sqrt3) * (u1 + 0.5 * u0);
}

double lemma1b_orthogonality(const Vec& u0, const Vec& u1, const Vec& u2, double tol) {
  require_same_dim(u0, u1);
  require_same_dim(u0, u2);
  require_nonzero(u0, "u0");
  require_nonzero(u1, "u1");
  require_nonzero(u2, "u2");
  const double r = norm(u0);
  const double n1 = norm(u0 + u1), n2 = norm(u0 + u2), n12 = norm(u0 + u1 + u2);
  require_norm(n1, r, tol, "|u0 + u1| = |u0|");
  require_norm(n2, r, tol, "|u0 + u2| = |u0|");
  require_norm(n12, r, tol, "|u0 + u1 + u2| = |u0|");
  // |u0+u1+u2|^2 = |u0+u1|^2 + 2<u1,u2> + |u0+u2|^2 - |u0|^2
  return 0.5 * ((n12 * n12 - n1 * n1) + (r * r - n2 * n2));
}

double lemma1b_bound(const Vec& u0, double tol) {
  const double r = norm(u0);
  return 4.0 * tol * r * r;
}

std::vector<SubsetNorm> subset_norms(const VectorFamily& fam) {
  if (fam.size() > kMaxLemmaFamily)
    throw SizeError("family of " + std::to_string(fam.size()) + " vectors exceeds the subset guard");
  const std::uint32_t count = 1u << fam.size();
  std::vector<SubsetNorm> out;
  out.reserve(count);
  Vec acc(fam.dim());
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    acc = fam.u0();
    for (std::size_t j = 0; j < fam.size(); ++j)
      if (mask >> j & 1u)
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += fam.us()[j][k];
    out.push_back({mask, norm(acc)});
  }
  return out;
}

Lemma3Report lemma3_check(const VectorFamily& fam, double tol) {
  if (fam.size() > kMaxLemmaFamily)
    throw SizeError("family of " + std::to_string(fam.size()) + " vectors exceeds the subset guard");
  if (fam.size() < 3) throw PreconditionError("index set needs at least 3 vectors");
  Lemma3Report rep;
  rep.base_norm = norm(fam.u0());
  const double r = rep.base_norm;
  for (std::size_t j = 0; j < fam.size(); ++j) {
    const double n = norm(fam.u0() + fam.us()[j]);
    if (std::abs(n - r) > tol * r)
      throw PreconditionError("|u0 + u_" + std::to_string(j) + "| = |u0| fails: got " + fmt(n) +
                              ", expected " + fmt(r));
  }
  rep.subsets = subset_norms(fam);
  rep.all_equal = true;
  for (const auto& s : rep.subsets) {
    const bool at_zero = s.norm <= tol * r;
    const bool at_base = std::abs(s.norm - r) <= tol * r;
    if (!at_zero && !at_base)
      throw PreconditionError("subset mask " + std::to_string(s.mask) + " has norm " + fmt(s.norm) +
                              ", neither 0 nor " + fmt(r));
    if (at_zero) rep.zero_subsets.push_back(s.mask);
    if (!at_base) rep.all_equal = false;
  }
  return rep;
}

bool lemma2_hypotheses(const Vec& u0, const Vec& u1, const Vec& u2, const Vec& u3, double tol) {
  const double r = norm(u0);
  if (!(r > 0.0)) return false;
  // Nonzero relative to |u0|: roundoff-sized vectors are not admissible.
  for (const Vec* v : {&u1, &u2, &u3})
    if (norm(*v) <= tol * r) return false;
  auto near = [&](double x, double target) { return std::abs(x - target) <= tol * r; };
  for (const Vec* v : {&u1, &u2, &u3})
    if (!near(norm(u0 + *v), r)) return false;
  for (const Vec& s : {u0 + u1 + u2, u0 + u1 + u3, u0 + u2 + u3, u0 + u1 + u2 + u3}) {
    const double n = norm(s);
    if (!near(n, 0.0) && !near(n, r)) return false;
  }
  return true;
}

namespace {

// A point of the sphere |u0 + u| = |u0| with u0 = r e_1, written as u = r z - u0.
class FlipSphereSampler {
 public:
  FlipSphereSampler(std::size_t dim, std::uint64_t seed) : dim_(dim), rng_(seed) {}

  Vec sample(const Vec& u0) {
    const double r = norm(u0);
    Vec z(dim_, 0.0);
    if (coin_(rng_) < 0.5 && dim_ >= 2) {
      // Lattice angles hit the exact coincidences the lemma is about.
      static constexpr double kSteps[] = {30.0, 45.0, 60.0, 90.0};
      const double step = kSteps[pick_(rng_) % 4] * std::numbers::pi / 180.0;
      const double theta = step * static_cast<double>(pick_(rng_) % 12 + 1);
      const double az = step * static_cast<double>(pick_(rng_) % 12);
      z[0] = std::cos(theta);
      if (dim_ >= 3) {
        z[1] = std::sin(theta) * std::cos(az);
        z[2] = std::sin(theta) * std::sin(az);
      } else {
        z[1] = std::sin(theta);
      }
    } else {
      for (double& x : z) x = gauss_(rng_);
      const double n = norm(z);
      for (double& x : z) x /= n;
    }
    return r * z - u0;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::size_t dim_;
  std::mt19937_64 rng_;
  std::normal_distribution<double> gauss_{0.0, 1.0};
  std::uniform_real_distribution<double> coin_{0.0, 1.0};
  std::uniform_int_distribution<unsigned> pick_{0, 1u << 20};
};

}  // namespace

Lemma2Search lemma2_search(std::uint64_t seed, std::size_t trials, std::size_t dim, double tol) {
  if (dim == 0) throw GeometryError("dimension must be positive");
  Lemma2Search out;
  FlipSphereSampler sampler(dim, seed);
  std::uniform_real_distribution<double> radius(0.5, 2.0);
  for (std::size_t t = 0; t < trials; ++t) {
    Vec u0(dim, 0.0);
    u0[0] = radius(sampler.rng());
    Vec u1 = sampler.sample(u0), u2 = sampler.sample(u0), u3 = sampler.sample(u0);
    switch (t % 5) {
      case 0:
        u3 = -(u0 + u1 + u2);
        break;
      case 1:
        u2 = -(u0 + u1);
        break;
      case 2:
        u3 = -(u0 + u1);
        break;
      case 3:
        break;
      default: {
        // Admissible by construction; extra vectors come from the sphere.
        const std::size_t m = std::min<std::size_t>(dim, 3);
        auto [base, flips] = gen::random_flip_family(sampler.rng(), dim, m);
        u0 = std::move(base);
        Vec* us[] = {&u1, &u2, &u3};
        for (std::size_t j = 0; j < 3; ++j) *us[j] = j < m ? flips[j] : sampler.sample(u0);
        break;
      }
    }
    ++out.trials;
    if (!lemma2_hypotheses(u0, u1, u2, u3, tol)) continue;
    ++out.hypothesis_hits;
    const double r = norm(u0);
    bool vanishing = false;
    for (const Vec& s : {u0 + u1 + u2, u0 + u1 + u3, u0 + u2 + u3, u0 + u1 + u2 + u3})
      vanishing = vanishing || norm(s) <= tol * r;
    if (vanishing) {
      ++out.violations;
      if (!out.counterexample) out.counterexample = std::vector<Vec>{u0, u1, u2, u3};
    }
  }
  return out;
}

}  // namespace hilbertp

#include "hilbertp/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "hilbertp/errors.hpp"

namespace hilbertp {

ProbSpace::ProbSpace(std::vector<double> weights, double sum_tol) : weights_(std::move(weights)) {
  if (weights_.empty()) throw StructuralError("probability space needs at least one atom");
  double total = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const double w = weights_[i];
    if (!std::isfinite(w) || w <= 0.0)
      throw StructuralError("weight " + std::to_string(i) + " is not a positive finite number");
    total += w;
  }
  // Summation rounding grows with the atom count, so never demand better than n ulps.
  const double slack = std::max(sum_tol, 4.0 * weights_.size() * std::numeric_limits<double>::epsilon());
  if (std::abs(total - 1.0) > slack)
    throw StructuralError("weights sum to " + std::to_string(total) + ", not 1");
}

ProbSpace ProbSpace::uniform(std::size_t n) {
  if (n == 0) throw StructuralError("probability space needs at least one atom");
  return ProbSpace(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Exponent::Exponent(double p) : p_(p) {
  if (std::isnan(p) || p < 1.0) throw UnsupportedExponentError("exponent must satisfy p >= 1");
}

Exponent Exponent::conjugate() const {
  if (is_infinite()) return Exponent(1.0);
  if (p_ == 1.0) return infinity();
  return Exponent(p_ / (p_ - 1.0));
}

Field::Field(ProbSpace space, std::size_t dim, std::vector<double> flat_values)
    : space_(std::move(space)), dim_(dim), values_(std::move(flat_values)) {
  if (dim_ == 0) throw StructuralError("field dimension must be positive");
  if (values_.size() != space_.size() * dim_)
    throw StructuralError("field has " + std::to_string(values_.size()) + " entries, expected " +
                          std::to_string(space_.size() * dim_));
  for (double x : values_)
    if (!std::isfinite(x)) throw StructuralError("field entries must be finite");
}

namespace {

std::vector<double> flatten(const std::vector<Vec>& values, std::size_t dim) {
  std::vector<double> flat;
  flat.reserve(values.size() * dim);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].size() != dim)
      throw StructuralError("value " + std::to_string(i) + " has dimension " +
                            std::to_string(values[i].size()) + ", expected " + std::to_string(dim));
    flat.insert(flat.end(), values[i].begin(), values[i].end());
  }
  return flat;
}

std::size_t leading_dim(const std::vector<Vec>& values) {
  if (values.empty()) throw StructuralError("field needs at least one value");
  return values.front().size();
}

}  // namespace

Field::Field(ProbSpace space, const std::vector<Vec>& values)
    : Field(std::move(space), leading_dim(values), flatten(values, leading_dim(values))) {}

Field Field::zeros(ProbSpace space, std::size_t dim) {
  const std::size_t n = space.size();
  return Field(std::move(space), dim, std::vector<double>(n * dim, 0.0));
}

Field Field::from_atoms(const std::vector<double>& weights, const std::vector<Vec>& values) {
  if (weights.size() != values.size())
    throw StructuralError("got " + std::to_string(weights.size()) + " weights for " +
                          std::to_string(values.size()) + " values");
  const std::size_t dim = leading_dim(values);
  std::vector<double> kept_w;
  std::vector<Vec> kept_v;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0.0 || std::isnan(weights[i]))
      throw StructuralError("weight " + std::to_string(i) + " is negative");
    if (weights[i] == 0.0) continue;
    kept_w.push_back(weights[i]);
    kept_v.push_back(values[i]);
  }
  if (kept_w.empty()) throw StructuralError("every atom has zero weight");
  return Field(ProbSpace(std::move(kept_w)), dim, flatten(kept_v, dim));
}

std::vector<double> Field::value_norms() const {
  std::vector<double> out(atoms());
  for (std::size_t i = 0; i < atoms(); ++i) out[i] = value_norm(i);
  return out;
}

bool Field::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](double x) { return x == 0.0; });
}

Field Field::operator+(const Field& other) const {
  require_compatible(*this, other);
  std::vector<double> v(values_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.values_[i];
  return Field(space_, dim_, std::move(v));
}

Field Field::operator-(const Field& other) const {
  require_compatible(*this, other);
  std::vector<double> v(values_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= other.values_[i];
  return Field(space_, dim_, std::move(v));
}

Field Field::scaled(double c) const {
  std::vector<double> v(values_);
  for (double& x : v) x *= c;
  return Field(space_, dim_, std::move(v));
}

void require_compatible(const Field& f, const Field& g) {
  if (f.dim() != g.dim())
    throw StructuralError("dimension mismatch: " + std::to_string(f.dim()) + " vs " +
                          std::to_string(g.dim()));
  if (!(f.space() == g.space())) throw StructuralError("fields live on different probability spaces");
}

double p_norm(const Field& f, Exponent p) {
  const auto norms = f.value_norms();
  const double top = *std::max_element(norms.begin(), norms.end());
  if (p.is_infinite() || top == 0.0) return top;
  const double e = p.value();
  double s = 0.0;
  for (std::size_t i = 0; i < norms.size(); ++i) {
    if (norms[i] == 0.0) continue;
    s += f.weight(i) * std::pow(norms[i] / top, e);
  }
  return top * std::pow(s, 1.0 / e);
}

double inner_product(const Field& f, const Field& g) {
  require_compatible(f, g);
  double s = 0.0;
  for (std::size_t i = 0; i < f.atoms(); ++i) s += f.weight(i) * dot(f[i], g[i]);
  return s;
}

Vec expectation(const Field& f) {
  Vec m(f.dim(), 0.0);
  for (std::size_t i = 0; i < f.atoms(); ++i) {
    const auto v = f[i];
    for (std::size_t k = 0; k < f.dim(); ++k) m[k] += f.weight(i) * v[k];
  }
  return m;
}

double covariance(const Field& f, const Field& g) {
  require_compatible(f, g);
  return inner_product(f, g) - dot(expectation(f), expectation(g));
}

}  // namespace hilbertp

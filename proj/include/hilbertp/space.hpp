#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "hilbertp/vec.hpp"

namespace hilbertp {

// Default tolerances. Structural identities are compared at the first,
// anything that goes through an iterative optimizer at the second.
inline constexpr double kStructuralTol = 1e-12;
inline constexpr double kOptimizerTol = 1e-6;

// A finite probability space: strictly positive atom weights summing to one.
class ProbSpace {
 public:
  // Throws StructuralError on an empty list, a non-positive or non-finite
  // weight, or a total mass that misses 1 by more than `sum_tol` (relative).
  explicit ProbSpace(std::vector<double> weights, double sum_tol = kStructuralTol);

  static ProbSpace uniform(std::size_t n);

  std::size_t size() const { return weights_.size(); }
  double weight(std::size_t i) const { return weights_[i]; }
  std::span<const double> weights() const { return weights_; }

  friend bool operator==(const ProbSpace&, const ProbSpace&) = default;

 private:
  std::vector<double> weights_;
};

// An L^p exponent in [1, inf].
class Exponent {
 public:
  explicit Exponent(double p);
  static Exponent infinity() { return Exponent(std::numeric_limits<double>::infinity()); }

  double value() const { return p_; }
  bool is_infinite() const { return p_ == std::numeric_limits<double>::infinity(); }
  // q with 1/p + 1/q = 1.
  Exponent conjugate() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  double p_;
};

// An R^d-valued function on a finite probability space, one vector per atom.
// Values are stored row-major, atom by atom.
class Field {
 public:
  Field(ProbSpace space, std::size_t dim, std::vector<double> flat_values);
  Field(ProbSpace space, const std::vector<Vec>& values);

  static Field zeros(ProbSpace space, std::size_t dim);

  // Builds a field from raw (weight, value) atoms. Zero-weight atoms are
  // dropped together with their values; negative weights are rejected.
  static Field from_atoms(const std::vector<double>& weights, const std::vector<Vec>& values);

  const ProbSpace& space() const { return space_; }
  std::size_t dim() const { return dim_; }
  std::size_t atoms() const { return space_.size(); }
  double weight(std::size_t i) const { return space_.weight(i); }

  std::span<const double> operator[](std::size_t i) const {
    return {values_.data() + i * dim_, dim_};
  }
  std::span<double> mutable_value(std::size_t i) { return {values_.data() + i * dim_, dim_}; }
  std::span<const double> flat() const { return values_; }

  // Euclidean norm of the value at atom i.
  double value_norm(std::size_t i) const { return norm((*this)[i]); }
  std::vector<double> value_norms() const;

  bool is_zero() const;

  Field operator+(const Field& other) const;
  Field operator-(const Field& other) const;
  Field scaled(double c) const;

 private:
  ProbSpace space_;
  std::size_t dim_;
  std::vector<double> values_;
};

// Throws StructuralError unless f and g live on the same space with the same dim.
void require_compatible(const Field& f, const Field& g);

// (sum_w mu(w) |f(w)|^p)^(1/p), or the largest value norm for p = inf.
double p_norm(const Field& f, Exponent p);

// <f, g> = sum_w mu(w) <f(w), g(w)>.
double inner_product(const Field& f, const Field& g);

Vec expectation(const Field& f);

// Cov(f, g) = E<f, g> - <E f, E g>.
double covariance(const Field& f, const Field& g);

}  // namespace hilbertp

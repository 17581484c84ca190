#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "hilbertp/certify.hpp"
#include "hilbertp/errors.hpp"
#include "hilbertp/generators.hpp"
#include "hilbertp/oracle.hpp"
#include "hilbertp/rademacher.hpp"
#include "support.hpp"

using namespace hilbertp;
using testing_support::naive_inner;
using testing_support::naive_p_norm;

namespace {

Field scalar_pair(double a, double b) { return Field(ProbSpace({0.5, 0.5}), std::vector<Vec>{{a}, {b}}); }

// min over t of |(1,2) + t(2,-1)|_4 on equal atoms, computed offline by a
// bracketed scalar minimization: 1.6361387078761946 at t = 0.2102591403.
constexpr double kFrozenMinimum = 1.6361387078761946;
constexpr double kFrozenStart = 1.7074764851741444;

}  // namespace

TEST_CASE("oracle finds the frozen violation for the {1, 2} field at p = 4") {
  const Field phi = scalar_pair(1.0, 2.0);
  const auto v = hilbert_oracle(phi, Exponent(4.0));
  REQUIRE(v.decision == Decision::not_hilbert);
  CHECK_FALSE(v.is_hilbert());
  REQUIRE(v.violation.has_value());
  REQUIRE(v.oracle.has_value());

  const Field& f = *v.violation;
  CHECK(std::abs(naive_inner(f, phi)) <= 1e-9 * naive_inner(phi, phi));
  const double start = naive_p_norm(phi, 4.0), end = naive_p_norm(phi + f, 4.0);
  CHECK(start == doctest::Approx(kFrozenStart).epsilon(1e-15));
  CHECK(end == doctest::Approx(kFrozenMinimum).epsilon(1e-8));
  CHECK(start - end > 0.07);
  CHECK(v.oracle->best_value == doctest::Approx(end).epsilon(1e-12));
  CHECK(v.oracle->reference_value == doctest::Approx(start));
  // The minimizer is t (2, -1).
  CHECK(f[0][0] / 2.0 == doctest::Approx(0.2102591403).epsilon(1e-6));
  CHECK(f[1][0] == doctest::Approx(-0.2102591403).epsilon(1e-6));
}

TEST_CASE("oracle certifies two-valued fields and every field at p = 2") {
  const Field c = expand(make_case_c({1.0, 0.0}, {0.0, 1.0}));
  for (const auto& p : {Exponent(1.0), Exponent(3.0), Exponent(4.0), Exponent::infinity()}) {
    const auto v = hilbert_oracle(c, p);
    CHECK(v.decision == Decision::hilbert);
    CHECK_FALSE(v.violation.has_value());
    CHECK(v.oracle->best_value == doctest::Approx(v.oracle->reference_value).epsilon(1e-12));
    CHECK(v.oracle->converged_restarts >= 1);
  }
  CHECK(hilbert_oracle(scalar_pair(1.0, 2.0), Exponent(2.0)).is_hilbert());
  CHECK(hilbert_oracle(Field(ProbSpace({1.0}), std::vector<Vec>{{3.0, 4.0}}), Exponent(4.0)).is_hilbert());
}

TEST_CASE("oracle agrees with the two-valued criterion on random fields") {
  gen::Rng rng(31);
  OracleOptions opts;
  for (int t = 0; t < 60; ++t) {
    const Field phi = t % 2 ? gen::random_two_valued_field(rng, 2 + t % 4, 1 + t % 3)
                            : gen::random_field(rng, 2 + t % 4, 1 + t % 3);
    if (boundary_distance(phi) <= 1e-3) continue;
    const bool expect = two_valued_check(phi).is_hilbert();
    opts.seed = static_cast<std::uint64_t>(t);
    for (const auto& p : {Exponent(1.0), Exponent(1.5), Exponent(3.0), Exponent::infinity()}) {
      CAPTURE(t);
      CAPTURE(p.value());
      const auto v = hilbert_oracle(phi, p, opts);
      REQUIRE(v.decided());
      CHECK(v.is_hilbert() == expect);
      if (v.violation) {
        const double pv = p.value();
        CHECK(std::abs(naive_inner(*v.violation, phi)) <= 1e-9 * naive_inner(phi, phi));
        CHECK(naive_p_norm(phi + *v.violation, pv) < naive_p_norm(phi, pv));
      }
    }
  }
}

TEST_CASE("oracle is deterministic for a fixed seed") {
  gen::Rng rng(32);
  const Field phi = gen::random_field(rng, 4, 3);
  OracleOptions opts;
  opts.seed = 99;
  const auto a = hilbert_oracle(phi, Exponent::infinity(), opts);
  const auto b = hilbert_oracle(phi, Exponent::infinity(), opts);
  CHECK(a.oracle->best_value == b.oracle->best_value);
  CHECK(a.oracle->iterations == b.oracle->iterations);
}

TEST_CASE("indeterminate outcomes are reported, not coerced") {
  // A two-valued field in general position: f = 0 is optimal but the KKT
  // residual is roundoff, never below an absurd tolerance, and no descent exists.
  gen::Rng rng(5);
  const Field phi = gen::random_two_valued_field(rng, 4, 3);
  OracleOptions opts;
  opts.tol = 1e-300;
  opts.restarts = 2;
  opts.max_iters = 50;
  const auto v = hilbert_oracle(phi, Exponent(3.0), opts);
  CHECK(v.decision == Decision::indeterminate);
  CHECK_FALSE(v.decided());
  CHECK_FALSE(v.violation.has_value());
  CHECK_THROWS_AS((void)v.is_hilbert(), std::logic_error);
  CHECK(std::string(to_string(v.decision)) == "indeterminate");

  OracleOptions bad;
  bad.restarts = 0;
  CHECK_THROWS_AS(hilbert_oracle(phi, Exponent(3.0), bad), std::invalid_argument);
  CHECK_THROWS_AS(hilbert_oracle(Field::zeros(ProbSpace({1.0}), 1), Exponent(3.0)), TrivialError);
}

TEST_CASE("zero atoms do not create spurious violations") {
  // A single nonzero atom: the hyperplane restricted to the support is trivial.
  const Field phi(ProbSpace({0.38, 0.62}), std::vector<Vec>{{2.3}, {0.0}});
  for (const auto& p : {Exponent(1.0), Exponent(4.0), Exponent::infinity()}) CHECK(hilbert_oracle(phi, p).is_hilbert());
}

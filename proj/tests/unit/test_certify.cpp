#include <doctest.h>

#include <cmath>
#include <random>

#include "hilbertp/certify.hpp"
#include "hilbertp/errors.hpp"
#include "hilbertp/generators.hpp"
#include "hilbertp/rademacher.hpp"
#include "support.hpp"

using namespace hilbertp;
using testing_support::naive_inner;
using testing_support::naive_p_norm;

namespace {

Field scalar_pair(double a, double b) { return Field(ProbSpace({0.5, 0.5}), std::vector<Vec>{{a}, {b}}); }

Field unit_norm_field() {
  return Field(ProbSpace({0.1, 0.2, 0.3, 0.4}),
               std::vector<Vec>{{0.6, 0.0, 0.8}, {0.0, -1.0, 0.0}, {0.48, 0.6, -0.64}, {-1.0, 0.0, 0.0}});
}

const std::vector<Exponent> kNonTwo = {Exponent(1.0), Exponent(1.5), Exponent(3.0), Exponent(4.0),
                                       Exponent::infinity()};

}  // namespace

TEST_CASE("two_valued_check examples") {
  const auto flat = two_valued_check(unit_norm_field());
  CHECK(flat.is_hilbert());
  CHECK(flat.level == doctest::Approx(1.0));
  CHECK(flat.support == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(flat.margin == doctest::Approx(0.0).epsilon(1e-15));

  const auto b = two_valued_check(expand(RademacherSum({{1.0, 0.0}, {1.0, 0.0}})));
  CHECK(b.is_hilbert());
  CHECK(b.level == doctest::Approx(2.0));
  CHECK(b.support == std::vector<std::size_t>{0, 3});

  const auto twelve = two_valued_check(scalar_pair(1.0, 2.0));
  CHECK_FALSE(twelve.is_hilbert());
  CHECK(twelve.margin == doctest::Approx(0.5));
  CHECK_FALSE(twelve.violation.has_value());

  CHECK_THROWS_AS(two_valued_check(Field::zeros(ProbSpace::uniform(3), 2)), TrivialError);
}

TEST_CASE("two_valued_check invariants on random two-valued fields") {
  gen::Rng rng(21);
  for (int t = 0; t < 300; ++t) {
    const Field phi = gen::random_two_valued_field(rng, 2 + t % 6, 1 + t % 4);
    const double tol = 1e-9;
    const auto v = two_valued_check(phi, tol);
    REQUIRE(v.is_hilbert());
    REQUIRE_FALSE(v.support.empty());
    std::vector<bool> in(phi.atoms(), false);
    for (auto i : v.support) in[i] = true;
    double top = 0.0;
    for (std::size_t i = 0; i < phi.atoms(); ++i) top = std::max(top, phi.value_norm(i));
    for (std::size_t i = 0; i < phi.atoms(); ++i) {
      if (in[i])
        CHECK(std::abs(phi.value_norm(i) - v.level) <= tol * top);
      else
        CHECK(phi.value_norm(i) <= tol * top);
    }
    for (double c : {-3.0, -1.0, 0.5, 10.0}) CHECK(two_valued_check(phi.scaled(c), tol).is_hilbert());
  }
}

TEST_CASE("scale invariance of the verdict on generic fields") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 300; ++t) {
    const Field phi = testing_support::random_field(rng, 2 + t % 4, 1 + t % 3);
    const bool base = two_valued_check(phi).is_hilbert();
    for (double c : {-3.0, -1.0, 0.5, 10.0}) CHECK(two_valued_check(phi.scaled(c)).is_hilbert() == base);
  }
}

TEST_CASE("boundary distance") {
  CHECK(boundary_distance(unit_norm_field()) == 1.0);
  CHECK(boundary_distance(scalar_pair(1.0, 2.0)) == doctest::Approx(0.5));
  CHECK(boundary_distance(scalar_pair(1.0, 1.0 + 1e-6)) == doctest::Approx(1e-6).epsilon(1e-6));
  CHECK(boundary_distance(scalar_pair(1e-5, 1.0)) == doctest::Approx(1e-5).epsilon(1e-6));
}

TEST_CASE("projection_apply") {
  const Field phi = scalar_pair(1.0, 2.0);
  const Field same = projection_apply(phi, phi);
  CHECK(same[0][0] == doctest::Approx(1.0));
  CHECK(same[1][0] == doctest::Approx(2.0));

  const Field ortho = scalar_pair(2.0, -1.0);
  CHECK(projection_apply(phi, ortho).is_zero());

  const Field shifted = projection_apply(phi, phi + ortho.scaled(3.7));
  CHECK(shifted[0][0] == doctest::Approx(1.0));
  CHECK(shifted[1][0] == doctest::Approx(2.0));

  CHECK_THROWS_AS(projection_apply(Field::zeros(ProbSpace({0.5, 0.5}), 1), phi), TrivialError);

  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    const Field g = testing_support::random_field(rng, 2 + t % 5, 1 + t % 3);
    const Field f = testing_support::random_field_on(rng, g.space(), g.dim());
    const Field once = projection_apply(g, f);
    const Field twice = projection_apply(g, once);
    for (std::size_t i = 0; i < g.atoms(); ++i)
      for (std::size_t k = 0; k < g.dim(); ++k)
        CHECK(std::abs(once[i][k] - twice[i][k]) <= 1e-12 * (1.0 + std::abs(once[i][k])));
  }
}

TEST_CASE("projection_pnorm") {
  for (const auto& p : kNonTwo) CHECK(projection_pnorm(unit_norm_field(), p) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(projection_pnorm(scalar_pair(1.0, 2.0), Exponent(2.0)) == doctest::Approx(1.0).epsilon(1e-15));

  // Frozen closed form for the {1, 2} field at p = 4.
  CHECK(projection_pnorm(scalar_pair(1.0, 2.0), Exponent(4.0)) == doctest::Approx(1.0436013016222507).epsilon(1e-14));

  // Numeric maximization of |P f|_p / |f|_p agrees with the closed form.
  std::mt19937_64 rng(24);
  const Field phi = scalar_pair(1.0, 2.0);
  const double dual = testing_support::dual_norm_by_search(phi, 4.0, rng);
  const double numeric = dual * naive_p_norm(phi, 4.0) / naive_inner(phi, phi);
  CHECK(numeric == doctest::Approx(projection_pnorm(phi, Exponent(4.0))).epsilon(1e-6));

  CHECK_THROWS_AS(projection_pnorm(Field::zeros(ProbSpace({1.0}), 1), Exponent(3.0)), TrivialError);

  for (int t = 0; t < 300; ++t) {
    const Field g = testing_support::random_field(rng, 1 + t % 5, 1 + t % 3);
    for (const auto& p : kNonTwo) CHECK(projection_pnorm(g, p) >= 1.0 - 1e-12);
    CHECK(projection_pnorm(g, Exponent(2.0)) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("dual witness") {
  const Field phi = scalar_pair(1.0, 2.0);
  const auto two = dual_witness(phi, Exponent(2.0));
  const double sq = naive_inner(phi, phi);
  CHECK(two.psi[0][0] == doctest::Approx(1.0 / sq));
  CHECK(two.psi[1][0] == doctest::Approx(2.0 / sq));

  // psi attains equality in Hoelder for every phi, two-valued or not.
  for (const Field& f : {unit_norm_field(), phi, expand(make_case_c({1.0, 0.0}, {0.0, 1.0}))}) {
    const auto w = dual_witness(f, Exponent(4.0));
    CHECK(naive_inner(f, w.psi) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(naive_p_norm(w.psi, 4.0 / 3.0) * naive_p_norm(f, 4.0) == doctest::Approx(1.0).epsilon(1e-9));
  }

  // What separates the two: psi is parallel to phi exactly when phi is two-valued,
  // i.e. psi annihilates the hyperplane orthogonal to phi.
  auto off_axis = [](const Field& f, const Field& psi) {
    const Field perp = psi - projection_apply(f, psi);
    return std::sqrt(naive_inner(perp, perp) / naive_inner(psi, psi));
  };
  CHECK(off_axis(phi, dual_witness(phi, Exponent(4.0)).psi) > 0.1);
  CHECK(off_axis(unit_norm_field(), dual_witness(unit_norm_field(), Exponent(4.0)).psi) <= 1e-12);

  // Zero atoms stay zero.
  const Field holes(ProbSpace({0.5, 0.5}), std::vector<Vec>{{0.0, 0.0}, {1.0, 2.0}});
  const auto hw = dual_witness(holes, Exponent(1.5));
  CHECK(hw.psi[0][0] == 0.0);
  CHECK(hw.psi[0][1] == 0.0);

  CHECK_THROWS_AS(dual_witness(phi, Exponent::infinity()), UnsupportedExponentError);
  CHECK_THROWS_AS(dual_witness(Field::zeros(ProbSpace({1.0}), 1), Exponent(3.0)), TrivialError);
}

TEST_CASE("sup-norm witness") {
  const Field phi(ProbSpace({0.25, 0.25, 0.5}), std::vector<Vec>{{3.0, 4.0}, {0.0, 0.0}, {0.0, -2.0}});
  const Field psi = sup_norm_witness(phi);
  CHECK(psi[0][0] == doctest::Approx(0.6));
  CHECK(psi[0][1] == doctest::Approx(0.8));
  CHECK(psi[1][0] == 0.0);
  CHECK(psi[2][1] == doctest::Approx(-1.0));
  // |P_phi psi|_inf = |phi|_1 |phi|_inf / |phi|_2^2 > 1 here (norms 5 and 2).
  CHECK(naive_p_norm(projection_apply(phi, psi), INFINITY) > 1.0);
  const Field flat = unit_norm_field();
  CHECK(naive_p_norm(projection_apply(flat, sup_norm_witness(flat)), INFINITY) == doctest::Approx(1.0));
}

TEST_CASE("gradient_residual") {
  const Field flat = unit_norm_field();
  CHECK(gradient_residual(flat, Exponent(3.0)) <= 1e-12);
  for (const auto& p : kNonTwo) CHECK(gradient_residual(flat, p) <= 1e-9);

  std::mt19937_64 rng(25);
  for (int t = 0; t < 100; ++t) {
    const Field g = testing_support::random_field(rng, 1 + t % 5, 1 + t % 3);
    CHECK(gradient_residual(g, Exponent(2.0)) <= 1e-12);
  }

  const Field phi = scalar_pair(1.0, 2.0);
  const double r = gradient_residual(phi, Exponent(4.0));
  CHECK(r > 0.1);
  for (double c : {-3.0, 0.5, 1e6}) CHECK(gradient_residual(phi.scaled(c), Exponent(4.0)) == doctest::Approx(r));

  // The steepest-descent direction really descends: the one-sided directional
  // derivative along -d, measured by finite differences, is negative.
  const Field d = projected_gradient(phi, Exponent(4.0));
  CHECK(std::abs(naive_inner(d, phi)) <= 1e-12);
  const double h = 1e-6;
  const double slope = (naive_p_norm(phi - d.scaled(h), 4.0) - naive_p_norm(phi, 4.0)) / h;
  CHECK(slope < 0.0);
  CHECK(slope == doctest::Approx(-naive_inner(d, d)).epsilon(1e-4));

  CHECK_THROWS_AS(gradient_residual(Field::zeros(ProbSpace({1.0}), 2), Exponent(3.0)), TrivialError);
}

TEST_CASE("gradient_residual matches the two-valued verdict on random fields") {
  gen::Rng rng(26);
  for (int t = 0; t < 200; ++t) {
    const bool two = t % 2 == 0;
    const Field phi = two ? gen::random_two_valued_field(rng, 2 + t % 4, 1 + t % 3)
                          : gen::random_field(rng, 2 + t % 4, 1 + t % 3);
    if (boundary_distance(phi) <= 1e-3) continue;
    const bool expect = two_valued_check(phi).is_hilbert();
    for (const auto& p : kNonTwo) {
      CAPTURE(p.value());
      CHECK((gradient_residual(phi, p) <= 1e-9) == expect);
      CHECK((std::abs(projection_pnorm(phi, p) - 1.0) <= 1e-9) == expect);
    }
  }
}

TEST_CASE("p-norm gradient against central differences") {
  std::mt19937_64 rng(27);
  for (int t = 0; t < 100; ++t) {
    const Field h = testing_support::random_field(rng, 2 + t % 4, 1 + t % 3);
    for (double p : {1.5, 3.0, 4.0}) {
      const Field g = p_norm_gradient(h, Exponent(p));
      double err = 0.0, ref = 0.0;
      for (std::size_t i = 0; i < h.atoms(); ++i)
        for (std::size_t k = 0; k < h.dim(); ++k) {
          Field plus = h, minus = h;
          plus.mutable_value(i)[k] += 1e-6;
          minus.mutable_value(i)[k] -= 1e-6;
          const double fd = (naive_p_norm(plus, p) - naive_p_norm(minus, p)) / 2e-6;
          const double analytic = h.weight(i) * g[i][k];
          err += (fd - analytic) * (fd - analytic);
          ref += analytic * analytic;
        }
      CHECK(std::sqrt(err / ref) <= 1e-5);
    }
  }
}

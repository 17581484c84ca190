#pragma once

#include <array>
#include <cstddef>
#include <random>
#include <vector>

#include "hilbertp/rademacher.hpp"
#include "hilbertp/space.hpp"

// Random instance generators for property sweeps and the falsification harness.
namespace hilbertp::gen {

using Rng = std::mt19937_64;

Vec random_unit(Rng& rng, std::size_t dim);

// Random orthonormal rows (count <= dim), by Gram-Schmidt on Gaussian vectors.
std::vector<Vec> random_orthonormal(Rng& rng, std::size_t dim, std::size_t count);

// Haar-ish random orthogonal matrix, rows as vectors.
std::vector<Vec> random_rotation(Rng& rng, std::size_t dim);
Vec apply(const std::vector<Vec>& matrix, const Vec& x);

// Random weights bounded away from zero, summing to one.
ProbSpace random_space(Rng& rng, std::size_t atoms);

// Entries uniform in [-spread, spread] on a random (or uniform) space.
Field random_field(Rng& rng, std::size_t atoms, std::size_t dim, double spread = 2.0,
                   bool random_weights = true);

// |phi(w)| takes only the values 0 and c; at least one atom is nonzero.
Field random_two_valued_field(Rng& rng, std::size_t atoms, std::size_t dim, double zero_prob = 0.3,
                              bool random_weights = true);

// Entries drawn from {-1, -0.5, 0, 0.5, 1} plus Gaussian noise of size `noise`
// (0 for exact lattice sums). Never returns the all-zero sum.
RademacherSum random_lattice_sum(Rng& rng, std::size_t k, std::size_t dim, double noise);

// Admissible constructor inputs.
std::vector<Vec> random_case_a_input(Rng& rng, std::size_t dim, std::size_t count);
std::pair<Vec, Vec> random_case_c_input(Rng& rng, std::size_t dim);

// Geometry lemma instances. All satisfy the lemma hypotheses exactly up to
// roundoff; dim must be at least 2 (lemma1a, lemma1b) or `size` (family).
struct HexagonTriple {
  Vec u0, u1, u2, v;  // u1 = -u0/2 + (sqrt3/2) v, u2 = -u0/2 - (sqrt3/2) v
};
HexagonTriple random_lemma1a_triple(Rng& rng, std::size_t dim);

// u1, u2 on the sphere |u0 + u| = |u0| with |u0 + u1 + u2| = |u0|.
std::array<Vec, 3> random_lemma1b_triple(Rng& rng, std::size_t dim);

// u_j = -2 a_j e_j for orthonormal e_j, u0 = sum a_j e_j plus an orthogonal remainder.
std::pair<Vec, std::vector<Vec>> random_flip_family(Rng& rng, std::size_t dim, std::size_t size);

// Random sign flips, permutation and zero padding (symmetries of the classifier).
RademacherSum scramble(Rng& rng, const RademacherSum& s, std::size_t max_padding = 2);

}  // namespace hilbertp::gen

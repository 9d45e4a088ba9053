#pragma once

// Brute-force reference computations used by the tests and the verify suites.
// Everything here works on plain vectors of big integers and shares no code
// with the library routines it is used to check: ranks come from rational
// Gaussian elimination, determinants from cofactor expansion, invariant
// factors from gcds of minors, indices from counting lattice points, cliques
// from subset enumeration.

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace bredim::oracle {

using Vec = std::vector<mpz_class>;
using Rows = std::vector<Vec>;

std::size_t rational_rank(const Rows& rows);
bool in_rational_span(const Rows& rows, const Vec& v);

/// Greedy maximal linearly independent subset, in input order.
Rows independent_rows(const Rows& rows);

/// Coefficients c with c * basis = v, basis rows independent; nullopt if v is
/// outside the rational span.
std::optional<std::vector<mpq_class>> rational_coordinates(const Rows& basis, const Vec& v);
bool in_integer_span(const Rows& basis, const Vec& v);

mpz_class cofactor_determinant(const Rows& square);

/// d_1, ..., d_r with d_i the gcd of all i x i minors, r the rank.
std::vector<mpz_class> determinantal_divisors(const Rows& m);
/// d_i / d_{i-1}: the nonzero Smith invariants.
std::vector<mpz_class> invariant_factors(const Rows& m);

/// Number of integer points in the half-open parallelepiped spanned by the
/// rows of a nonsingular square integer matrix.
mpz_class parallelepiped_count(const Rows& square);

using Adjacency = std::vector<std::vector<bool>>;

/// counts[k] = number of k-vertex cliques, k = 0..clique number. n <= 20.
std::vector<std::size_t> clique_counts_exhaustive(const Adjacency& adj);
std::size_t clique_number_exhaustive(const Adjacency& adj);

/// Free ranks of H_k for the complex with the given boundary matrices
/// (boundaries[k-1] is c_{k-1} x c_k), via ranks over the rationals.
std::vector<std::size_t> rational_betti(const std::vector<std::size_t>& counts, const std::vector<Rows>& boundaries);

mpz_class binomial(unsigned long n, unsigned long k);

} // namespace bredim::oracle

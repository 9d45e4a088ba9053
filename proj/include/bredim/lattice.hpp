#pragma once

// Exact arithmetic on subgroups of Z^n.
//
// A Sublattice always stores its basis in the canonical row Hermite normal
// form: rows in echelon order with strictly increasing pivot columns,
// positive pivots, entries above each pivot reduced into [0, pivot), zero
// rows dropped. Two Sublattice values are equal iff their bases are equal.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bredim/int_matrix.hpp"

namespace bredim::lattice {

struct HermiteResult {
    IntMatrix hnf;       // same shape as the input; zero rows at the bottom
    IntMatrix transform; // unimodular, transform * input == hnf
};

/// Row Hermite normal form with the unimodular transform that produces it.
HermiteResult hermite_normal_form(const IntMatrix& m);

struct SmithResult {
    IntMatrix diagonal; // same shape as the input, d_1 | d_2 | ... , d_i >= 0
    IntMatrix left;     // unimodular, rows x rows
    IntMatrix right;    // unimodular, cols x cols
};

/// left * m * right == diagonal.
SmithResult smith_normal_form(const IntMatrix& m);

/// Nonzero diagonal entries of the Smith form, in divisibility order.
std::vector<Integer> invariant_factors(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Inverse of a unimodular square matrix. Throws InputError when |det| != 1.
IntMatrix unimodular_inverse(const IntMatrix& m);

class Sublattice {
  public:
    /// The zero lattice in Z^n.
    explicit Sublattice(std::size_t ambient_dim = 0);

    static Sublattice from_generators(std::size_t ambient_dim, std::span<const IntVector> generators);
    static Sublattice from_generators(std::size_t ambient_dim, const IntMatrix& generator_rows);
    static Sublattice full(std::size_t ambient_dim);

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t rank() const noexcept { return basis_.rows(); }
    const IntMatrix& basis() const noexcept { return basis_; }
    std::vector<IntVector> basis_vectors() const { return basis_.row_list(); }

    /// Integer coordinates of v in the canonical basis, if v lies in the lattice.
    std::optional<IntVector> coordinates(const IntVector& v) const;
    bool contains(const IntVector& v) const { return coordinates(v).has_value(); }
    bool contains(const Sublattice& other) const;

    friend bool operator==(const Sublattice&, const Sublattice&) = default;

  private:
    Sublattice(std::size_t ambient_dim, IntMatrix canonical_basis);

    std::size_t ambient_dim_;
    IntMatrix basis_;
};

struct IndexResult {
    std::optional<Integer> value; // empty for infinite index

    bool is_finite() const noexcept { return value.has_value(); }
    static IndexResult finite(Integer k) { return IndexResult{std::move(k)}; }
    static IndexResult infinite() { return IndexResult{}; }
    std::string to_string() const;
};

/// [outer : inner]. Requires inner to be contained in outer.
IndexResult index(const Sublattice& inner, const Sublattice& outer);

Sublattice intersect(const Sublattice& a, const Sublattice& b);
Sublattice sum(const Sublattice& a, const Sublattice& b);

/// True iff the intersection has finite index in both.
bool commensurable(const Sublattice& a, const Sublattice& b);

/// The unique direct summand of Z^n of the same rank containing L with finite
/// index: the rational span of L intersected with Z^n.
Sublattice saturation(const Sublattice& l);

/// True iff L is a direct summand of Z^n. Rank-0 input is rejected.
bool is_maximal(const Sublattice& l);

/// N with L (+) N = Z^n. Requires is_maximal(L) (or L == Z^n).
Sublattice direct_complement(const Sublattice& l);

/// Unimodular A (acting on column vectors) with A(L) = T.
IntMatrix mapping_automorphism(const Sublattice& l, const Sublattice& t);

/// Applies A (n x n, column action) to every basis vector and canonicalizes.
Sublattice image(const IntMatrix& a, const Sublattice& l);

// Text format: first line "n r", then r rows of n integers.
// Blank lines and lines starting with '#' are ignored.
struct GeneratorList {
    std::size_t ambient_dim = 0;
    std::vector<IntVector> generators;
};

GeneratorList parse_generators(std::string_view text);
Sublattice parse_lattice(std::string_view text);
std::string format_lattice(const Sublattice& l);
std::string format_matrix(const IntMatrix& m);

} // namespace bredim::lattice
